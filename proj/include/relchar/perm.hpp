#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace relchar {

using Point = std::uint16_t;

/// Permutation of {0..degree-1}, stored as a dense image array.
/// External formats are 1-based; conversion happens at the I/O boundary.
/// Products act on the right: x^(ab) = (x^a)^b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Validates a 1-based image row; throws InputError naming the duplicated
  /// or out-of-range point.
  static Permutation from_one_based(std::span<const long long> row);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }
  std::vector<long long> one_based() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;

  /// lcm of cycle lengths.
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation, 1-based, e.g. "(1,2,3)(4,5)".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

std::uint64_t element_order(const Permutation& g);

}  // namespace relchar
