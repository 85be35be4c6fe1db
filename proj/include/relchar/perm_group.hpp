#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "relchar/perm.hpp"

namespace relchar {

using ElemId = std::uint32_t;

/// A finite permutation group together with its full element table.
///
/// Elements are enumerated eagerly at construction by breadth-first closure
/// under right multiplication by generators, then assigned ids in
/// lexicographic order of their image arrays. Id 0 is always the identity.
/// Once constructed the object is immutable and may be shared across
/// threads.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultMaxElements = 100000;
  /// Groups up to this order get a full Cayley table.
  static constexpr std::size_t kCayleyLimit = 2048;

  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {},
            std::size_t max_elements = kDefaultMaxElements);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElemId>& generator_ids() const { return generator_ids_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }

  std::span<const Point> images(ElemId id) const {
    return {storage_.data() + std::size_t{id} * degree_, degree_};
  }
  Permutation element(ElemId id) const;
  std::optional<ElemId> find(const Permutation& p) const;
  std::optional<ElemId> find(std::span<const Point> images) const;
  /// Throws InputError when p is not an element.
  ElemId id_of(const Permutation& p) const;

  static constexpr ElemId identity() { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId pow(ElemId a, long long k) const;
  /// b^-1 a b
  ElemId conj(ElemId a, ElemId b) const { return mul(mul(inv(b), a), b); }
  /// a^-1 b^-1 a b
  ElemId commutator(ElemId a, ElemId b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::uint64_t elem_order(ElemId a) const { return orders_[a]; }

  /// Shortest word in the generators (1-based generator indices) reaching
  /// the element along the enumeration tree.
  std::vector<int> word(ElemId id) const;
  std::string word_string(ElemId id) const;

 private:
  void enumerate(std::size_t max_elements);
  ElemId slow_mul(ElemId a, ElemId b) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
  std::size_t order_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<Point> storage_;
  std::unordered_map<std::u16string, ElemId> index_;
  std::vector<ElemId> generator_ids_;
  std::vector<ElemId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElemId> tree_parent_;
  std::vector<int> tree_gen_;
  std::vector<ElemId> cayley_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// All elements sorted by id; equivalent to 0..order-1.
std::vector<ElemId> enumerate_elements(const PermGroup& g);

}  // namespace relchar
