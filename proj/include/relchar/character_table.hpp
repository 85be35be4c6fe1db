#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "relchar/config.hpp"
#include "relchar/cyclotomic.hpp"
#include "relchar/subgroup.hpp"

namespace relchar {

/// Conjugacy classes with sizes, power maps and the inverse map.
struct ClassData {
  GroupPtr group;
  /// Ordered by smallest member id; class 0 is the identity.
  std::vector<std::vector<ElemId>> classes;
  std::vector<ElemId> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> rep_orders;
  std::vector<std::uint32_t> class_of;
  /// prime -> class of g^prime, for every prime up to the exponent.
  std::map<std::uint64_t, std::vector<std::uint32_t>> power_maps;
  std::vector<std::uint32_t> inverse_map;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t group_order() const { return group->order(); }
  std::size_t centralizer_order(std::size_t k) const { return group_order() / sizes[k]; }
  /// Class of rep_k^j for any integer j.
  std::uint32_t power_class(std::size_t k, long long j) const;
};

using ClassDataPtr = std::shared_ptr<const ClassData>;

ClassDataPtr conjugacy_classes(const GroupPtr& g);

/// a_ijk: pairs (x, y) in C_i x C_j with xy equal to the representative of C_k.
std::uint64_t class_mult_coefficient(const ClassData& cd, std::size_t i, std::size_t j, std::size_t k);

/// Exact table of irreducible characters.
class CharacterTable {
 public:
  CharacterTable(ClassDataPtr classes, std::vector<std::vector<Cyclotomic>> rows,
                 std::uint64_t prime, std::uint64_t root);

  const ClassData& classes() const { return *classes_; }
  const ClassDataPtr& class_data() const { return classes_; }
  const GroupPtr& group() const { return classes_->group; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Cyclotomic>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<Cyclotomic>>& rows() const { return rows_; }
  long degree(std::size_t i) const { return degrees_[i]; }
  std::uint64_t dixon_prime() const { return prime_; }
  std::uint64_t exponent() const { return classes_->group->exponent(); }
  /// Primitive exponent-th root of unity mod the Dixon prime used to lift.
  std::uint64_t dixon_root() const { return root_; }
  std::size_t trivial_index() const;
  std::optional<std::size_t> find_row(const std::vector<Cyclotomic>& values) const;

 private:
  ClassDataPtr classes_;
  std::vector<std::vector<Cyclotomic>> rows_;
  std::vector<long> degrees_;
  std::uint64_t prime_;
  std::uint64_t root_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Dixon-Schneider: common eigenvectors of the class matrices over F_q,
/// q the smallest prime above |G| with q = 1 mod exponent, then an exact
/// lift of each value through eigenvalue multiplicities.
TablePtr character_table(const GroupPtr& g, const Guards& guards = {});

struct OrthogonalityReport {
  bool degree_sum = false;
  bool square = false;
  bool first = false;
  bool second = false;
  bool ok() const { return degree_sum && square && first && second; }
};
/// Exact check of sum of squared degrees, row/class count and both
/// orthogonality relations.
OrthogonalityReport check_orthogonality(const CharacterTable& t);

/// Tables for a parent group and its subgroups, keyed by member set.
class TableCache {
 public:
  explicit TableCache(GroupPtr parent, Guards guards = {}) : parent_(std::move(parent)), guards_(guards) {}
  TablePtr table();
  TablePtr table_of(const Subgroup& h);
  const GroupPtr& parent() const { return parent_; }
  const Guards& guards() const { return guards_; }

 private:
  GroupPtr parent_;
  Guards guards_;
  std::mutex mu_;
  TablePtr whole_;
  std::map<std::vector<ElemId>, TablePtr> subs_;
};

}  // namespace relchar
