#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relchar/config.hpp"
#include "relchar/structure.hpp"

namespace relchar {

/// All normal subgroups of g (inside `within` when given), sorted by order
/// then member ids. Built by closing the normal closures of conjugacy
/// classes under joins.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       const std::optional<Subgroup>& within = std::nullopt);

/// The normal-subgroup lattice of a group with its covering relation.
class NormalLattice {
 public:
  explicit NormalLattice(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t index_of(const Subgroup& s) const;
  /// Indices of K with Y < K and K/Y minimal normal in G/Y.
  const std::vector<std::size_t>& covers(std::size_t y) const { return covers_[y]; }
  std::vector<Subgroup> minimal_normal() const;
  /// Every (Y, X) pair with X/Y a chief factor of G.
  std::vector<std::pair<std::size_t, std::size_t>> chief_factors() const;

 private:
  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<std::size_t>> covers_;
};

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g);

/// Chief series refining `through` (normal subgroups of g, any order).
/// Ties go to the smallest minimal normal subgroup, then smallest member
/// list. Terms are descending, from g to 1.
NormalSeries chief_series(const GroupPtr& g, const std::vector<Subgroup>& through = {});

/// Chief factor X/Y is abelian iff X' <= Y; then it is elementary abelian.
bool is_p_solvable(const GroupPtr& g, std::uint64_t p);
bool is_solvable_group(const GroupPtr& g);

/// Every subgroup of g, by repeatedly joining with cyclic subgroups,
/// layered by order. Throws GuardExceeded above guards.max_subgroup_enum.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const Guards& guards = {});

}  // namespace relchar
