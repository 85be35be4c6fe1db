#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "relchar/perm_group.hpp"

namespace relchar {

/// A subgroup of a fixed parent group: generators plus the sorted member set.
///
/// The member list in parent ids lines up with the element ids of the
/// subgroup viewed as a group in its own right (both follow lexicographic
/// order of image arrays), so local id i corresponds to members()[i].
class Subgroup {
 public:
  Subgroup() = default;
  /// members must be sorted and closed; callers inside the library
  /// guarantee this, use generated_subgroup() otherwise.
  Subgroup(GroupPtr parent, std::vector<ElemId> generators, std::vector<ElemId> members);

  static Subgroup whole(GroupPtr g);
  static Subgroup trivial(GroupPtr g);

  const GroupPtr& parent() const { return parent_; }
  const PermGroup& group() const { return *parent_; }
  const std::vector<ElemId>& generators() const { return generators_; }
  const std::vector<ElemId>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }
  bool contains(ElemId x) const { return mask_[x]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_proper_subset_of(const Subgroup& other) const {
    return order() < other.order() && is_subset_of(other);
  }

  /// Set when normality in the parent has been verified.
  bool normal_flag() const { return normal_; }
  Subgroup& mark_normal(bool v = true) {
    normal_ = v;
    return *this;
  }

  /// The subgroup as a permutation group on the parent's points (cached,
  /// thread-safe).
  GroupPtr as_group() const;
  ElemId to_parent(ElemId local) const { return members_[local]; }
  ElemId to_local(ElemId parent_id) const;

  /// Generators written as words in the parent's generators.
  std::vector<std::string> generator_words() const;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  bool operator<(const Subgroup& o) const {
    if (order() != o.order()) return order() < o.order();
    return members_ < o.members_;
  }

 private:
  struct Cache {
    std::once_flag once;
    GroupPtr group;
  };
  GroupPtr parent_;
  std::vector<ElemId> generators_;
  std::vector<ElemId> members_;
  std::vector<bool> mask_;
  bool normal_ = false;
  std::shared_ptr<Cache> cache_;
};

}  // namespace relchar
