#include "relchar/subgroup.hpp"

#include <algorithm>

#include "relchar/error.hpp"

namespace relchar {

Subgroup::Subgroup(GroupPtr parent, std::vector<ElemId> generators, std::vector<ElemId> members)
    : parent_(std::move(parent)),
      generators_(std::move(generators)),
      members_(std::move(members)),
      mask_(parent_->order(), false),
      cache_(std::make_shared<Cache>()) {
  for (ElemId m : members_) mask_[m] = true;
}

Subgroup Subgroup::whole(GroupPtr g) {
  std::vector<ElemId> all = enumerate_elements(*g);
  auto gens = g->generator_ids();
  Subgroup s(std::move(g), std::move(gens), std::move(all));
  s.normal_ = true;
  return s;
}

Subgroup Subgroup::trivial(GroupPtr g) {
  Subgroup s(std::move(g), {}, {PermGroup::identity()});
  s.normal_ = true;
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](ElemId x) { return other.contains(x); });
}

GroupPtr Subgroup::as_group() const {
  if (is_whole()) return parent_;
  std::call_once(cache_->once, [this] {
    std::vector<Permutation> gens;
    for (ElemId g : generators_)
      if (g != PermGroup::identity()) gens.push_back(parent_->element(g));
    std::string nm = parent_->name().empty() ? "" : parent_->name() + ".sub" + std::to_string(order());
    cache_->group = std::make_shared<const PermGroup>(parent_->degree(), std::move(gens), nm,
                                                      order() + 1);
    if (cache_->group->order() != order()) throw Defect("subgroup generators do not match members");
  });
  return cache_->group;
}

ElemId Subgroup::to_local(ElemId parent_id) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), parent_id);
  if (it == members_.end() || *it != parent_id) throw InputError("element not in subgroup");
  return static_cast<ElemId>(it - members_.begin());
}

std::vector<std::string> Subgroup::generator_words() const {
  std::vector<std::string> out;
  for (ElemId g : generators_) out.push_back(parent_->word_string(g));
  return out;
}

}  // namespace relchar
