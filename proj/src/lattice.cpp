#include "relchar/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relchar/error.hpp"

namespace relchar {

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const std::optional<Subgroup>& within) {
  Subgroup whole = Subgroup::whole(g);
  if (within && !normalizes(whole, *within)) throw InputError("`within` is not normal");
  const Subgroup& bound = within ? *within : whole;

  auto part = conjugacy_partition(*g);
  std::vector<Subgroup> class_closures;
  std::set<std::vector<ElemId>> seen_closure;
  for (const auto& cls : part.classes) {
    if (cls.front() == PermGroup::identity() || !bound.contains(cls.front())) continue;
    Subgroup s = subgroup_from_members(g, generated_subgroup(g, cls).members());
    s.mark_normal();
    if (seen_closure.insert(s.members()).second) class_closures.push_back(std::move(s));
  }

  std::map<std::vector<ElemId>, std::size_t> seen;
  std::vector<Subgroup> all;
  auto add = [&](Subgroup s) {
    if (seen.contains(s.members())) return false;
    seen.emplace(s.members(), all.size());
    all.push_back(std::move(s));
    return true;
  };
  add(Subgroup::trivial(g));
  for (const auto& c : class_closures) add(c);
  for (std::size_t head = 1; head < all.size(); ++head) {
    for (const auto& c : class_closures) {
      if (c.is_subset_of(all[head])) continue;
      Subgroup j = join(all[head], c);
      j.mark_normal();
      add(std::move(j));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

NormalLattice::NormalLattice(const GroupPtr& g) : group_(g), subgroups_(normal_subgroups(g)) {
  const std::size_t n = subgroups_.size();
  covers_.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<std::size_t> above;
    for (std::size_t k = 0; k < n; ++k)
      if (subgroups_[y].is_proper_subset_of(subgroups_[k])) above.push_back(k);
    for (std::size_t k : above) {
      bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t l) {
        return subgroups_[l].is_proper_subset_of(subgroups_[k]);
      });
      if (minimal) covers_[y].push_back(k);
    }
  }
}

std::size_t NormalLattice::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), s);
  if (it == subgroups_.end() || !(*it == s)) throw InputError("subgroup is not normal");
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<Subgroup> NormalLattice::minimal_normal() const {
  std::vector<Subgroup> out;
  for (std::size_t k : covers_[0]) out.push_back(subgroups_[k]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> NormalLattice::chief_factors() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t y = 0; y < covers_.size(); ++y)
    for (std::size_t x : covers_[y]) out.emplace_back(y, x);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g) {
  return NormalLattice(g).minimal_normal();
}

NormalSeries chief_series(const GroupPtr& g, const std::vector<Subgroup>& through) {
  NormalLattice lat(g);
  const auto& subs = lat.subgroups();
  std::vector<std::size_t> chain;
  for (const auto& t : through) {
    if (!normalizes(Subgroup::whole(g), t)) throw InputError("chain term is not normal");
    chain.push_back(lat.index_of(t));
  }
  chain.push_back(subs.size() - 1);
  std::sort(chain.begin(), chain.end(),
            [&](std::size_t a, std::size_t b) { return subs[a] < subs[b]; });
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!subs[chain[i - 1]].is_subset_of(subs[chain[i]]))
      throw InputError("given subgroups do not form a chain");

  std::vector<Subgroup> ascending{subs[0]};
  std::size_t cur = 0;
  for (std::size_t target : chain) {
    while (!(subs[cur] == subs[target])) {
      std::optional<std::size_t> pick;
      for (std::size_t k : lat.covers(cur)) {
        if (!subs[k].is_subset_of(subs[target])) continue;
        if (!pick || subs[k] < subs[*pick]) pick = k;
      }
      if (!pick) throw Defect("chief series refinement failed");
      cur = *pick;
      ascending.push_back(subs[cur]);
    }
  }
  std::reverse(ascending.begin(), ascending.end());
  return {SeriesKind::Chief, std::move(ascending)};
}

bool is_p_solvable(const GroupPtr& g, std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  auto cs = chief_series(g);
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    std::size_t f = cs.terms[i].order() / cs.terms[i + 1].order();
    if (f % p == 0 && !is_prime_power_of(f, p)) return false;
  }
  return true;
}

bool is_solvable_group(const GroupPtr& g) { return is_solvable(Subgroup::whole(g)); }

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const Guards& guards) {
  if (g->order() > guards.max_subgroup_enum)
    throw GuardExceeded("subgroup enumeration guard of " +
                            std::to_string(guards.max_subgroup_enum) + " exceeded",
                        0);
  std::map<std::vector<ElemId>, std::size_t> seen;
  std::vector<Subgroup> cyclic;
  for (ElemId x = 0; x < g->order(); ++x) {
    ElemId seed[] = {x};
    Subgroup c = generated_subgroup(g, seed);
    if (seen.emplace(c.members(), cyclic.size()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> all = cyclic;
  // Every subgroup is a join of cyclic subgroups; grow breadth-first.
  for (std::size_t head = 0; head < all.size(); ++head) {
    for (const auto& c : cyclic) {
      if (c.is_subset_of(all[head])) continue;
      std::vector<ElemId> gens = all[head].generators();
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
      Subgroup j = generated_subgroup(g, gens);
      if (seen.contains(j.members())) continue;
      seen.emplace(j.members(), all.size());
      all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace relchar
