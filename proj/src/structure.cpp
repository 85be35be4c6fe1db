#include "relchar/structure.hpp"

#include <algorithm>
#include <numeric>

#include "relchar/epimorphism.hpp"
#include "relchar/error.hpp"

namespace relchar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw InputError("p_part of zero");
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  std::uint64_t r = 1;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

bool is_prime_power_of(std::uint64_t m, std::uint64_t p) { return p_part(m, p) == m; }

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

/// Closure of seeds under multiplication; returns sorted members.
std::vector<ElemId> closure(const PermGroup& g, std::span<const ElemId> gens,
                            std::vector<bool>* mask_out = nullptr) {
  std::vector<bool> mask(g.order(), false);
  std::vector<ElemId> list{PermGroup::identity()};
  mask[PermGroup::identity()] = true;
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (ElemId s : gens) {
      ElemId y = g.mul(list[head], s);
      if (!mask[y]) {
        mask[y] = true;
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  if (mask_out) *mask_out = std::move(mask);
  return list;
}

/// Greedy generating set for an already-closed member list.
std::vector<ElemId> small_generating_set(const PermGroup& g, const std::vector<ElemId>& members) {
  std::vector<ElemId> gens;
  std::vector<bool> have(g.order(), false);
  have[PermGroup::identity()] = true;
  std::size_t count = 1;
  // Prefer high-order elements so few generators are needed.
  std::vector<ElemId> order_sorted = members;
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&](ElemId a, ElemId b) { return g.elem_order(a) > g.elem_order(b); });
  for (ElemId x : order_sorted) {
    if (count == members.size()) break;
    if (have[x]) continue;
    gens.push_back(x);
    auto cl = closure(g, gens, &have);
    count = cl.size();
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::vector<ElemId> dedup_gens(std::vector<ElemId> v) {
  std::vector<ElemId> out;
  for (ElemId x : v)
    if (x != PermGroup::identity() && std::find(out.begin(), out.end(), x) == out.end())
      out.push_back(x);
  return out;
}

Subgroup from_members(const GroupPtr& g, std::vector<ElemId> members) {
  auto gens = small_generating_set(*g, members);
  return Subgroup(g, std::move(gens), std::move(members));
}

}  // namespace

Subgroup subgroup_from_members(const GroupPtr& g, std::vector<ElemId> members) {
  return from_members(g, std::move(members));
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const ElemId> seeds) {
  for (ElemId s : seeds)
    if (s >= g->order()) throw InputError("invalid element id " + std::to_string(s));
  auto gens = dedup_gens({seeds.begin(), seeds.end()});
  auto members = closure(*g, gens);
  return Subgroup(g, std::move(gens), std::move(members));
}

Subgroup normal_closure_in(const Subgroup& within, std::span<const ElemId> seeds) {
  const PermGroup& g = within.group();
  for (ElemId s : seeds)
    if (s >= g.order() || !within.contains(s))
      throw InputError("invalid element id " + std::to_string(s));
  auto gens = dedup_gens({seeds.begin(), seeds.end()});
  std::vector<bool> mask;
  auto members = closure(g, gens, &mask);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i)
      for (ElemId w : within.generators()) {
        ElemId c = g.conj(gens[i], w);
        if (!mask[c]) {
          gens.push_back(c);
          members = closure(g, gens, &mask);
          grew = true;
          break;
        }
      }
  }
  Subgroup out(within.parent(), std::move(gens), std::move(members));
  if (within.is_whole()) out.mark_normal();
  return out;
}

Subgroup normal_closure(const GroupPtr& g, std::span<const ElemId> seeds) {
  return normal_closure_in(Subgroup::whole(g), seeds);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  std::vector<ElemId> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  auto s = generated_subgroup(a.parent(), gens);
  if (a.normal_flag() && b.normal_flag()) s.mark_normal();
  return s;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElemId> m;
  for (ElemId x : a.members())
    if (b.contains(x)) m.push_back(x);
  auto s = from_members(a.parent(), std::move(m));
  if (a.normal_flag() && b.normal_flag()) s.mark_normal();
  return s;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const PermGroup& g = a.group();
  std::vector<ElemId> seeds;
  for (ElemId x : a.generators())
    for (ElemId y : b.generators()) seeds.push_back(g.commutator(x, y));
  auto s = normal_closure_in(join(a, b), seeds);
  if (a.normal_flag() && b.normal_flag()) s.mark_normal();
  return s;
}

Subgroup derived_subgroup(const Subgroup& n) { return commutator_subgroup(n, n); }

Subgroup center(const Subgroup& w) {
  const PermGroup& g = w.group();
  std::vector<ElemId> m;
  for (ElemId x : w.members())
    if (std::all_of(w.generators().begin(), w.generators().end(),
                    [&](ElemId s) { return g.mul(x, s) == g.mul(s, x); }))
      m.push_back(x);
  auto s = from_members(w.parent(), std::move(m));
  if (w.normal_flag()) s.mark_normal();
  return s;
}

bool normalizes(const Subgroup& w, const Subgroup& h) {
  const PermGroup& g = w.group();
  for (ElemId x : w.generators())
    for (ElemId y : h.generators())
      if (!h.contains(g.conj(y, x))) return false;
  return true;
}

Subgroup normalizer(const Subgroup& w, const Subgroup& h) {
  const PermGroup& g = w.group();
  std::vector<ElemId> m;
  for (ElemId x : w.members())
    if (std::all_of(h.generators().begin(), h.generators().end(),
                    [&](ElemId y) { return h.contains(g.conj(y, x)); }))
      m.push_back(x);
  return from_members(w.parent(), std::move(m));
}

bool is_normal(const Subgroup& h) { return normalizes(Subgroup::whole(h.parent()), h); }

bool is_abelian(const Subgroup& w) {
  const PermGroup& g = w.group();
  const auto& gens = w.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_p_group(const Subgroup& w, std::uint64_t p) {
  require_prime(p);
  return is_prime_power_of(w.order(), p);
}

DerivedSeriesResult derived_series(const Subgroup& n) {
  DerivedSeriesResult r{{SeriesKind::Derived, {n}}, std::nullopt};
  for (;;) {
    const Subgroup& cur = r.series.terms.back();
    if (cur.is_trivial()) {
      r.derived_length = static_cast<int>(r.series.terms.size()) - 1;
      return r;
    }
    Subgroup next = derived_subgroup(cur);
    if (next == cur) return r;
    r.series.terms.push_back(std::move(next));
  }
}

bool is_solvable(const Subgroup& n) { return derived_series(n).derived_length.has_value(); }

int derived_length(const Subgroup& n) {
  auto r = derived_series(n);
  if (!r.derived_length) throw InputError("derived length of a nonsolvable group");
  return *r.derived_length;
}

LowerCentralResult lower_central_series(const Subgroup& n) {
  NormalSeries s{SeriesKind::LowerCentral, {n}};
  for (;;) {
    const Subgroup& cur = s.terms.back();
    if (cur.is_trivial()) break;
    Subgroup next = commutator_subgroup(cur, n);
    if (next == cur) break;
    s.terms.push_back(std::move(next));
  }
  Subgroup residual = s.terms.back();
  if (!(commutator_subgroup(residual, n) == residual))
    throw Defect("lower central series residual is not perfect relative to N");
  bool nil = residual.is_trivial();
  return {std::move(s), nil, std::move(residual)};
}

bool is_nilpotent(const Subgroup& n) { return lower_central_series(n).nilpotent; }

Subgroup sylow_subgroup(const Subgroup& w, std::uint64_t p) {
  require_prime(p);
  const PermGroup& g = w.group();
  const std::size_t target = p_part(w.order(), p);
  Subgroup P = Subgroup::trivial(w.parent());
  while (P.order() < target) {
    Subgroup nm = normalizer(w, P);
    bool grown = false;
    for (ElemId y : nm.members()) {
      if (P.contains(y)) continue;
      // order of yP in N(P)/P
      std::uint64_t k = 1;
      ElemId yk = y;
      while (!P.contains(yk)) {
        yk = g.mul(yk, y);
        ++k;
      }
      if (k % p) continue;
      ElemId x = g.pow(y, static_cast<long long>(k / p));
      std::vector<ElemId> gens = P.generators();
      gens.push_back(x);
      P = generated_subgroup(w.parent(), gens);
      grown = true;
      break;
    }
    if (!grown) throw Defect("Sylow ascent stalled");
  }
  return P;
}

Subgroup o_p(const Subgroup& w, std::uint64_t p) {
  const PermGroup& g = w.group();
  Subgroup P = sylow_subgroup(w, p);
  std::vector<bool> core(g.order(), false);
  for (ElemId x : P.members()) core[x] = true;
  for (ElemId c : w.members()) {
    for (ElemId x : P.members())
      if (core[x] && !P.contains(g.conj(x, c))) core[x] = false;
  }
  // core[x] now says x^c in P for all c, i.e. x in the intersection of conjugates
  std::vector<ElemId> m;
  for (ElemId x : P.members())
    if (core[x]) m.push_back(x);
  auto s = from_members(w.parent(), std::move(m));
  if (w.normal_flag()) s.mark_normal();
  return s;
}

Subgroup fitting_subgroup(const Subgroup& w) {
  Subgroup f = Subgroup::trivial(w.parent());
  for (std::uint64_t p : prime_divisors(w.order())) f = join(f, o_p(w, p));
  if (w.normal_flag()) f.mark_normal();
  return f;
}

int fitting_height(const Subgroup& w) {
  if (!is_solvable(w)) throw InputError("Fitting height of a nonsolvable group");
  int h = 0;
  Subgroup cur = Subgroup::whole(w.as_group());
  while (!cur.is_trivial()) {
    Subgroup f = fitting_subgroup(cur);
    ++h;
    if (f == cur) break;
    cur = Subgroup::whole(coset_action(f).image);
  }
  return h;
}

Subgroup o_p_residual(const Subgroup& w, std::uint64_t p) {
  require_prime(p);
  const PermGroup& g = w.group();
  std::vector<ElemId> seeds;
  for (ElemId x : w.members())
    if (g.elem_order(x) % p != 0) seeds.push_back(x);
  auto s = generated_subgroup(w.parent(), seeds);
  auto out = from_members(w.parent(), s.members());
  if (w.normal_flag()) out.mark_normal();
  return out;
}

std::optional<Subgroup> normal_p_complement(const Subgroup& w, std::uint64_t p) {
  Subgroup r = o_p_residual(w, p);
  if (r.order() * p_part(w.order(), p) == w.order()) return r;
  return std::nullopt;
}

bool has_normal_p_complement(const Subgroup& w, std::uint64_t p) {
  return normal_p_complement(w, p).has_value();
}

ConjugacyPartition conjugacy_partition(const PermGroup& g) {
  constexpr std::uint32_t kNone = ~0u;
  ConjugacyPartition out;
  out.class_of.assign(g.order(), kNone);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != kNone) continue;
    auto idx = static_cast<std::uint32_t>(out.classes.size());
    std::vector<ElemId> cls{x};
    out.class_of[x] = idx;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (ElemId s : g.generator_ids()) {
        ElemId y = g.conj(cls[head], s);
        if (out.class_of[y] == kNone) {
          out.class_of[y] = idx;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace relchar
