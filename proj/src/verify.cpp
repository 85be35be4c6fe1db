#include "relchar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "relchar/error.hpp"
#include "relchar/structure.hpp"

namespace relchar {

using nlohmann::json;

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"T3.1", "C3.2", "C3.3", "T4.1", "L4.2", "C4.3",
                                               "C4.4", "T4.5", "L4.6", "L5.1", "L5.2", "T5.3",
                                               "TB",   "TC",   "TD",   "T6.1", "T6.2", "C6.3"};
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Inapplicable:
      return "Inapplicable";
    case Status::Pass:
      return "Pass";
    case Status::Fail:
      return "Fail";
    case Status::Skipped:
      return "Skipped";
  }
  return "?";
}

GroupContext::GroupContext(std::string name, GroupPtr g, Guards guards)
    : name_(std::move(name)), group_(g), guards_(guards), cache_(g, guards), lattice_(g) {}

const RelativeDegreeData& GroupContext::rel(const Subgroup& n) {
  auto it = rel_.find(n.members());
  if (it != rel_.end()) return it->second;
  return rel_.emplace(n.members(), irr_rel(table(), n)).first->second;
}

bool GroupContext::solvable() {
  if (!solvable_) solvable_ = is_solvable(Subgroup::whole(group_));
  return *solvable_;
}

bool GroupContext::p_solvable(std::uint64_t p) {
  auto it = p_solvable_.find(p);
  if (it != p_solvable_.end()) return it->second;
  return p_solvable_[p] = is_p_solvable(group_, p);
}

bool GroupContext::nilpotent(const Subgroup& s) {
  auto it = nilpotent_.find(s.members());
  if (it != nilpotent_.end()) return it->second;
  return nilpotent_[s.members()] = is_nilpotent(s);
}

std::optional<int> GroupContext::derived_len(const Subgroup& s) {
  auto it = derived_len_.find(s.members());
  if (it != derived_len_.end()) return it->second;
  return derived_len_[s.members()] = derived_series(s).derived_length;
}

const Subgroup& GroupContext::kernel(std::size_t row) {
  if (kernels_.empty()) kernels_.resize(table()->size());
  if (!kernels_[row]) kernels_[row] = kernel_of(row_function(*table(), row));
  return *kernels_[row];
}

const Subgroup& GroupContext::vanishing(std::size_t row) {
  if (vanishing_.empty()) vanishing_.resize(table()->size());
  if (!vanishing_[row]) vanishing_[row] = vanishing_off(row_function(*table(), row));
  return *vanishing_[row];
}

const std::vector<Subgroup>* GroupContext::all_subgroups(std::string* why) {
  if (!subgroups_tried_) {
    subgroups_tried_ = true;
    try {
      subgroups_ = enumerate_subgroups(group_, guards_);
    } catch (const GuardExceeded& e) {
      subgroups_error_ = e.what();
    }
  }
  if (!subgroups_error_.empty()) {
    if (why) *why = subgroups_error_;
    return nullptr;
  }
  return &subgroups_;
}

namespace {

struct Verdict {
  Status status;
  std::string reason;
  json witness;
};

Verdict pass(json w = nullptr) { return {Status::Pass, "", std::move(w)}; }
Verdict inapplicable(std::string why) { return {Status::Inapplicable, std::move(why), nullptr}; }
Verdict fail(std::string why, json w) { return {Status::Fail, std::move(why), std::move(w)}; }

bool contains(const std::vector<long>& v, long x) { return std::find(v.begin(), v.end(), x) != v.end(); }

bool strict_subset(const std::vector<long>& small, const std::vector<long>& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

json dl_json(const std::optional<int>& d) { return d ? json(*d) : json(nullptr); }

Subgroup derived_normal(const Subgroup& n) {
  Subgroup d = derived_subgroup(n);
  d.mark_normal();
  return d;
}

Verdict check_t3_1(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  const auto& t = *ctx.table();
  Subgroup np = derived_normal(n);
  const auto cdp = ctx.rel(np).degrees;
  json primes = json::array();
  for (std::uint64_t p : prime_divisors(ctx.group()->order())) {
    auto c = normal_p_complement(n, p);
    if (!c || !is_abelian(*c)) continue;
    std::uint64_t best = 0;
    for (std::size_t i : d.members) {
      auto pp = p_part(static_cast<std::uint64_t>(t.degree(i)), p);
      if (best == 0 || pp < best) best = pp;
    }
    for (std::size_t i : d.members)
      if (p_part(static_cast<std::uint64_t>(t.degree(i)), p) == best && !kernel_contains(t, i, np))
        return fail("N' not contained in the kernel of a character minimizing the p-part",
                    {{"p", p}, {"row", i}, {"degree", t.degree(i)}, {"derived_order", np.order()}});
    if (!strict_subset(cdp, d.degrees))
      return fail("cd(G|N') is not a proper subset of cd(G|N)", {{"p", p}, {"cd", d.degrees}, {"cd_derived", cdp}});
    primes.push_back({{"p", p}, {"min_p_part", best}});
  }
  if (primes.empty()) return inapplicable("N has no abelian normal p-complement");
  return pass({{"primes", primes}, {"cd", d.degrees}, {"cd_derived", cdp}});
}

Verdict check_c3_2(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  if (d.degrees.size() > 1) return inapplicable("|cd(G|N)| > 1");
  auto dl = ctx.derived_len(n);
  json w{{"cd", d.degrees}, {"dl", dl_json(dl)}};
  if (!dl || *dl > static_cast<int>(d.degrees.size())) return fail("dl N exceeds |cd(G|N)|", w);
  return pass(w);
}

Verdict check_c3_3(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.nilpotent(n)) return inapplicable("N is not nilpotent");
  const auto& d = ctx.rel(n);
  auto dl = ctx.derived_len(n);
  json w{{"cd", d.degrees}, {"dl", dl_json(dl)}};
  if (!dl || *dl > static_cast<int>(d.degrees.size())) return fail("dl N exceeds |cd(G|N)|", w);
  return pass(w);
}

Verdict check_t4_1(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  const auto& t = *ctx.table();
  const auto& subs = ctx.lattice().subgroups();
  std::size_t factors = 0;
  std::size_t rows = 0;
  for (std::size_t i : d.members) {
    if (t.degree(i) != *d.max) continue;
    ++rows;
    Subgroup k0 = intersection(n, ctx.kernel(i));
    if (!ctx.nilpotent(k0))
      return fail("N ∩ ker χ is not nilpotent", {{"row", i}, {"degree", t.degree(i)}, {"intersection_order", k0.order()}});
    for (auto [yi, xi] : ctx.lattice().chief_factors()) {
      const Subgroup& m = subs[yi];
      const Subgroup& k = subs[xi];
      if (!m.is_subset_of(k0) || !commutator_subgroup(k, k).is_subset_of(m)) continue;
      ++factors;
      if (!ctx.nilpotent(k))
        return fail("abelian chief factor K/M below N ∩ ker χ with K not nilpotent",
                    {{"row", i}, {"K_order", k.order()}, {"M_order", m.order()}});
    }
  }
  return pass({{"max", *d.max}, {"rows", rows}, {"chief_factors", factors}});
}

Verdict check_l4_2(GroupContext& ctx, const Subgroup& n) {
  const auto& t = *ctx.table();
  std::size_t instances = 0;
  for (const auto& k : ctx.normals()) {
    if (k.is_trivial() || !k.is_subset_of(n)) continue;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Subgroup& ker = ctx.kernel(i);
      if (!intersection(k, ctx.vanishing(i)).is_subset_of(ker)) continue;
      ++instances;
      if (!k.is_subset_of(ker))
        return fail("K ∩ V(χ) ⊆ ker χ but K ⊄ ker χ",
                    {{"row", i}, {"K_order", k.order()}, {"V_order", ctx.vanishing(i).order()}, {"ker_order", ker.order()}});
    }
  }
  if (instances == 0) return inapplicable("no (χ, K) with K ∩ V(χ) ⊆ ker χ");
  return pass({{"instances", instances}});
}

Verdict check_c4_3(GroupContext& ctx, const Subgroup& n) {
  if (!is_solvable(n)) return inapplicable("N is not solvable");
  const auto& d = ctx.rel(n);
  Subgroup f = fitting_subgroup(n);
  f.mark_normal();
  auto mod = cd_rel_mod(ctx.table(), n, f);
  json w{{"max", *d.max}, {"cd", d.degrees}, {"cd_mod_fitting", mod}, {"fitting_order", f.order()}};
  if (contains(mod, *d.max)) return fail("max(cd(G|N)) survives modulo F(N)", w);
  if (!strict_subset(mod, d.degrees)) return fail("cd modulo F(N) is not a proper subset", w);
  return pass(w);
}

Verdict check_c4_4(GroupContext& ctx, const Subgroup& n) {
  if (!is_solvable(n)) return inapplicable("N is not solvable");
  const long k = static_cast<long>(ctx.rel(n).degrees.size());
  const int h = fitting_height(n);
  const int dl = *ctx.derived_len(n);
  json w{{"n", k}, {"h", h}, {"dl", dl}, {"h_slack", k - h}, {"dl_slack", k * (k + 1) / 2 - dl}};
  if (h > k) return fail("h(N) exceeds |cd(G|N)|", w);
  if (dl > k * (k + 1) / 2) return fail("dl N exceeds n(n+1)/2", w);
  return pass(w);
}

Verdict check_t4_5(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.solvable()) return inapplicable("G is not solvable");
  const long k = static_cast<long>(ctx.rel(n).degrees.size());
  const int dl = *ctx.derived_len(n);
  json w{{"n", k}, {"dl", dl}, {"slack", 3 * k - dl}};
  if (dl > 3 * k) return fail("dl N exceeds 3n", w);
  return pass(w);
}

Verdict check_l4_6(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  const long m = *d.max;
  std::size_t instances = 0;
  for (const auto& sub : ctx.normals()) {
    if (sub.is_trivial() || !sub.is_subset_of(n)) continue;
    Subgroup f = fitting_subgroup(sub);
    std::optional<std::uint64_t> p;
    if (!f.is_trivial()) {
      auto ps = prime_divisors(f.order());
      if (ps.size() != 1) continue;
      p = ps.front();
    }
    Subgroup md = derived_normal(sub);
    if (!contains(cd_rel_mod(ctx.table(), n, md), m)) continue;
    ++instances;
    json w{{"M_order", sub.order()}, {"fitting_order", f.order()}, {"max", m}};
    if (!p) return fail("F(M) = 1 < M and max(cd(G|N)) survives modulo M'", w);
    w["p"] = *p;
    if (!is_prime_power_of(sub.order(), *p)) return fail("M is not a p-group", w);
  }
  if (instances == 0) return inapplicable("no normal M ⊆ N with F(M) a p-group and max(cd(G|N)) in cd modulo M'");
  return pass({{"instances", instances}, {"max", m}});
}

Verdict check_l5_1(GroupContext& ctx, const Subgroup& n, std::string& skip) {
  const auto& d = ctx.rel(n);
  const long a = *d.min;
  const auto* subs = ctx.all_subgroups(&skip);
  if (!subs) return {Status::Skipped, skip, nullptr};
  const long order = static_cast<long>(ctx.group()->order());
  std::size_t checked = 0;
  for (const auto& h : *subs) {
    const long index = order / static_cast<long>(h.order());
    if (index > a) continue;
    ++checked;
    if (!n.is_subset_of(h)) return fail("|G:H| ≤ a but N ⊄ H", {{"a", a}, {"H_order", h.order()}, {"index", index}});
    if (index < a && !n.is_subset_of(derived_subgroup(h)))
      return fail("|G:H| < a but N ⊄ H'", {{"a", a}, {"H_order", h.order()}, {"index", index}});
  }
  return pass({{"a", a}, {"subgroups_checked", checked}, {"subgroups_total", subs->size()}});
}

Verdict check_l5_2(GroupContext& ctx, const Subgroup& n) {
  auto t = ctx.table();
  auto tn = ctx.cache().table_of(n);
  std::vector<ClassFunction> restricted;
  for (std::size_t j = 0; j < t->size(); ++j) restricted.push_back(restrict(row_function(*t, j), n, tn->class_data()));
  const auto primes = prime_divisors(ctx.group()->order());
  std::size_t instances = 0;
  for (std::size_t a = 0; a < tn->size(); ++a) {
    auto alpha = row_function(*tn, a);
    if (!inertia_group(n, alpha).is_whole()) continue;
    const std::uint64_t o = det_order(alpha).order;
    const auto deg = static_cast<std::uint64_t>(tn->degree(a));
    for (std::uint64_t p : primes) {
      if ((o * deg) % p == 0) continue;
      ++instances;
      bool found = false;
      for (std::size_t j = 0; j < t->size() && !found; ++j)
        found = t->degree(j) % static_cast<long>(p) != 0 && inner_product(restricted[j], alpha) != 0;
      if (!found)
        return fail("no p'-degree character of G lies over the invariant α",
                    {{"alpha_row", a}, {"alpha_degree", deg}, {"det_order", o}, {"p", p}});
    }
  }
  if (instances == 0) return inapplicable("no G-invariant α with a prime p ∤ o(α)α(1)");
  return pass({{"instances", instances}});
}

Verdict check_t5_3(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  if (d.degrees.size() != 2) return inapplicable("|cd(G|N)| ≠ 2");
  auto dl = ctx.derived_len(n);
  if (!dl) return inapplicable("N is not solvable");
  json w{{"cd", d.degrees}, {"dl", *dl}};
  if (*dl > 2) return fail("dl N exceeds 2", w);
  return pass(w);
}

Verdict check_tb(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  if (d.degrees.size() > 2) return inapplicable("|cd(G|N)| > 2");
  auto dl = ctx.derived_len(n);
  json w{{"cd", d.degrees}, {"dl", dl_json(dl)}};
  if (!dl) return fail("N is not solvable", w);
  if (*dl > static_cast<int>(d.degrees.size())) return fail("dl N exceeds |cd(G|N)|", w);
  return pass(w);
}

Verdict check_tc(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  if (d.degrees.size() != 3) return inapplicable("|cd(G|N)| ≠ 3");
  for (std::uint64_t p : prime_divisors(n.order()))
    if (!ctx.p_solvable(p)) return inapplicable("G is not p-solvable for p = " + std::to_string(p));
  auto dl = ctx.derived_len(n);
  json w{{"cd", d.degrees}, {"dl", dl_json(dl)}};
  if (!dl || *dl > 3) return fail("dl N exceeds 3", w);
  return pass(w);
}

Verdict check_td(GroupContext& ctx, const Subgroup& n) {
  Subgroup np = derived_normal(n);
  const auto cdp = ctx.rel(np).degrees;
  json primes = json::array();
  for (std::uint64_t p : prime_divisors(ctx.group()->order())) {
    bool all = std::all_of(cdp.begin(), cdp.end(), [p](long x) { return x % static_cast<long>(p) == 0; });
    if (!all) continue;
    if (!has_normal_p_complement(n, p))
      return fail("every member of cd(G|N') is divisible by p but N has no normal p-complement",
                  {{"p", p}, {"cd_derived", cdp}});
    primes.push_back(p);
  }
  if (primes.empty()) return inapplicable("no prime divides every member of cd(G|N')");
  return pass({{"primes", primes}, {"cd_derived", cdp}});
}

bool two_powers_and_odd(const std::vector<long>& cd) {
  int pow2 = 0;
  int odd = 0;
  for (long x : cd) {
    if (is_prime_power_of(static_cast<std::uint64_t>(x), 2)) ++pow2;
    if (x % 2) ++odd;
  }
  return cd.size() == 3 && pow2 == 2 && odd == 1;
}

Verdict check_t6_1(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  const auto& t = *ctx.table();
  const long a = *d.min;
  Subgroup np = derived_subgroup(n);
  json found = json::array();
  for (std::size_t i : d.members) {
    if (t.degree(i) != a) continue;
    for (const auto& s : reducing_sections(ctx.cache(), ctx.lattice(), n, i)) {
      if (!s.exceptional || !ctx.p_solvable(*s.prime)) continue;
      json w{{"row", i},     {"degree", a},          {"p", *s.prime},  {"X_order", s.x.order()},
             {"Y_order", s.y.order()}, {"cd", d.degrees}};
      if (*s.prime != 2) return fail("(a) exceptional section for an odd prime", w);
      if (a % 2) return fail("(b) χ(1) is odd", w);
      if (d.degrees.size() < 3) return fail("(c) |cd(G|N)| < 3", w);
      if (d.degrees.size() == 3) {
        if (!two_powers_and_odd(d.degrees)) return fail("(d) cd(G|N) is not two powers of 2 and an odd number", w);
        if (!np.is_subset_of(s.x)) return fail("(d) N/X is not abelian", w);
      }
      found.push_back(std::move(w));
    }
  }
  if (found.empty()) return inapplicable("no exceptional reducing section for a minimal-degree χ");
  return pass({{"sections", found}});
}

Verdict check_t6_2(GroupContext& ctx, const Subgroup& n) {
  const auto& d = ctx.rel(n);
  if (d.degrees.size() != 3) return inapplicable("|cd(G|N)| ≠ 3");
  const long a = *d.min;
  Subgroup np = derived_subgroup(n);
  json found = json::array();
  for (std::uint64_t p : prime_divisors(ctx.group()->order())) {
    if (!ctx.p_solvable(p)) continue;
    for (const auto& k : ctx.normals()) {
      if (k.is_trivial() || !k.is_subset_of(n)) continue;
      Subgroup e = o_p(k, p);
      if (e.is_trivial() || e.order() != p_part(k.order(), p)) continue;
      if (!(o_p_residual(k, p) == k)) continue;
      e.mark_normal();
      if (!contains(ctx.rel(e).degrees, a)) continue;
      json w{{"p", p}, {"K_order", k.order()}, {"E_order", e.order()}, {"a", a}};
      if (!np.is_subset_of(e)) return fail("N/E is not abelian", w);
      if (!commutator_subgroup(e, e).is_subset_of(center(k))) return fail("E' ⊄ Z(K)", w);
      found.push_back(std::move(w));
    }
  }
  if (found.empty()) return inapplicable("no normal K ⊆ N meeting the hypotheses");
  return pass({{"instances", found}});
}

Verdict check_c6_3(GroupContext& ctx, const Subgroup& n) {
  if (!ctx.solvable()) return inapplicable("G is not solvable");
  const auto& d = ctx.rel(n);
  const long a = *d.min;
  if (a % 2 == 0 && n.order() % 2 == 0) return inapplicable("a and |N| both even");
  Subgroup m = lower_central_series(n).residual;
  m.mark_normal();
  const auto cdm = ctx.rel(m).degrees;
  json w{{"a", a}, {"M_order", m.order()}, {"cd_M", cdm}};
  if (contains(cdm, a)) return fail("a lies in cd(G|N^∞)", w);
  return pass(w);
}

Verdict dispatch(const std::string& id, GroupContext& ctx, const Subgroup& n) {
  if (n.is_trivial()) return inapplicable("N = 1");
  std::string skip;
  if (id == "T3.1") return check_t3_1(ctx, n);
  if (id == "C3.2") return check_c3_2(ctx, n);
  if (id == "C3.3") return check_c3_3(ctx, n);
  if (id == "T4.1") return check_t4_1(ctx, n);
  if (id == "L4.2") return check_l4_2(ctx, n);
  if (id == "C4.3") return check_c4_3(ctx, n);
  if (id == "C4.4") return check_c4_4(ctx, n);
  if (id == "T4.5") return check_t4_5(ctx, n);
  if (id == "L4.6") return check_l4_6(ctx, n);
  if (id == "L5.1") return check_l5_1(ctx, n, skip);
  if (id == "L5.2") return check_l5_2(ctx, n);
  if (id == "T5.3") return check_t5_3(ctx, n);
  if (id == "TB") return check_tb(ctx, n);
  if (id == "TC") return check_tc(ctx, n);
  if (id == "TD") return check_td(ctx, n);
  if (id == "T6.1") return check_t6_1(ctx, n);
  if (id == "T6.2") return check_t6_2(ctx, n);
  if (id == "C6.3") return check_c6_3(ctx, n);
  throw InputError("unknown theorem id '" + id + "'");
}

NormalDescriptor describe(const Subgroup& n, const std::string& name) {
  return {name, n.order(), n.generator_words()};
}

}  // namespace

TheoremOutcome check_theorem(const std::string& id, GroupContext& ctx, const Subgroup& n,
                             const std::string& normal_name) {
  if (!is_theorem_id(id)) throw InputError("unknown theorem id '" + id + "'");
  if (n.parent() != ctx.group() || !is_normal(n)) throw InputError("N must be a normal subgroup of G");
  TheoremOutcome out;
  out.theorem = id;
  out.group = ctx.name();
  out.normal = describe(n, normal_name);
  auto start = std::chrono::steady_clock::now();
  try {
    Verdict v = dispatch(id, ctx, n);
    out.status = v.status;
    out.reason = std::move(v.reason);
    out.witness = std::move(v.witness);
  } catch (const GuardExceeded& e) {
    out.status = Status::Skipped;
    out.reason = e.what();
  } catch (const Defect& e) {
    out.status = Status::Fail;
    out.reason = std::string("internal defect: ") + e.what();
  } catch (const std::exception& e) {
    out.status = Status::Skipped;
    out.reason = std::string("error: ") + e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

TheoremOutcome check_thm_D(GroupContext& ctx, const Subgroup& n, const std::string& name) {
  return check_theorem("TD", ctx, n, name);
}

TheoremOutcome check_thm_6_1(GroupContext& ctx, const Subgroup& n, const std::string& name) {
  return check_theorem("T6.1", ctx, n, name);
}

std::string normal_name(const TaggedGroup& tg, const std::vector<Subgroup>& normals, std::size_t index) {
  const Subgroup& n = normals[index];
  for (const auto& [tag, s] : tg.resolved_normals())
    if (s == n) return tag;
  if (n.is_trivial()) return "1";
  if (n.is_whole()) return "G";
  return "N" + std::to_string(index);
}

SuiteCounts count_outcomes(const std::vector<TheoremOutcome>& outcomes) {
  SuiteCounts c;
  for (const auto& o : outcomes) switch (o.status) {
      case Status::Pass:
        ++c.pass;
        break;
      case Status::Inapplicable:
        ++c.inapplicable;
        break;
      case Status::Skipped:
        ++c.skipped;
        break;
      case Status::Fail:
        ++c.fail;
        break;
    }
  return c;
}

namespace {

struct EntryResult {
  std::vector<TheoremOutcome> outcomes;
  GroupEcho echo;
};

EntryResult run_entry(const SuiteEntry& entry, const SuiteConfig& config, const std::vector<std::string>& ids) {
  EntryResult r;
  const auto& g = entry.group.group;
  r.echo.name = entry.name;
  r.echo.order = g->order();
  auto skip_all = [&](const std::string& why) {
    for (const auto& id : ids) {
      TheoremOutcome o;
      o.theorem = id;
      o.group = entry.name;
      o.normal = {"*", 0, {}};
      o.status = Status::Skipped;
      o.reason = why;
      r.outcomes.push_back(std::move(o));
    }
  };
  if (config.max_order && g->order() > config.max_order) {
    skip_all("group order " + std::to_string(g->order()) + " exceeds --max-order " + std::to_string(config.max_order));
    return r;
  }
  try {
    GroupContext ctx(entry.name, g, config.guards);
    r.echo.dixon_prime = ctx.table()->dixon_prime();
    const auto& normals = ctx.normals();
    r.echo.normal_subgroups = normals.size();
    std::vector<std::pair<std::string, Subgroup>> targets;
    if (config.tagged_only) {
      targets = entry.group.resolved_normals();
    } else {
      for (std::size_t i = 0; i < normals.size(); ++i) targets.emplace_back(normal_name(entry.group, normals, i), normals[i]);
    }
    for (const auto& [name, n] : targets)
      for (const auto& id : ids) r.outcomes.push_back(check_theorem(id, ctx, n, name));
  } catch (const GuardExceeded& e) {
    r.outcomes.clear();
    skip_all(e.what());
  } catch (const InputError& e) {
    r.outcomes.clear();
    skip_all(std::string("input error: ") + e.what());
  }
  return r;
}

}  // namespace

SuiteReport run_suite(const std::vector<SuiteEntry>& corpus, const SuiteConfig& config) {
  std::vector<std::string> ids = config.theorems.empty() ? theorem_ids() : config.theorems;
  for (const auto& id : ids)
    if (!is_theorem_id(id)) throw InputError("unknown theorem id '" + id + "'");
  std::vector<EntryResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) results[i] = run_entry(corpus[i], config, ids);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(corpus.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  SuiteReport report;
  report.guards = config.guards;
  report.theorems = ids;
  for (auto& r : results) {
    report.groups.push_back(r.echo);
    for (auto& o : r.outcomes) report.outcomes.push_back(std::move(o));
  }
  report.counts = count_outcomes(report.outcomes);
  return report;
}

HuntResult hunt(const std::vector<SuiteEntry>& corpus, const Guards& guards, unsigned jobs) {
  struct Part {
    std::vector<HuntRow> rows;
    std::string skipped;
  };
  std::vector<Part> parts(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const auto& e = corpus[i];
      try {
        GroupContext ctx(e.name, e.group.group, guards);
        const auto& normals = ctx.normals();
        for (std::size_t k = 0; k < normals.size(); ++k) {
          const Subgroup& n = normals[k];
          if (n.is_trivial()) continue;
          auto dl = ctx.derived_len(n);
          if (!dl) continue;
          HuntRow row;
          row.group = e.name;
          row.normal = describe(n, normal_name(e.group, normals, k));
          row.n = static_cast<long>(ctx.rel(n).degrees.size());
          row.dl = *dl;
          row.h = fitting_height(n);
          row.group_solvable = ctx.solvable();
          row.h_bound = row.h <= row.n;
          row.quadratic_bound = row.dl <= row.n * (row.n + 1) / 2;
          if (row.group_solvable) row.linear_bound = row.dl <= 3 * row.n;
          parts[i].rows.push_back(std::move(row));
        }
      } catch (const GuardExceeded& ex) {
        parts[i].rows.clear();
        parts[i].skipped = ex.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < workers; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  HuntResult out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].skipped.empty()) out.skipped.emplace_back(corpus[i].name, parts[i].skipped);
    for (auto& r : parts[i].rows) out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace relchar
