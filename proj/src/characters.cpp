#include "relchar/characters.hpp"

#include <numeric>

#include "relchar/error.hpp"
#include "relchar/structure.hpp"

namespace relchar {

namespace {

void same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes->group != b.classes->group || a.values.size() != b.values.size())
    throw InputError("class functions over different groups");
}

long as_long(const Rational& r) {
  if (r.get_den() != 1) throw Defect("expected an integer, got " + r.get_str());
  return r.get_num().get_si();
}

}  // namespace

long ClassFunction::degree() const { return as_long(values.at(0).rational()); }

ClassFunction row_function(const CharacterTable& t, std::size_t i) { return {t.class_data(), t.row(i)}; }

ClassFunction trivial_character(const ClassDataPtr& cd) {
  return {cd, std::vector<Cyclotomic>(cd->num_classes(), Cyclotomic(1))};
}

ClassFunction regular_character(const ClassDataPtr& cd) {
  ClassFunction f{cd, std::vector<Cyclotomic>(cd->num_classes(), Cyclotomic(0))};
  f.values[0] = Cyclotomic(static_cast<long>(cd->group_order()));
  return f;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  Cyclotomic s;
  for (std::size_t k = 0; k < a.values.size(); ++k)
    s += Cyclotomic(static_cast<long>(a.classes->sizes[k])) * a.values[k] * b.values[k].conj();
  s /= Rational(static_cast<long>(a.classes->group_order()));
  if (!s.is_rational()) throw Defect("inner product is not rational: " + s.to_string());
  return s.rational();
}

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  ClassFunction out{a.classes, a.values};
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] *= b.values[k];
  return out;
}

ClassFunction conjugate(const ClassFunction& a) {
  ClassFunction out{a.classes, {}};
  for (const auto& v : a.values) out.values.push_back(v.conj());
  return out;
}

ClassFunction restrict(const ClassFunction& f, const Subgroup& h, const ClassDataPtr& hclasses) {
  if (h.parent() != f.classes->group) throw InputError("restriction to a subgroup of another group");
  if (hclasses->group_order() != h.order()) throw InputError("class data does not belong to the subgroup");
  ClassFunction out{hclasses, {}};
  for (ElemId rep : hclasses->representatives) out.values.push_back(f.at(h.to_parent(rep)));
  return out;
}

std::vector<Constituent> constituents(const ClassFunction& f, const CharacterTable& t) {
  if (f.classes->group != t.group()) throw InputError("decomposition against a table of another group");
  std::vector<Constituent> out;
  long total = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Rational m = inner_product(f, row_function(t, i));
    long mi = as_long(m);
    if (mi < 0) throw Defect("negative multiplicity in a character decomposition");
    if (mi) out.push_back({i, mi});
    total += mi * t.degree(i);
  }
  if (total != f.degree()) throw Defect("constituent degrees do not add up");
  return out;
}

std::vector<Constituent> normal_constituents(const ClassFunction& f, const Subgroup& n, const CharacterTable& nt) {
  auto cs = constituents(restrict(f, n, nt.class_data()), nt);
  for (const auto& c : cs)
    if (nt.degree(c.row) != nt.degree(cs.front().row))
      throw Defect("constituents of a normal restriction have unequal degrees");
  return cs;
}

ClassFunction induce_by_summation(const ClassFunction& theta, const Subgroup& h, const ClassDataPtr& gclasses) {
  const PermGroup& g = *gclasses->group;
  if (h.parent() != gclasses->group || theta.classes->group_order() != h.order())
    throw InputError("induction from a class function not on a subgroup");
  const std::size_t rh = theta.classes->num_classes();
  ClassFunction out{gclasses, {}};
  std::vector<long> count(rh);
  for (ElemId rep : gclasses->representatives) {
    std::fill(count.begin(), count.end(), 0);
    for (ElemId x = 0; x < g.order(); ++x) {
      ElemId y = g.mul(g.mul(x, rep), g.inv(x));
      if (h.contains(y)) ++count[theta.classes->class_of[h.to_local(y)]];
    }
    Cyclotomic v;
    for (std::size_t d = 0; d < rh; ++d)
      if (count[d]) v += Cyclotomic(count[d]) * theta.values[d];
    out.values.push_back(v / Rational(static_cast<long>(h.order())));
  }
  return out;
}

ClassFunction induce_by_fusion(const ClassFunction& theta, const Subgroup& h, const ClassDataPtr& gclasses) {
  if (h.parent() != gclasses->group || theta.classes->group_order() != h.order())
    throw InputError("induction from a class function not on a subgroup");
  const auto& hc = *theta.classes;
  std::vector<Cyclotomic> acc(gclasses->num_classes());
  for (std::size_t d = 0; d < hc.num_classes(); ++d) {
    std::uint32_t k = gclasses->class_of[h.to_parent(hc.representatives[d])];
    acc[k] += Cyclotomic(static_cast<long>(hc.sizes[d])) * theta.values[d];
  }
  ClassFunction out{gclasses, {}};
  const long go = static_cast<long>(gclasses->group_order());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    Rational scale(go, static_cast<long>(gclasses->sizes[k] * h.order()));
    scale.canonicalize();
    out.values.push_back(acc[k] * Cyclotomic(scale));
  }
  return out;
}

ClassFunction induce(const ClassFunction& theta, const Subgroup& h, const ClassDataPtr& gclasses) {
  if (gclasses->group_order() <= 2000) return induce_by_summation(theta, h, gclasses);
  return induce_by_fusion(theta, h, gclasses);
}

Subgroup kernel_of(const ClassFunction& f) {
  const auto& cd = *f.classes;
  std::vector<ElemId> members;
  for (std::size_t k = 0; k < cd.num_classes(); ++k)
    if (f.values[k] == f.values[0]) members.insert(members.end(), cd.classes[k].begin(), cd.classes[k].end());
  std::sort(members.begin(), members.end());
  Subgroup k = subgroup_from_members(cd.group, std::move(members));
  k.mark_normal();
  return k;
}

Subgroup vanishing_off(const ClassFunction& f) {
  const auto& cd = *f.classes;
  std::vector<ElemId> seeds;
  for (std::size_t k = 0; k < cd.num_classes(); ++k)
    if (!f.values[k].is_zero()) seeds.insert(seeds.end(), cd.classes[k].begin(), cd.classes[k].end());
  Subgroup v = generated_subgroup(cd.group, seeds);
  if (!kernel_of(f).is_subset_of(v)) throw Defect("kernel not contained in the vanishing-off subgroup");
  return v;
}

std::vector<long> eigenvalue_multiplicities(const ClassFunction& chi, std::size_t k) {
  const auto& cd = *chi.classes;
  const long n = static_cast<long>(cd.rep_orders[k]);
  std::vector<Cyclotomic> along(n);
  for (long j = 0; j < n; ++j) along[j] = chi.values[cd.power_class(k, j)];
  std::vector<long> out(n);
  long total = 0;
  for (long l = 0; l < n; ++l) {
    Cyclotomic s;
    for (long j = 0; j < n; ++j) s += along[j] * Cyclotomic::root_of_unity(static_cast<int>(n), -l * j);
    s /= Rational(n);
    if (!s.is_integer() || s.rational() < 0) throw Defect("non-integral eigenvalue multiplicity");
    out[l] = as_long(s.rational());
    total += out[l];
  }
  if (total != chi.degree()) throw Defect("eigenvalue multiplicities do not sum to the degree");
  return out;
}

Determinant det_order(const ClassFunction& chi) {
  const auto& cd = *chi.classes;
  const PermGroup& g = *cd.group;
  const std::size_t r = cd.num_classes();
  // lambda(g_k) = exp(2 pi i num/den), stored reduced
  std::vector<std::pair<long, long>> frac(r);
  Determinant out{ClassFunction{chi.classes, {}}, 1};
  for (std::size_t k = 0; k < r; ++k) {
    auto m = eigenvalue_multiplicities(chi, k);
    const long n = static_cast<long>(m.size());
    long e = 0;
    for (long j = 0; j < n; ++j) e = (e + j * m[j]) % n;
    long gd = std::gcd(e, n);
    frac[k] = {e / gd, n / gd};
    out.lambda.values.push_back(Cyclotomic::root_of_unity(static_cast<int>(n), e));
    out.order = std::lcm(out.order, static_cast<std::uint64_t>(n / gd));
  }
  auto add = [](std::pair<long, long> a, std::pair<long, long> b) {
    long den = std::lcm(a.second, b.second);
    long num = (a.first * (den / a.second) + b.first * (den / b.second)) % den;
    long gd = std::gcd(num, den);
    return std::pair<long, long>{num / gd, den / gd};
  };
  for (ElemId x = 0; x < g.order(); ++x)
    for (ElemId s : g.generator_ids())
      if (add(frac[cd.class_of[x]], frac[cd.class_of[s]]) != frac[cd.class_of[g.mul(x, s)]])
        throw Defect("determinant is not multiplicative");
  return out;
}

Subgroup inertia_group(const Subgroup& n, const ClassFunction& theta) {
  if (!is_normal(n)) throw InputError("inertia group of a non-normal subgroup");
  const PermGroup& g = n.group();
  const auto& nc = *theta.classes;
  std::vector<ElemId> members;
  for (ElemId x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (std::size_t d = 0; d < nc.num_classes() && fixes; ++d) {
      ElemId y = n.to_parent(nc.representatives[d]);
      ElemId z = g.mul(g.mul(g.inv(x), y), x);
      fixes = theta.at(n.to_local(z)) == theta.values[d];
    }
    if (fixes) members.push_back(x);
  }
  Subgroup t = subgroup_from_members(n.parent(), std::move(members));
  if (!n.is_subset_of(t)) throw Defect("inertia group does not contain the normal subgroup");
  return t;
}

ClassFunction inflate(const ClassFunction& chibar, const Epimorphism& phi, const ClassDataPtr& source_classes) {
  if (chibar.classes->group != phi.target || source_classes->group != phi.source)
    throw InputError("inflation along a mismatched epimorphism");
  ClassFunction out{source_classes, {}};
  for (ElemId rep : source_classes->representatives) out.values.push_back(chibar.at(phi(rep)));
  return out;
}

std::size_t lift_character(const ClassFunction& chibar, const Epimorphism& phi, const CharacterTable& source) {
  auto f = inflate(chibar, phi, source.class_data());
  auto idx = source.find_row(f.values);
  if (!idx) throw Defect("inflated character is not a row of the source table");
  if (!phi.kernel.is_subset_of(kernel_of(f))) throw Defect("kernel of the lift misses the epimorphism kernel");
  return *idx;
}

}  // namespace relchar
