#include "relchar/reldeg.hpp"

#include <algorithm>

#include "relchar/error.hpp"
#include "relchar/structure.hpp"

namespace relchar {

bool RelativeDegreeData::contains_row(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool kernel_contains(const CharacterTable& t, std::size_t i, const Subgroup& n) {
  const auto& cd = t.classes();
  const auto& row = t.row(i);
  std::vector<bool> checked(cd.num_classes(), false);
  for (ElemId x : n.members()) {
    auto k = cd.class_of[x];
    if (checked[k]) continue;
    checked[k] = true;
    if (row[k] != row[0]) return false;
  }
  return true;
}

RelativeDegreeData irr_rel(const TablePtr& t, const Subgroup& n) {
  if (n.parent() != t->group()) throw InputError("normal subgroup of another group");
  if (!is_normal(n)) throw InputError("subgroup is not normal");
  RelativeDegreeData out{t, n, {}, {}, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < t->size(); ++i)
    if (!kernel_contains(*t, i, n)) {
      out.members.push_back(i);
      out.degrees.push_back(t->degree(i));
    }
  std::sort(out.degrees.begin(), out.degrees.end());
  out.degrees.erase(std::unique(out.degrees.begin(), out.degrees.end()), out.degrees.end());
  if (!out.degrees.empty()) {
    out.min = out.degrees.front();
    out.max = out.degrees.back();
  }
  return out;
}

std::vector<long> cd_rel_mod(const TablePtr& t, const Subgroup& n, const Subgroup& m) {
  if (!is_normal(n) || !is_normal(m)) throw InputError("subgroups must be normal");
  if (!m.is_subset_of(n)) throw InputError("M is not contained in N");
  std::vector<long> out;
  for (std::size_t i = 0; i < t->size(); ++i)
    if (!kernel_contains(*t, i, n) && kernel_contains(*t, i, m)) out.push_back(t->degree(i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool section_central_in(const Subgroup& n, const Subgroup& x, const Subgroup& y) {
  if (!y.is_proper_subset_of(x) || !x.is_subset_of(n)) throw InputError("section must satisfy Y < X <= N");
  const PermGroup& g = n.group();
  // Y is normal, so commutators of generators suffice
  for (ElemId a : x.generators())
    for (ElemId b : n.generators())
      if (!y.contains(g.commutator(a, b))) return false;
  return true;
}

std::vector<SectionRecord> reducing_sections(TableCache& cache, const NormalLattice& lattice, const Subgroup& n,
                                             std::size_t row) {
  auto t = cache.table();
  if (kernel_contains(*t, row, n)) throw InputError("character does not lie over the normal subgroup");
  auto chi = row_function(*t, row);
  std::vector<SectionRecord> out;
  auto degree_on = [&](const Subgroup& s) -> long {
    if (s.is_trivial()) return 1;
    auto ts = cache.table_of(s);
    return ts->degree(normal_constituents(chi, s, *ts).front().row);
  };
  for (auto [yi, xi] : lattice.chief_factors()) {
    const Subgroup& x = lattice.subgroups()[xi];
    const Subgroup& y = lattice.subgroups()[yi];
    if (!x.is_subset_of(n)) continue;
    SectionRecord rec;
    rec.x = x;
    rec.y = y;
    rec.abelian = commutator_subgroup(x, x).is_subset_of(y);
    if (rec.abelian) rec.prime = prime_divisors(x.order() / y.order()).front();
    rec.degree_on_x = degree_on(x);
    rec.degree_on_y = degree_on(y);
    if (rec.degree_on_x % rec.degree_on_y != 0) throw Defect("constituent degree on Y does not divide degree on X");
    rec.central_in_n = section_central_in(n, x, y);
    rec.reducing = rec.abelian && rec.degree_on_y < rec.degree_on_x;
    if (rec.reducing && !is_prime_power_of(static_cast<std::uint64_t>(rec.degree_on_x / rec.degree_on_y), *rec.prime))
      throw Defect("degree ratio across a p-chief factor is not a power of p");
    rec.exceptional = rec.reducing && !rec.central_in_n;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace relchar
