#include "relchar/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relchar/error.hpp"
#include "relchar/structure.hpp"

namespace relchar {

std::uint32_t ClassData::power_class(std::size_t k, long long j) const {
  return class_of[group->pow(representatives[k], j)];
}

ClassDataPtr conjugacy_classes(const GroupPtr& g) {
  auto cd = std::make_shared<ClassData>();
  cd->group = g;
  auto part = conjugacy_partition(*g);
  cd->classes = std::move(part.classes);
  cd->class_of = std::move(part.class_of);
  const std::size_t r = cd->classes.size();
  for (const auto& c : cd->classes) {
    cd->representatives.push_back(c.front());
    cd->sizes.push_back(c.size());
    cd->rep_orders.push_back(g->elem_order(c.front()));
  }
  cd->inverse_map.resize(r);
  for (std::size_t k = 0; k < r; ++k) cd->inverse_map[k] = cd->class_of[g->inv(cd->representatives[k])];
  for (std::uint64_t p = 2; p <= g->exponent(); ++p) {
    if (!is_prime(p)) continue;
    auto& m = cd->power_maps[p];
    m.resize(r);
    for (std::size_t k = 0; k < r; ++k) m[k] = cd->power_class(k, static_cast<long long>(p));
  }
  return cd;
}

std::uint64_t class_mult_coefficient(const ClassData& cd, std::size_t i, std::size_t j, std::size_t k) {
  if (i >= cd.num_classes() || j >= cd.num_classes() || k >= cd.num_classes())
    throw InputError("class index out of range");
  const PermGroup& g = *cd.group;
  ElemId z = cd.representatives[k];
  std::uint64_t n = 0;
  for (ElemId x : cd.classes[i])
    if (cd.class_of[g.mul(g.inv(x), z)] == j) ++n;
  return n;
}

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Entry {
  std::uint32_t i;
  std::uint32_t k;
  u64 c;
};

// Sparse class matrix (M_j)_{ik} = a_{jik}.
std::vector<Entry> class_matrix(const ClassData& cd, std::size_t j) {
  const PermGroup& g = *cd.group;
  const std::size_t r = cd.num_classes();
  std::vector<Entry> out;
  std::vector<u64> count(r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    ElemId z = cd.representatives[k];
    for (ElemId x : cd.classes[j]) ++count[cd.class_of[g.mul(g.inv(x), z)]];
    for (std::size_t i = 0; i < r; ++i)
      if (count[i]) {
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k), count[i]});
        count[i] = 0;
      }
  }
  return out;
}

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>((unsigned __int128)a * b % q); }
u64 addmod(u64 a, u64 b, u64 q) { return (a + b) % q; }
u64 submod(u64 a, u64 b, u64 q) { return (a + q - b) % q; }

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, u64 q) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    u64 inv = mod_inv(m[row][c], q);
    for (auto& v : m[row]) v = mulmod(v, inv, q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t t = 0; t < cols; ++t) m[i][t] = submod(m[i][t], mulmod(f, m[row][t], q), q);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of the right nullspace of a square matrix.
Mat nullspace(Mat a, u64 q) {
  const std::size_t n = a.size();
  auto piv = rref(a, q);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  Mat out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = submod(0, a[r][f], q);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (constant term first) via Hessenberg reduction.
Vec charpoly(Mat h, u64 q) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 inv = mod_inv(h[m][m - 1], q);
    for (std::size_t j = m + 1; j < n; ++j) {
      u64 u = mulmod(h[j][m - 1], inv, q);
      if (u == 0) continue;
      for (std::size_t t = 0; t < n; ++t) h[j][t] = submod(h[j][t], mulmod(u, h[m][t], q), q);
      for (std::size_t t = 0; t < n; ++t) h[t][m] = addmod(h[t][m], mulmod(u, h[t][j], q), q);
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    for (std::size_t t = 0; t < p[m - 1].size(); ++t) {
      cur[t + 1] = addmod(cur[t + 1], p[m - 1][t], q);
      cur[t] = submod(cur[t], mulmod(h[m - 1][m - 1], p[m - 1][t], q), q);
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = mulmod(prod, h[i][i - 1], q);
      u64 coef = mulmod(h[i - 1][m - 1], prod, q);
      if (coef)
        for (std::size_t t = 0; t < p[i - 1].size(); ++t)
          cur[t] = submod(cur[t], mulmod(coef, p[i - 1][t], q), q);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<u64> roots(const Vec& poly, u64 q) {
  std::vector<u64> out;
  for (u64 x = 0; x < q; ++x) {
    u64 acc = 0;
    for (std::size_t t = poly.size(); t-- > 0;) acc = addmod(mulmod(acc, x, q), poly[t], q);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

struct Space {
  Mat basis;
  std::vector<std::size_t> pivots;
};

Vec apply(const std::vector<Entry>& m, const Vec& v, u64 q) {
  Vec out(v.size(), 0);
  for (const auto& e : m)
    if (v[e.k]) out[e.i] = addmod(out[e.i], mulmod(e.c, v[e.k], q), q);
  return out;
}

std::vector<Space> split(const Space& s, const std::vector<Entry>& m, u64 q) {
  const std::size_t d = s.basis.size();
  Mat restricted(d, Vec(d, 0));
  for (std::size_t col = 0; col < d; ++col) {
    Vec u = apply(m, s.basis[col], q);
    for (std::size_t t = 0; t < d; ++t) restricted[t][col] = u[s.pivots[t]];
  }
  auto ev = roots(charpoly(restricted, q), q);
  if (ev.size() == 1) return {s};
  std::vector<Space> out;
  std::size_t total = 0;
  for (u64 lambda : ev) {
    Mat a = restricted;
    for (std::size_t t = 0; t < d; ++t) a[t][t] = submod(a[t][t], lambda, q);
    Mat coords = nullspace(std::move(a), q);
    Space ns;
    for (const auto& c : coords) {
      Vec v(s.basis[0].size(), 0);
      for (std::size_t t = 0; t < d; ++t)
        if (c[t])
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = addmod(v[i], mulmod(c[t], s.basis[t][i], q), q);
      ns.basis.push_back(std::move(v));
    }
    ns.pivots = rref(ns.basis, q);
    total += ns.basis.size();
    out.push_back(std::move(ns));
  }
  if (total != d) throw Defect("class matrix not diagonalizable over the Dixon field");
  return out;
}

u64 dixon_prime_for(u64 order, u64 e) {
  u64 q = (order / e + 1) * e + 1;
  while (!is_prime(q)) q += e;
  return q;
}

u64 primitive_root(u64 q) {
  auto ps = prime_divisors(q - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 p : ps)
      if (mod_pow(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

bool is_square(u64 v, u64& root) {
  u64 s = static_cast<u64>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  root = s;
  return s * s == v;
}

}  // namespace

CharacterTable::CharacterTable(ClassDataPtr classes, std::vector<std::vector<Cyclotomic>> rows, u64 prime,
                               u64 root)
    : classes_(std::move(classes)), rows_(std::move(rows)), prime_(prime), root_(root) {
  for (const auto& r : rows_) degrees_.push_back(r[0].rational().get_num().get_si());
}

std::size_t CharacterTable::trivial_index() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (std::all_of(rows_[i].begin(), rows_[i].end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); }))
      return i;
  throw Defect("table has no trivial row");
}

std::optional<std::size_t> CharacterTable::find_row(const std::vector<Cyclotomic>& values) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == values) return i;
  return std::nullopt;
}

TablePtr character_table(const GroupPtr& g, const Guards& guards) {
  const u64 order = g->order();
  if (order > guards.max_table_order)
    throw GuardExceeded("group order " + std::to_string(order) + " exceeds character table guard " +
                            std::to_string(guards.max_table_order),
                        0);
  auto cd = conjugacy_classes(g);
  const std::size_t r = cd->num_classes();
  const u64 e = g->exponent();
  const u64 q = dixon_prime_for(order, e);
  const u64 root = mod_pow(primitive_root(q), (q - 1) / e, q);

  std::vector<Space> spaces;
  {
    Space all;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      all.basis.push_back(std::move(v));
      all.pivots.push_back(i);
    }
    spaces.push_back(std::move(all));
  }
  for (std::size_t j = 1; j < r && spaces.size() < r; ++j) {
    auto m = class_matrix(*cd, j);
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& t : split(s, m, q)) next.push_back(std::move(t));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Defect("eigenspace splitting incomplete for " + g->name());

  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw Defect("eigenvector vanishes at the identity class");
    u64 inv0 = mod_inv(w[0], q);
    for (auto& x : w) x = mulmod(x, inv0, q);
    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = addmod(sum, mulmod(mulmod(w[k], w[cd->inverse_map[k]], q), mod_inv(cd->sizes[k] % q, q), q), q);
    if (sum == 0) throw Defect("degenerate degree sum");
    u64 d2 = mulmod(order % q, mod_inv(sum, q), q);
    u64 d = 0;
    if (d2 == 0 || d2 > order || !is_square(d2, d) || order % d != 0)
      throw Defect("degree recovery failed for " + g->name());
    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = mulmod(mulmod(d, w[k], q), mod_inv(cd->sizes[k] % q, q), q);

    std::vector<Cyclotomic> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const u64 n = cd->rep_orders[k];
      const u64 zn = mod_pow(root, e / n, q);
      const u64 ninv = mod_inv(n % q, q);
      std::vector<u64> along(n);
      for (u64 j = 0; j < n; ++j) along[j] = chi[cd->power_class(k, static_cast<long long>(j))];
      std::vector<Rational> mult(n);
      u64 total = 0;
      for (u64 l = 0; l < n; ++l) {
        u64 acc = 0;
        u64 step = mod_inv(mod_pow(zn, l, q), q);
        u64 z = 1;
        for (u64 j = 0; j < n; ++j) {
          acc = addmod(acc, mulmod(along[j], z, q), q);
          z = mulmod(z, step, q);
        }
        u64 ml = mulmod(acc, ninv, q);
        if (ml > d) throw Defect("eigenvalue multiplicity out of range");
        total += ml;
        mult[l] = Rational(static_cast<long>(ml));
      }
      if (total != d) throw Defect("eigenvalue multiplicities do not sum to the degree");
      row[k] = Cyclotomic::from_exponents(static_cast<int>(n), mult);
      if (row[k].reduce_mod(q, e, root) != chi[k]) throw Defect("lifted value inconsistent with eigenvector");
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const auto& da = a[0].rational();
    const auto& db = b[0].rational();
    if (da != db) return da < db;
    auto trivial = [](const std::vector<Cyclotomic>& r) {
      return std::all_of(r.begin(), r.end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); });
    };
    if (trivial(a) != trivial(b)) return trivial(a);
    return a < b;
  });
  long sumsq = 0;
  for (const auto& row : rows) {
    long d = row[0].rational().get_num().get_si();
    sumsq += d * d;
  }
  if (static_cast<u64>(sumsq) != order) throw Defect("squared degrees do not sum to the group order");
  return std::make_shared<CharacterTable>(cd, std::move(rows), q, root);
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  const auto& cd = t.classes();
  const std::size_t r = cd.num_classes();
  const long order = static_cast<long>(cd.group_order());
  long sumsq = 0;
  for (std::size_t i = 0; i < t.size(); ++i) sumsq += t.degree(i) * t.degree(i);
  rep.degree_sum = sumsq == order;
  rep.square = t.size() == r;
  std::vector<std::vector<Cyclotomic>> conj(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (const auto& v : t.row(i)) conj[i].push_back(v.conj());
  rep.first = true;
  for (std::size_t a = 0; a < t.size() && rep.first; ++a)
    for (std::size_t b = a; b < t.size(); ++b) {
      Cyclotomic s;
      for (std::size_t k = 0; k < r; ++k) s += Cyclotomic(static_cast<long>(cd.sizes[k])) * t.row(a)[k] * conj[b][k];
      if (s != Cyclotomic(a == b ? order : 0L)) {
        rep.first = false;
        break;
      }
    }
  rep.second = rep.square;
  for (std::size_t k = 0; k < r && rep.second; ++k)
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic s;
      for (std::size_t i = 0; i < t.size(); ++i) s += t.row(i)[k] * conj[i][l];
      if (s != Cyclotomic(k == l ? static_cast<long>(cd.centralizer_order(k)) : 0L)) {
        rep.second = false;
        break;
      }
    }
  return rep;
}

TablePtr TableCache::table() {
  std::lock_guard lock(mu_);
  if (!whole_) whole_ = character_table(parent_, guards_);
  return whole_;
}

TablePtr TableCache::table_of(const Subgroup& h) {
  if (h.is_whole()) return table();
  {
    std::lock_guard lock(mu_);
    auto it = subs_.find(h.members());
    if (it != subs_.end()) return it->second;
  }
  auto t = character_table(h.as_group(), guards_);
  std::lock_guard lock(mu_);
  return subs_.emplace(h.members(), t).first->second;
}

}  // namespace relchar
