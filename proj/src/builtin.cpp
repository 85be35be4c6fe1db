#include "relchar/builtin.hpp"

#include <array>
#include <map>
#include <numeric>

#include "relchar/error.hpp"
#include "relchar/structure.hpp"

namespace relchar {

Subgroup TaggedGroup::normal(const std::string& tag) const {
  for (const auto& t : normals) {
    if (t.name != tag) continue;
    std::vector<ElemId> ids;
    for (const auto& p : t.generators) ids.push_back(group->id_of(p));
    Subgroup s = generated_subgroup(group, ids);
    if (!is_normal(s)) throw InputError("tagged subgroup '" + tag + "' is not normal");
    s.mark_normal();
    return s;
  }
  throw InputError("unknown normal subgroup tag '" + tag + "'");
}

std::vector<std::pair<std::string, Subgroup>> TaggedGroup::resolved_normals() const {
  std::vector<std::pair<std::string, Subgroup>> out;
  for (const auto& t : normals) out.emplace_back(t.name, normal(t.name));
  return out;
}

namespace {

Permutation from_map(std::size_t n, auto&& f) {
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<Point>(f(i));
  return Permutation(std::move(im));
}

Permutation cycle(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<Point> im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<std::size_t> c(one_based);
  for (std::size_t i = 0; i < c.size(); ++i) im[c[i] - 1] = static_cast<Point>(c[(i + 1) % c.size()] - 1);
  return Permutation(std::move(im));
}

GroupPtr make(std::size_t degree, std::vector<Permutation> gens, std::string name,
              std::size_t max_elements) {
  return std::make_shared<const PermGroup>(degree, std::move(gens), std::move(name), max_elements);
}

long long param(const std::vector<long long>& params, std::size_t i, const std::string& name) {
  if (params.size() <= i) throw InputError(name + ": missing parameter " + std::to_string(i + 1));
  return params[i];
}

// 2x2 matrices over F_3 acting on the right of the 8 nonzero row vectors.
using Mat = std::array<int, 4>;

std::size_t vec_index(int a, int b) { return static_cast<std::size_t>(a * 3 + b - 1); }

Permutation matrix_action(const Mat& m) {
  return from_map(8, [&](std::size_t i) {
    int a = static_cast<int>((i + 1) / 3), b = static_cast<int>((i + 1) % 3);
    int x = (a * m[0] + b * m[2]) % 3, y = (a * m[1] + b * m[3]) % 3;
    return vec_index(x, y);
  });
}

// [[1,1],[0,1]], [[0,2],[1,0]] generate SL(2,3); [[0,2],[1,0]] and
// [[1,1],[1,2]] generate its quaternion subgroup; [[2,0],[0,1]] has det -1.
const Mat kTransvection{1, 1, 0, 1};
const Mat kQuatI{0, 2, 1, 0};
const Mat kQuatJ{1, 1, 1, 2};
const Mat kMinusOne{2, 0, 0, 2};
const Mat kDetMinusOne{2, 0, 0, 1};

// Heisenberg group over F_3 with law (v,c)(w,d) = (v+w, c+d+2*omega(v,w)),
// omega((a,b),(a',b')) = ab' - ba'. Symplectic maps of F_3^2 act as
// automorphisms fixing c. Points are indexed a*9 + b*3 + c.
struct Heis {
  int a, b, c;
};
std::size_t heis_index(const Heis& h) { return static_cast<std::size_t>(h.a * 9 + h.b * 3 + h.c); }
Heis heis_at(std::size_t i) {
  return {static_cast<int>(i / 9), static_cast<int>(i / 3 % 3), static_cast<int>(i % 3)};
}
Heis heis_mul(const Heis& x, const Heis& y) {
  int omega = ((x.a * y.b - x.b * y.a) % 3 + 3) % 3;
  return {(x.a + y.a) % 3, (x.b + y.b) % 3, (x.c + y.c + 2 * omega) % 3};
}
Permutation heis_right_mult(const Heis& y) {
  return from_map(27, [&](std::size_t i) { return heis_index(heis_mul(heis_at(i), y)); });
}
Permutation heis_automorphism(const Mat& m) {
  return from_map(27, [&](std::size_t i) {
    Heis h = heis_at(i);
    return heis_index({(h.a * m[0] + h.b * m[2]) % 3, (h.a * m[1] + h.b * m[3]) % 3, h.c});
  });
}

// Generalized quaternion of order 4m in its regular representation;
// element a^i b^j is point i + 2m*j.
std::pair<Permutation, Permutation> quaternion_regular(std::size_t m) {
  const std::size_t n = 4 * m, t = 2 * m;
  auto by_a = from_map(n, [&](std::size_t p) {
    std::size_t i = p % t, j = p / t;
    return j == 0 ? (i + 1) % t : (i + t - 1) % t + t;
  });
  auto by_b = from_map(n, [&](std::size_t p) {
    std::size_t i = p % t, j = p / t;
    return j == 0 ? i + t : (i + m) % t;
  });
  return {by_a, by_b};
}

std::size_t primitive_root(std::size_t p) {
  for (std::size_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : prime_divisors(p - 1)) {
      std::size_t r = 1;
      for (std::size_t k = 0; k < (p - 1) / q; ++k) r = r * g % p;
      if (r == 1) ok = false;
    }
    if (ok) return g;
  }
  return 1;
}

}  // namespace

TaggedGroup direct_product(const TaggedGroup& a, const TaggedGroup& b, std::string name) {
  const std::size_t da = a.group->degree(), db = b.group->degree();
  auto left = [&](const Permutation& p) {
    return from_map(da + db, [&](std::size_t i) { return i < da ? p[i] : i; });
  };
  auto right = [&](const Permutation& p) {
    return from_map(da + db, [&](std::size_t i) { return i < da ? i : da + p[i - da]; });
  };
  std::vector<Permutation> gens;
  for (const auto& g : a.group->generators()) gens.push_back(left(g));
  for (const auto& g : b.group->generators()) gens.push_back(right(g));
  TaggedGroup out{make(da + db, std::move(gens), std::move(name), PermGroup::kDefaultMaxElements), {}};
  std::vector<Permutation> lg, rg;
  for (const auto& g : a.group->generators()) lg.push_back(left(g));
  for (const auto& g : b.group->generators()) rg.push_back(right(g));
  out.normals.push_back({"left", lg});
  out.normals.push_back({"right", rg});
  return out;
}

TaggedGroup builtin_group(const std::string& name, const std::vector<long long>& params,
                          std::size_t max_elements) {
  auto label = [&](const std::string& base) {
    std::string s = base;
    for (auto p : params) s += "_" + std::to_string(p);
    return s;
  };

  if (name == "trivial") return {make(1, {}, "trivial", max_elements), {}};

  if (name == "cyclic") {
    long long n = param(params, 0, name);
    if (n < 1) throw InputError("cyclic: n must be positive");
    std::vector<Permutation> gens;
    if (n > 1) gens.push_back(from_map(n, [&](std::size_t i) { return (i + 1) % n; }));
    return {make(n, std::move(gens), label("cyclic"), max_elements), {}};
  }

  if (name == "dihedral") {
    long long n = param(params, 0, name);
    if (n < 3) throw InputError("dihedral: n must be at least 3");
    auto r = from_map(n, [&](std::size_t i) { return (i + 1) % n; });
    auto s = from_map(n, [&](std::size_t i) { return (n - i) % n; });
    return {make(n, {r, s}, label("dihedral"), max_elements), {{"rotations", {r}}}};
  }

  if (name == "quaternion") {
    long long order = param(params, 0, name);
    if (order < 8 || (order & (order - 1)) != 0)
      throw InputError("quaternion: order must be a power of 2, at least 8");
    auto [a, b] = quaternion_regular(static_cast<std::size_t>(order / 4));
    return {make(order, {a, b}, label("quaternion"), max_elements),
            {{"cyclic", {a}}, {"z", {a.pow(order / 4)}}}};
  }

  if (name == "elementary_abelian") {
    long long p = param(params, 0, name), k = param(params, 1, name);
    if (!is_prime(p) || k < 1) throw InputError("elementary_abelian: need prime p and k >= 1");
    std::vector<Permutation> gens;
    for (long long j = 0; j < k; ++j)
      gens.push_back(from_map(p * k, [&](std::size_t i) {
        std::size_t blk = i / p;
        return blk == static_cast<std::size_t>(j) ? blk * p + (i % p + 1) % p : i;
      }));
    return {make(p * k, std::move(gens), label("elementary_abelian"), max_elements), {}};
  }

  if (name == "symmetric") {
    long long n = param(params, 0, name);
    if (n < 1) throw InputError("symmetric: n must be positive");
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(from_map(n, [&](std::size_t i) { return (i + 1) % n; }));
      gens.push_back(cycle(n, {1, 2}));
    }
    TaggedGroup t{make(n, std::move(gens), label("symmetric"), max_elements), {}};
    if (n >= 3) {
      std::vector<Permutation> alt;
      for (long long k = 3; k <= n; ++k) alt.push_back(cycle(n, {1, 2, static_cast<std::size_t>(k)}));
      t.normals.push_back({"alt", alt});
    }
    if (n == 4) t.normals.push_back({"v4", {cycle(4, {1, 2}) * cycle(4, {3, 4}), cycle(4, {1, 3}) * cycle(4, {2, 4})}});
    return t;
  }

  if (name == "alternating") {
    long long n = param(params, 0, name);
    if (n < 1) throw InputError("alternating: n must be positive");
    std::vector<Permutation> gens;
    for (long long k = 3; k <= n; ++k) gens.push_back(cycle(n, {1, 2, static_cast<std::size_t>(k)}));
    TaggedGroup t{make(n, std::move(gens), label("alternating"), max_elements), {}};
    if (n == 4) t.normals.push_back({"v4", {cycle(4, {1, 2}) * cycle(4, {3, 4}), cycle(4, {1, 3}) * cycle(4, {2, 4})}});
    return t;
  }

  if (name == "agl1") {
    long long p = param(params, 0, name);
    if (!is_prime(p)) throw InputError("agl1: p must be prime");
    std::size_t g = primitive_root(p);
    auto shift = from_map(p, [&](std::size_t i) { return (i + 1) % p; });
    auto scale = from_map(p, [&](std::size_t i) { return i * g % p; });
    return {make(p, {shift, scale}, label("agl1"), max_elements), {{"translations", {shift}}}};
  }

  if (name == "sl23" || name == "gl23") {
    auto t = matrix_action(kTransvection), qi = matrix_action(kQuatI), qj = matrix_action(kQuatJ);
    auto z = matrix_action(kMinusOne);
    std::vector<Permutation> gens{t, qi};
    std::vector<TaggedNormal> tags;
    if (name == "gl23") {
      gens.push_back(matrix_action(kDetMinusOne));
      tags.push_back({"sl23", {t, qi}});
    }
    tags.push_back({"q8", {qi, qj}});
    tags.push_back({"z", {z}});
    return {make(8, std::move(gens), name, max_elements), std::move(tags)};
  }

  if (name == "heisenberg27") {
    auto x = heis_right_mult({1, 0, 0}), y = heis_right_mult({0, 1, 0});
    auto z = heis_right_mult({0, 0, 1});
    return {make(27, {x, y}, name, max_elements), {{"z", {z}}}};
  }

  if (name == "berger216") {
    auto x = heis_right_mult({1, 0, 0}), y = heis_right_mult({0, 1, 0});
    auto qi = heis_automorphism(kQuatI), qj = heis_automorphism(kQuatJ);
    return {make(27, {x, y, qi, qj}, name, max_elements),
            {{"n27", {x, y}}, {"z", {heis_right_mult({0, 0, 1})}}}};
  }

  if (name == "c3wrc2") {
    auto c = cycle(6, {1, 2, 3});
    auto s = cycle(6, {1, 4}) * cycle(6, {2, 5}) * cycle(6, {3, 6});
    return {make(6, {c, s}, name, max_elements),
            {{"base", {c, cycle(6, {4, 5, 6})}}}};
  }

  if (name == "s3xs3") return direct_product(builtin_group("symmetric", {3}), builtin_group("symmetric", {3}), name);
  if (name == "q8xc3") return direct_product(builtin_group("quaternion", {8}), builtin_group("cyclic", {3}), name);

  throw InputError("unknown builtin group '" + name + "'");
}

}  // namespace relchar
