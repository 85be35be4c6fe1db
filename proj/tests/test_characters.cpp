#include <doctest.h>

#include <algorithm>
#include <complex>
#include <set>

#include "relchar/builtin.hpp"
#include "relchar/characters.hpp"
#include "relchar/error.hpp"
#include "relchar/structure.hpp"

using namespace relchar;

namespace {

std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
  return d;
}

std::vector<std::size_t> rows_of_degree(const CharacterTable& t, long d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree(i) == d) out.push_back(i);
  return out;
}

// Fixed-point count of each class representative.
ClassFunction permutation_character(const ClassDataPtr& cd) {
  ClassFunction f{cd, {}};
  for (ElemId rep : cd->representatives) {
    long fixed = 0;
    auto im = cd->group->images(rep);
    for (std::size_t i = 0; i < im.size(); ++i) fixed += im[i] == i;
    f.values.push_back(Cyclotomic(fixed));
  }
  return f;
}

std::size_t row_with_kernel(const CharacterTable& t, long degree, std::size_t kernel_order) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.degree(i) == degree && kernel_of(row_function(t, i)).order() == kernel_order) return i;
  FAIL("no row with the requested degree and kernel");
  return 0;
}

const std::vector<std::pair<std::string, std::vector<long long>>> kSmall = {
    {"trivial", {}},          {"cyclic", {2}},      {"cyclic", {6}},       {"cyclic", {12}},
    {"dihedral", {4}},        {"dihedral", {5}},    {"dihedral", {6}},     {"quaternion", {8}},
    {"quaternion", {16}},     {"symmetric", {3}},   {"symmetric", {4}},    {"symmetric", {5}},
    {"alternating", {4}},     {"alternating", {5}}, {"elementary_abelian", {2, 3}},
    {"elementary_abelian", {3, 2}},                 {"agl1", {5}},         {"agl1", {7}},
    {"sl23", {}},             {"gl23", {}},         {"heisenberg27", {}},  {"c3wrc2", {}},
    {"s3xs3", {}},            {"q8xc3", {}},
};

}  // namespace

TEST_CASE("conjugacy classes, power maps and the inverse map") {
  auto s3 = builtin_group("symmetric", {3}).group;
  auto cd = conjugacy_classes(s3);
  std::vector<std::size_t> sizes = cd->sizes;
  CHECK(sizes == std::vector<std::size_t>{1, 3, 2});

  auto c12 = builtin_group("cyclic", {12}).group;
  auto cc = conjugacy_classes(c12);
  CHECK(cc->num_classes() == 12);
  CHECK(std::all_of(cc->sizes.begin(), cc->sizes.end(), [](std::size_t s) { return s == 1; }));

  CHECK(conjugacy_classes(builtin_group("gl23").group)->num_classes() == 8);

  for (const auto& [name, params] : kSmall) {
    CAPTURE(name);
    auto g = builtin_group(name, params).group;
    auto d = conjugacy_classes(g);
    std::size_t total = 0;
    std::vector<int> seen(g->order(), 0);
    for (std::size_t k = 0; k < d->num_classes(); ++k) {
      total += d->sizes[k];
      CHECK(g->order() % d->sizes[k] == 0);
      CHECK(d->representatives[k] == d->classes[k].front());
      for (ElemId x : d->classes[k]) ++seen[x];
    }
    CHECK(total == g->order());
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    for (std::size_t k = 0; k < d->num_classes(); ++k) {
      CHECK(d->inverse_map[k] == d->class_of[g->inv(d->representatives[k])]);
      for (std::uint64_t m = 2; m <= g->exponent(); ++m) {
        // compose prime power maps along the factorization of m
        std::uint32_t c = static_cast<std::uint32_t>(k);
        std::uint64_t rest = m;
        for (std::uint64_t p = 2; p <= rest; ++p)
          while (rest % p == 0) {
            c = d->power_maps.at(p)[c];
            rest /= p;
          }
        CHECK(c == d->class_of[g->pow(d->representatives[k], static_cast<long long>(m))]);
      }
    }
  }
}

TEST_CASE("class multiplication coefficients") {
  auto s3 = builtin_group("symmetric", {3}).group;
  auto cd = conjugacy_classes(s3);
  CHECK(class_mult_coefficient(*cd, 1, 1, 0) == 3);
  CHECK_THROWS_AS(class_mult_coefficient(*cd, 3, 0, 0), InputError);

  for (const char* name : {"sl23", "gl23", "c3wrc2"}) {
    auto g = builtin_group(name).group;
    auto d = conjugacy_classes(g);
    const std::size_t r = d->num_classes();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        CHECK(class_mult_coefficient(*d, 0, j, i) == (i == j ? 1u : 0u));
        std::uint64_t weighted = 0;
        for (std::size_t k = 0; k < r; ++k) {
          auto a = class_mult_coefficient(*d, i, j, k);
          weighted += a * d->sizes[k];
          // independent of the chosen z in C_k
          for (ElemId z : d->classes[k]) {
            std::uint64_t n = 0;
            for (ElemId x : d->classes[i])
              if (d->class_of[g->mul(g->inv(x), z)] == j) ++n;
            CHECK(n == a);
          }
        }
        CHECK(weighted == d->sizes[i] * d->sizes[j]);
      }
  }
}

TEST_CASE("character tables of small groups") {
  auto c2 = character_table(builtin_group("cyclic", {2}).group);
  REQUIRE(c2->size() == 2);
  CHECK(c2->row(0) == std::vector<Cyclotomic>{1, 1});
  CHECK(c2->row(1) == std::vector<Cyclotomic>{1, -1});

  CHECK(degrees(*character_table(builtin_group("quaternion", {8}).group)) == std::vector<long>{1, 1, 1, 1, 2});
  auto gl = character_table(builtin_group("gl23").group);
  CHECK(gl->size() == 8);
  CHECK(degrees(*gl) == std::vector<long>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(degrees(*character_table(builtin_group("symmetric", {4}).group)) == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(degrees(*character_table(builtin_group("alternating", {5}).group)) == std::vector<long>{1, 3, 3, 4, 5});
  CHECK(degrees(*character_table(builtin_group("symmetric", {5}).group)) ==
        std::vector<long>{1, 1, 4, 4, 5, 5, 6});

  // Q(sqrt 5) values on A5 and sqrt(-3) values on the Heisenberg group
  auto a5 = character_table(builtin_group("alternating", {5}).group);
  bool has_sqrt5 = false;
  for (const auto& row : a5->rows())
    for (const auto& v : row) has_sqrt5 |= v.conductor() == 5;
  CHECK(has_sqrt5);

  CHECK_THROWS_AS(character_table(builtin_group("symmetric", {6}).group, Guards{100000, 500, 300}), GuardExceeded);
}

TEST_CASE("table invariants across small groups") {
  for (const auto& [name, params] : kSmall) {
    CAPTURE(name);
    auto g = builtin_group(name, params).group;
    auto t = character_table(g);
    const auto& cd = t->classes();
    auto rep = check_orthogonality(*t);
    CHECK(rep.degree_sum);
    CHECK(rep.square);
    CHECK(rep.first);
    CHECK(rep.second);
    CHECK(t->dixon_prime() > g->order());
    CHECK((t->dixon_prime() - 1) % g->exponent() == 0);
    CHECK(t->trivial_index() == 0);

    std::vector<ElemId> common = enumerate_elements(*g);
    for (std::size_t i = 0; i < t->size(); ++i) {
      CHECK(t->degree(i) >= 1);
      CHECK(static_cast<long>(g->order()) % t->degree(i) == 0);
      for (std::size_t k = 0; k < cd.num_classes(); ++k) {
        CHECK(t->row(i)[cd.inverse_map[k]] == t->row(i)[k].conj());
        CHECK(std::abs(t->row(i)[k].to_complex()) <= t->degree(i) + 1e-9);
        CHECK(t->row(i)[k].reduce_mod(t->dixon_prime(), t->exponent(), t->dixon_root()) < t->dixon_prime());
      }
      auto ker = kernel_of(row_function(*t, i));
      std::vector<ElemId> next;
      std::set_intersection(common.begin(), common.end(), ker.members().begin(), ker.members().end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    CHECK(common == std::vector<ElemId>{0});

    // natural permutation character: nonnegative integer decomposition,
    // one trivial constituent per orbit
    if (g->degree() > 0) {
      auto pi = permutation_character(t->class_data());
      auto cs = constituents(pi, *t);
      std::set<std::size_t> orbit_starts;
      std::vector<bool> seen(g->degree(), false);
      long orbits = 0;
      for (std::size_t p = 0; p < g->degree(); ++p) {
        if (seen[p]) continue;
        ++orbits;
        std::vector<std::size_t> stack{p};
        seen[p] = true;
        while (!stack.empty()) {
          auto x = stack.back();
          stack.pop_back();
          for (const auto& s : g->generators()) {
            auto y = s.images()[x];
            if (!seen[y]) {
              seen[y] = true;
              stack.push_back(y);
            }
          }
        }
      }
      CHECK(inner_product(pi, trivial_character(t->class_data())) == orbits);
    }
  }
}

TEST_CASE("inner products") {
  auto s3 = character_table(builtin_group("symmetric", {3}).group);
  auto cd = s3->class_data();
  for (std::size_t i = 0; i < s3->size(); ++i) {
    CHECK(inner_product(row_function(*s3, i), row_function(*s3, i)) == 1);
    CHECK(inner_product(regular_character(cd), row_function(*s3, i)) == s3->degree(i));
  }
  CHECK(inner_product(trivial_character(cd), row_function(*s3, 1)) == 0);
  auto s4 = character_table(builtin_group("symmetric", {4}).group);
  CHECK_THROWS_AS(inner_product(row_function(*s3, 0), row_function(*s4, 0)), InputError);

  // symmetric groups are doubly transitive: pi - 1 is irreducible
  auto pi = permutation_character(s4->class_data());
  CHECK(inner_product(pi, pi) == 2);
}

TEST_CASE("restriction and constituents") {
  auto tg = builtin_group("gl23");
  auto g = tg.group;
  TableCache cache(g);
  auto t = cache.table();
  auto q8 = tg.normal("q8");
  auto z = tg.normal("z");
  auto triv = Subgroup::trivial(g);
  auto ttriv = cache.table_of(triv);
  for (std::size_t i = 0; i < t->size(); ++i) {
    auto cs = constituents(restrict(row_function(*t, i), triv, ttriv->class_data()), *ttriv);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].multiplicity == t->degree(i));
  }
  auto tq = cache.table_of(q8);
  auto tz = cache.table_of(z);
  int faithful = 0;
  for (std::size_t i : rows_of_degree(*t, 2)) {
    auto chi = row_function(*t, i);
    if (!kernel_of(chi).is_trivial()) continue;
    ++faithful;
    auto onq = normal_constituents(chi, q8, *tq);
    REQUIRE(onq.size() == 1);
    CHECK(onq[0].multiplicity == 1);
    CHECK(inner_product(restrict(chi, q8, tq->class_data()), restrict(chi, q8, tq->class_data())) == 1);
    auto onz = normal_constituents(chi, z, *tz);
    long total = 0;
    for (const auto& c : onz) {
      CHECK(tz->degree(c.row) == 1);
      total += c.multiplicity;
    }
    CHECK(total == 2);
  }
  CHECK(faithful == 2);

  auto ts4 = builtin_group("symmetric", {4});
  TableCache c4(ts4.group);
  auto t4 = c4.table();
  auto a4 = ts4.normal("alt");
  auto ta4 = c4.table_of(a4);
  auto two = rows_of_degree(*t4, 2);
  REQUIRE(two.size() == 1);
  auto cs = normal_constituents(row_function(*t4, two[0]), a4, *ta4);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].row != cs[1].row);
  for (const auto& c : cs) {
    CHECK(c.multiplicity == 1);
    CHECK(ta4->degree(c.row) == 1);
  }
}

TEST_CASE("induction") {
  auto ts3 = builtin_group("symmetric", {3});
  auto s3 = character_table(ts3.group);
  auto a3 = ts3.normal("alt");
  auto ta3 = character_table(a3.as_group());
  auto ind = induce(row_function(*ta3, 1), a3, s3->class_data());
  CHECK(ind.degree() == 2);
  auto idx = s3->find_row(ind.values);
  REQUIRE(idx);
  CHECK(s3->degree(*idx) == 2);
  CHECK(induce(trivial_character(ta3->class_data()), a3, s3->class_data()).degree() == 2);

  auto ts4 = builtin_group("symmetric", {4});
  auto s4 = character_table(ts4.group);
  auto v4 = ts4.normal("v4");
  auto tv4 = character_table(v4.as_group());
  auto ind1 = induce(trivial_character(tv4->class_data()), v4, s4->class_data());
  CHECK(ind1.degree() == 6);
  CHECK(inner_product(ind1, trivial_character(s4->class_data())) == 1);

  // Frobenius reciprocity and agreement of both induction paths over all
  // subgroups in a few groups
  for (const auto& [name, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
           {"symmetric", {4}}, {"gl23", {}}, {"quaternion", {8}}, {"dihedral", {6}}, {"agl1", {5}}}) {
    CAPTURE(name);
    auto g = builtin_group(name, params).group;
    TableCache cache(g);
    auto t = cache.table();
    std::set<std::vector<ElemId>> seen;
    for (ElemId x = 0; x < g->order(); ++x)
      for (ElemId y = x; y < g->order(); y += 3) {
        std::vector<ElemId> seeds{x, y};
        auto h = generated_subgroup(g, seeds);
        if (!seen.insert(h.members()).second) continue;
        auto th = cache.table_of(h);
        for (std::size_t a = 0; a < th->size(); ++a) {
          auto theta = row_function(*th, a);
          auto up = induce_by_summation(theta, h, t->class_data());
          CHECK(up == induce_by_fusion(theta, h, t->class_data()));
          CHECK(up.degree() == th->degree(a) * static_cast<long>(g->order() / h.order()));
          for (std::size_t b = 0; b < t->size(); ++b)
            CHECK(inner_product(up, row_function(*t, b)) ==
                  inner_product(theta, restrict(row_function(*t, b), h, th->class_data())));
        }
      }
  }
}

TEST_CASE("kernels and vanishing-off subgroups") {
  auto ts4 = builtin_group("symmetric", {4});
  auto s4 = character_table(ts4.group);
  CHECK(kernel_of(row_function(*s4, 0)).is_whole());
  CHECK(kernel_of(row_function(*s4, 1)) == ts4.normal("alt"));
  CHECK(kernel_of(row_function(*s4, 2)) == ts4.normal("v4"));
  for (std::size_t i = 0; i < s4->size(); ++i) CHECK(is_normal(kernel_of(row_function(*s4, i))));
  CHECK(vanishing_off(row_function(*s4, 1)).is_whole());

  auto tq = builtin_group("quaternion", {8});
  auto q8 = character_table(tq.group);
  auto v = vanishing_off(row_function(*q8, 4));
  CHECK(v.order() == 2);
  CHECK(v == tq.normal("z"));

  auto tg = builtin_group("gl23");
  auto gl = character_table(tg.group);
  // faithful degree 2 rows are nonzero on the elements of order 8
  auto f = row_with_kernel(*gl, 2, 1);
  CHECK(vanishing_off(row_function(*gl, f)).is_whole());
  auto f4 = row_with_kernel(*gl, 4, 1);
  auto vg = vanishing_off(row_function(*gl, f4));
  CHECK(vg == tg.normal("sl23"));
  CHECK(tg.normal("z").is_subset_of(vg));
}

TEST_CASE("determinantal order") {
  auto ts4 = builtin_group("symmetric", {4});
  auto s4 = character_table(ts4.group);
  auto det = det_order(row_function(*s4, 1));
  CHECK(det.order == 2);
  CHECK(det.lambda == row_function(*s4, 1));

  auto q8 = character_table(builtin_group("quaternion", {8}).group);
  auto dq = det_order(row_function(*q8, 4));
  CHECK(dq.order == 1);
  CHECK(dq.lambda == trivial_character(q8->class_data()));

  for (const auto& [name, params] : kSmall) {
    CAPTURE(name);
    auto g = builtin_group(name, params).group;
    auto t = character_table(g);
    auto gp = derived_subgroup(Subgroup::whole(g));
    const std::uint64_t ab_exp = coset_action(gp).image->exponent();
    for (std::size_t i = 0; i < t->size(); ++i) {
      auto d = det_order(row_function(*t, i));
      CHECK(d.lambda.degree() == 1);
      CHECK(t->find_row(d.lambda.values).has_value());
      CHECK(ab_exp % d.order == 0);
      if (t->degree(i) == 1) CHECK(d.lambda == row_function(*t, i));
    }
  }
}

TEST_CASE("inertia groups") {
  auto ts4 = builtin_group("symmetric", {4});
  auto g = ts4.group;
  auto v4 = ts4.normal("v4");
  auto tv = character_table(v4.as_group());
  for (std::size_t i = 1; i < tv->size(); ++i)
    CHECK(g->order() / inertia_group(v4, row_function(*tv, i)).order() == 3);
  CHECK(inertia_group(v4, row_function(*tv, 0)).is_whole());

  auto whole = Subgroup::whole(g);
  auto ts = character_table(g);
  for (std::size_t i = 0; i < ts->size(); ++i) CHECK(inertia_group(whole, row_function(*ts, i)).is_whole());

  auto tg = builtin_group("gl23");
  auto sl = tg.normal("sl23");
  auto tsl = character_table(sl.as_group());
  for (std::size_t i : rows_of_degree(*tsl, 2)) {
    auto t = inertia_group(sl, row_function(*tsl, i));
    CHECK(2 % (48 / t.order()) == 0);
  }

  auto s3 = builtin_group("symmetric", {3});
  auto notnormal = generated_subgroup(s3.group, std::vector<ElemId>{1});
  CHECK_THROWS_AS(inertia_group(notnormal, trivial_character(conjugacy_classes(notnormal.as_group()))),
                  InputError);
}

TEST_CASE("lifting through quotients") {
  auto ts4 = builtin_group("symmetric", {4});
  auto s4 = character_table(ts4.group);
  auto q = coset_action(ts4.normal("v4"));
  auto s3 = character_table(q.image);
  CHECK(lift_character(row_function(*s3, 0), q.map, *s4) == 0);
  auto two = rows_of_degree(*s3, 2);
  REQUIRE(two.size() == 1);
  auto lifted = lift_character(row_function(*s3, two[0]), q.map, *s4);
  CHECK(s4->degree(lifted) == 2);
  CHECK(kernel_of(row_function(*s4, lifted)) == ts4.normal("v4"));

  auto tg = builtin_group("gl23");
  auto gl = character_table(tg.group);
  auto qc = coset_action(tg.normal("sl23"));
  auto c2 = character_table(qc.image);
  REQUIRE(c2->size() == 2);
  auto sign = lift_character(row_function(*c2, 1), qc.map, *gl);
  CHECK(kernel_of(row_function(*gl, sign)) == tg.normal("sl23"));
}

TEST_CASE("products and conjugates") {
  auto s4 = character_table(builtin_group("symmetric", {4}).group);
  auto one = trivial_character(s4->class_data());
  for (std::size_t i = 0; i < s4->size(); ++i) {
    CHECK(product(row_function(*s4, i), one) == row_function(*s4, i));
    CHECK(s4->find_row(conjugate(row_function(*s4, i)).values).has_value());
  }
  CHECK(product(row_function(*s4, 1), row_function(*s4, 1)) == one);
  auto threes = rows_of_degree(*s4, 3);
  REQUIRE(threes.size() == 2);
  auto p = product(row_function(*s4, threes[0]), row_function(*s4, 1));
  CHECK(s4->find_row(p.values) == threes[1]);

  auto h = character_table(builtin_group("heisenberg27").group);
  for (std::size_t i = 0; i < h->size(); ++i) {
    auto c = conjugate(row_function(*h, i));
    auto idx = h->find_row(c.values);
    REQUIRE(idx);
    CHECK(h->degree(*idx) == h->degree(i));
  }
}
