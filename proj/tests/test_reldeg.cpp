#include <doctest.h>

#include <algorithm>

#include "relchar/builtin.hpp"
#include "relchar/error.hpp"
#include "relchar/reldeg.hpp"
#include "relchar/structure.hpp"

using namespace relchar;

namespace {

using Degrees = std::vector<long>;

// Degrees of rows whose kernel misses some element of n, by scanning every
// element against every class value.
Degrees brute_cd(const CharacterTable& t, const Subgroup& n) {
  Degrees out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool outside = false;
    for (ElemId x : n.members()) outside |= t.row(i)[t.classes().class_of[x]] != t.row(i)[0];
    if (outside) out.push_back(t.degree(i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::string kGroups[] = {"sl23", "gl23", "c3wrc2", "s3xs3", "q8xc3", "heisenberg27", "berger216"};

}  // namespace

TEST_CASE("relative degree sets of the standard examples") {
  auto tg = builtin_group("gl23");
  auto t = character_table(tg.group);
  auto d = irr_rel(t, tg.normal("sl23"));
  CHECK(d.degrees == Degrees{2, 3, 4});
  CHECK(d.min == 2);
  CHECK(d.max == 4);
  CHECK(irr_rel(t, Subgroup::trivial(tg.group)).members.empty());
  CHECK_FALSE(irr_rel(t, Subgroup::trivial(tg.group)).min.has_value());

  auto ts4 = builtin_group("symmetric", {4});
  auto t4 = character_table(ts4.group);
  CHECK(irr_rel(t4, ts4.normal("alt")).degrees == Degrees{2, 3});
  CHECK(cd_rel_mod(t4, ts4.normal("alt"), ts4.normal("v4")) == Degrees{2});
  CHECK(cd_rel_mod(t4, ts4.normal("alt"), Subgroup::trivial(ts4.group)) == Degrees{2, 3});

  auto f = fitting_subgroup(tg.normal("sl23"));
  CHECK(f == tg.normal("q8"));
  auto mod = cd_rel_mod(t, tg.normal("sl23"), f);
  CHECK(std::find(mod.begin(), mod.end(), 4) == mod.end());

  auto s3 = builtin_group("symmetric", {3});
  auto notnormal = generated_subgroup(s3.group, std::vector<ElemId>{1});
  CHECK_THROWS_AS(irr_rel(character_table(s3.group), notnormal), InputError);
  CHECK_THROWS_AS(cd_rel_mod(t4, ts4.normal("v4"), ts4.normal("alt")), InputError);
}

TEST_CASE("relative degree invariants over normal subgroups") {
  for (const auto& name : kGroups) {
    CAPTURE(name);
    auto g = builtin_group(name).group;
    auto t = character_table(g);
    auto normals = normal_subgroups(g);
    std::vector<long> cd;
    for (std::size_t i = 0; i < t->size(); ++i) cd.push_back(t->degree(i));
    std::sort(cd.begin(), cd.end());
    cd.erase(std::unique(cd.begin(), cd.end()), cd.end());
    for (const auto& n : normals) {
      auto d = irr_rel(t, n);
      CHECK(d.degrees == brute_cd(*t, n));
      CHECK(d.degrees.empty() == n.is_trivial());
      for (long x : d.degrees) CHECK(static_cast<long>(g->order()) % x == 0);
      // rows over N and rows of G/N partition Irr(G)
      auto q = coset_action(n);
      auto tq = character_table(q.image);
      CHECK(d.members.size() + tq->size() == t->size());
      std::vector<bool> lifted(t->size(), false);
      for (std::size_t j = 0; j < tq->size(); ++j) lifted[lift_character(row_function(*tq, j), q.map, *t)] = true;
      for (std::size_t i = 0; i < t->size(); ++i) CHECK(lifted[i] != d.contains_row(i));
      // N' gives a subset
      auto nd = irr_rel(t, derived_subgroup(n).mark_normal());
      CHECK(std::includes(d.degrees.begin(), d.degrees.end(), nd.degrees.begin(), nd.degrees.end()));
      for (const auto& m : normals) {
        if (!m.is_subset_of(n)) continue;
        auto dm = irr_rel(t, m);
        CHECK(std::includes(d.members.begin(), d.members.end(), dm.members.begin(), dm.members.end()));
        // cd(G|N) modulo M equals cd(G/M | N/M) on the quotient table
        auto qm = coset_action(m);
        auto tm = character_table(qm.image);
        std::vector<ElemId> img;
        for (ElemId x : n.members()) img.push_back(qm.map(x));
        auto nbar = generated_subgroup(qm.image, img);
        CHECK(cd_rel_mod(t, n, m) == irr_rel(tm, nbar).degrees);
      }
    }
    auto gp = derived_subgroup(Subgroup::whole(g)).mark_normal();
    auto dgp = irr_rel(t, gp);
    std::size_t nonlinear = 0;
    for (std::size_t i = 0; i < t->size(); ++i) nonlinear += t->degree(i) > 1;
    CHECK(dgp.members.size() == nonlinear);
    CHECK(dgp.degrees.size() == cd.size() - 1);
  }
}

TEST_CASE("reducing sections") {
  auto tg = builtin_group("gl23");
  TableCache cache(tg.group);
  auto t = cache.table();
  NormalLattice lat(tg.group);
  auto sl = tg.normal("sl23");
  auto q8 = tg.normal("q8");
  auto z = tg.normal("z");
  CHECK_FALSE(section_central_in(sl, q8, z));
  CHECK(section_central_in(sl, z, Subgroup::trivial(tg.group)));
  CHECK_THROWS_AS(section_central_in(sl, z, q8), InputError);

  int faithful = 0;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->degree(i) != 2 || !kernel_of(row_function(*t, i)).is_trivial()) continue;
    ++faithful;
    auto secs = reducing_sections(cache, lat, sl, i);
    bool found = false;
    for (const auto& s : secs) {
      if (s.x == q8 && s.y == z) {
        found = true;
        CHECK(s.abelian);
        CHECK(s.prime == 2u);
        CHECK(s.degree_on_x == 2);
        CHECK(s.degree_on_y == 1);
        CHECK(s.reducing);
        CHECK_FALSE(s.central_in_n);
        CHECK(s.exceptional);
      }
    }
    CHECK(found);
  }
  CHECK(faithful == 2);
  CHECK_THROWS_AS(reducing_sections(cache, lat, sl, 0), InputError);

  auto ts4 = builtin_group("symmetric", {4});
  TableCache c4(ts4.group);
  auto t4 = c4.table();
  NormalLattice l4(ts4.group);
  for (std::size_t i = 0; i < t4->size(); ++i) {
    if (t4->degree(i) != 3) continue;
    auto secs = reducing_sections(c4, l4, ts4.normal("alt"), i);
    for (const auto& s : secs)
      if (s.x == ts4.normal("v4")) {
        CHECK(s.y.is_trivial());
        CHECK(s.degree_on_x == 1);
        CHECK(s.degree_on_y == 1);
        CHECK_FALSE(s.reducing);
      }
  }

  // linear characters never reduce; abelian N is central in itself
  for (const auto& name : kGroups) {
    CAPTURE(name);
    auto g = builtin_group(name).group;
    TableCache c(g);
    auto tt = c.table();
    NormalLattice l(g);
    for (const auto& n : l.subgroups()) {
      if (n.is_trivial()) continue;
      auto d = irr_rel(tt, n);
      for (std::size_t i : d.members) {
        for (const auto& s : reducing_sections(c, l, n, i)) {
          if (tt->degree(i) == 1) CHECK_FALSE(s.reducing);
          if (is_abelian(n)) CHECK(s.central_in_n);
          CHECK(is_normal(s.x));
          CHECK(is_normal(s.y));
          if (s.abelian) CHECK(is_prime_power_of(s.x.order() / s.y.order(), *s.prime));
        }
      }
    }
  }
}
