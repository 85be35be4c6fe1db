// Acceptance driver: one PASS/FAIL line per criterion; nonzero exit if any fail.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "relchar/characters.hpp"
#include "relchar/corpus.hpp"
#include "relchar/epimorphism.hpp"
#include "relchar/error.hpp"
#include "relchar/lattice.hpp"
#include "relchar/reldeg.hpp"
#include "relchar/structure.hpp"
#include "relchar/verify.hpp"

using namespace relchar;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(RELCHAR_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 65536> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

std::vector<SuiteEntry> full_corpus() {
  std::vector<SuiteEntry> out;
  for (const auto& e : builtin_corpus()) out.push_back({e.name, build_entry(e)});
  return out;
}

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = run_cli("reldeg --builtin gl23 --normal sl23 --structured");
  double s = seconds_since(t0);
  o.require(r.status == 0, "exit status " + std::to_string(r.status));
  if (!o.ok) return o;
  auto j = json::parse(r.out);
  auto degrees = j.at("relative_degrees").at(0).at("degrees").get<std::vector<long>>();
  o.require(degrees == std::vector<long>{2, 3, 4}, "cd(G|N) = " + j.at("relative_degrees").at(0).at("degrees").dump());
  o.require(s < 1.0, "took " + fmt_seconds(s));
  o.detail = o.ok ? "cd(GL(2,3)|SL(2,3)) = {2, 3, 4} in " + fmt_seconds(s) : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto t0 = Clock::now();
  auto tg = build_entry(corpus_entry("gl23"));
  GroupContext ctx("gl23", tg.group);
  auto t = ctx.table();
  auto sl = tg.normal("sl23");
  const auto& d = ctx.rel(sl);
  std::size_t faithful = 0;
  for (std::size_t i : d.members) {
    if (t->degree(i) != 2 || !ctx.kernel(i).is_trivial()) continue;
    ++faithful;
    auto secs = reducing_sections(ctx.cache(), ctx.lattice(), sl, i);
    bool found = false;
    for (const auto& s : secs) {
      if (!s.exceptional) continue;
      found = true;
      o.require(s.x.order() == 8 && s.y.order() == 2, "exceptional section has wrong orders");
      o.require(s.prime == 2u, "(a) p is not 2");
      o.require(s.x.is_subset_of(sl), "X not inside N");
      // N/X abelian
      o.require(commutator_subgroup(sl, sl).is_subset_of(s.x), "(d) N/X is not abelian");
    }
    o.require(found, "no exceptional section for a faithful degree-2 row");
  }
  o.require(faithful == 2, "expected two faithful degree-2 rows, found " + std::to_string(faithful));
  o.require(d.degrees.size() == 3 && d.degrees[0] % 2 == 0, "(b)/(c) degree set is not {even, ., .}");
  o.require(std::any_of(d.degrees.begin(), d.degrees.end(), [](long x) { return x % 2 == 1; }),
            "(c) no odd degree in cd(G|N)");
  auto th = check_thm_6_1(ctx, sl, "sl23");
  o.require(th.status == Status::Pass, "check_thm_6_1: " + to_string(th.status) + " " + th.reason);
  double s = seconds_since(t0);
  o.require(s < 1.0, "took " + fmt_seconds(s));
  if (o.ok) o.detail = "X = Q8, Y = Z, p = 2, cd = {2, 3, 4}; check_thm_6_1 Pass in " + fmt_seconds(s);
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto t0 = Clock::now();
  auto tg = build_entry(corpus_entry("berger216"));
  auto t = character_table(tg.group);
  Subgroup n;
  for (const auto& [tag, s] : tg.resolved_normals())
    if (s.order() == 27) n = s;
  o.require(n.order() == 27, "no tagged normal subgroup of order 27");
  if (!o.ok) return o;
  auto d = irr_rel(t, n);
  o.require(d.min == 3, "min cd(G|N) = " + (d.min ? std::to_string(*d.min) : std::string("none")));
  auto nd = derived_subgroup(n);
  std::size_t rows = 0;
  for (std::size_t i = 0; i < t->size(); ++i)
    if (t->degree(i) == 3 && !nd.is_subset_of(kernel_of(row_function(*t, i)))) ++rows;
  o.require(rows > 0, "every degree-3 row contains N' in its kernel");
  double s = seconds_since(t0);
  o.require(s < 5.0, "took " + fmt_seconds(s));
  if (o.ok)
    o.detail = "min cd(G|N) = 3; " + std::to_string(rows) + " degree-3 rows miss N' in " + fmt_seconds(s);
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t groups = 0;
  for (const auto& e : builtin_corpus()) {
    auto tg = build_entry(e);
    auto t = character_table(tg.group);
    auto rep = check_orthogonality(*t);
    o.require(t->size() == t->class_data()->num_classes(), e.name + ": |Irr| != class count");
    o.require(rep.degree_sum, e.name + ": sum of squared degrees != |G|");
    o.require(rep.square, e.name + ": table not square");
    o.require(rep.first, e.name + ": first orthogonality fails");
    o.require(rep.second, e.name + ": second orthogonality fails");
    ++groups;
  }
  double s = seconds_since(t0);
  o.require(s < 180.0, "took " + fmt_seconds(s));
  if (o.ok) o.detail = std::to_string(groups) + " groups exact, single thread, " + fmt_seconds(s);
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  SuiteConfig cfg;
  cfg.jobs = worker_count();
  auto corpus = full_corpus();
  auto r = run_suite(corpus, cfg);
  double s = seconds_since(t0);
  o.require(r.counts.fail == 0, std::to_string(r.counts.fail) + " Fail outcomes");
  for (const auto& x : r.outcomes)
    if (x.status == Status::Fail) {
      o.detail += " [" + x.theorem + " " + x.group + "/" + x.normal.name + ": " + x.reason + "]";
      break;
    }
  std::set<std::string> passed;
  for (const auto& x : r.outcomes)
    if (x.status == Status::Pass) passed.insert(x.theorem);
  for (const char* id : {"T3.1", "C3.2", "C3.3", "T4.1", "L4.2", "C4.3", "C4.4", "T4.5", "L4.6", "L5.2", "T5.3",
                         "TB", "TC", "TD", "T6.1", "C6.3"})
    o.require(passed.count(id), std::string("no Pass for ") + id);
  std::map<std::string, std::size_t> order;
  for (const auto& e : corpus) order[e.name] = e.group.group->order();
  for (const auto& x : r.outcomes) {
    if (x.theorem != "L5.1" || order[x.group] > 300 || x.normal.order == 1) continue;
    o.require(x.status == Status::Pass, "L5.1 not Pass on " + x.group + "/" + x.normal.name);
  }
  o.require(s < 600.0, "took " + fmt_seconds(s));
  if (o.ok)
    o.detail = std::to_string(r.counts.pass) + " pass, " + std::to_string(r.counts.inapplicable) +
               " inapplicable, " + std::to_string(r.counts.skipped) + " skipped, 0 fail; all ids covered; " +
               fmt_seconds(s);
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto corpus = full_corpus();
  auto res = hunt(corpus, {}, worker_count());
  o.require(res.skipped.empty(), "hunt skipped entries");
  std::size_t expected = 0;
  for (const auto& e : corpus)
    for (const auto& n : normal_subgroups(e.group.group))
      if (!n.is_trivial() && is_solvable(n)) ++expected;
  o.require(res.rows.size() == expected,
            "hunt emitted " + std::to_string(res.rows.size()) + " pairs, expected " + std::to_string(expected));
  bool seen = false;
  for (const auto& r : res.rows) {
    // the bounds, restated literally
    o.require(r.h <= r.n, r.group + "/" + r.normal.name + ": h > n");
    o.require(r.dl <= r.n * (r.n + 1) / 2, r.group + "/" + r.normal.name + ": dl > n(n+1)/2");
    if (r.group_solvable) o.require(r.dl <= 3 * r.n, r.group + "/" + r.normal.name + ": dl > 3n");
    o.require(r.ok(), r.group + "/" + r.normal.name + ": bound flag false");
    if (r.group == "gl23" && r.normal.name == "sl23") {
      seen = true;
      o.require(r.n == 3 && r.dl == 3 && r.h == 2, "GL(2,3)/SL(2,3) triple mismatch");
    }
  }
  o.require(seen, "GL(2,3)/SL(2,3) missing from hunt");
  if (o.ok) o.detail = std::to_string(res.rows.size()) + " solvable pairs; GL(2,3)/SL(2,3): n = 3, dl = 3, h = 2";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t inductions = 0, quotients = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.expected_order > 500) continue;
    auto tg = build_entry(e);
    auto g = tg.group;
    TableCache cache(g);
    auto t = cache.table();
    auto gclasses = t->class_data();
    std::vector<Subgroup> subs;
    try {
      subs = enumerate_subgroups(g);
    } catch (const GuardExceeded&) {
      subs = normal_subgroups(g);
    }
    for (const auto& h : subs) {
      auto th = cache.table_of(h);
      for (std::size_t j = 0; j < th->size(); ++j) {
        auto theta = row_function(*th, j);
        if (!(induce_by_fusion(theta, h, gclasses) == induce_by_summation(theta, h, gclasses))) {
          o.require(false, e.name + ": fusion != summation on a subgroup of order " + std::to_string(h.order()));
          return o;
        }
        ++inductions;
      }
    }
    auto normals = normal_subgroups(g);
    for (const auto& m : normals) {
      auto qm = coset_action(m);
      auto tm = character_table(qm.image);
      for (const auto& n : normals) {
        if (!m.is_subset_of(n)) continue;
        std::vector<ElemId> img;
        for (ElemId x : n.members()) img.push_back(qm.map(x));
        auto nbar = generated_subgroup(qm.image, img);
        o.require(cd_rel_mod(t, n, m) == irr_rel(tm, nbar).degrees,
                  e.name + ": cd_rel_mod differs from the quotient table for |N| = " + std::to_string(n.order()) +
                      ", |M| = " + std::to_string(m.order()));
        ++quotients;
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(inductions) + " inductions, " + std::to_string(quotients) + " quotient pairs agree; " +
               fmt_seconds(seconds_since(t0));
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::string args = "verify --builtin all --structured --jobs " + std::to_string(worker_count());
  auto a = run_cli(args);
  auto b = run_cli(args);
  o.require(a.status == 0 && b.status == 0, "exit status " + std::to_string(a.status) + "/" + std::to_string(b.status));
  o.require(!a.out.empty(), "empty report");
  o.require(a.out == b.out, "reports differ");
  if (o.ok) o.detail = "two runs byte-identical (" + std::to_string(a.out.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"GL(2,3) relative degree set", criterion1}, {"exceptional section", criterion2},
      {"Berger contrast", criterion3},            {"exactness suite", criterion4},
      {"theorem integration", criterion5},        {"bound replication", criterion6},
      {"oracle cross-checks", criterion7},        {"determinism", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failures ? 1 : 0;
}
