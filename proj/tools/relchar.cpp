#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "relchar/corpus.hpp"
#include "relchar/error.hpp"
#include "relchar/group_io.hpp"
#include "relchar/report.hpp"
#include "relchar/structure.hpp"

using namespace relchar;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kGuard = 3 };

struct Source {
  std::string file;
  std::string builtin;
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("file", src.file, "Group file (JSON)");
  cmd->add_option("--builtin", src.builtin, "Built-in group name");
}

std::vector<SuiteEntry> load(const Source& src, const Guards& guards, bool allow_all) {
  if (src.file.empty() == src.builtin.empty()) throw InputError("give exactly one of a group file or --builtin NAME");
  std::vector<SuiteEntry> out;
  if (!src.file.empty()) {
    auto tg = load_group_file(src.file, guards.max_elements);
    std::string name = tg.group->name().empty() ? src.file : tg.group->name();
    out.push_back({name, std::move(tg)});
  } else if (src.builtin == "all") {
    if (!allow_all) throw InputError("--builtin all is only accepted by verify");
    for (const auto& e : builtin_corpus()) out.push_back({e.name, build_entry(e, guards.max_elements)});
  } else {
    out.push_back({src.builtin, build_entry(corpus_entry(src.builtin), guards.max_elements)});
  }
  return out;
}

json normal_json(const NormalDescriptor& d) {
  return {{"name", d.name}, {"order", d.order}, {"generators", d.generator_words}};
}

std::string degree_set(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<std::pair<std::string, Subgroup>> select_normals(const SuiteEntry& e, const NormalLattice& lat,
                                                             const std::string& wanted) {
  std::vector<std::pair<std::string, Subgroup>> out;
  const auto& normals = lat.subgroups();
  for (std::size_t i = 0; i < normals.size(); ++i) {
    auto name = normal_name(e.group, normals, i);
    if (wanted.empty() || wanted == name) out.emplace_back(name, normals[i]);
  }
  if (!wanted.empty() && out.empty()) {
    // a tag can name a subgroup that another tag already labels
    for (const auto& [tag, s] : e.group.resolved_normals())
      if (tag == wanted) out.emplace_back(tag, s);
    if (out.empty()) throw InputError("no normal subgroup named '" + wanted + "'");
  }
  return out;
}

int cmd_table(const Source& src, const Guards& guards, bool structured) {
  auto e = load(src, guards, false).front();
  auto t = character_table(e.group.group, guards);
  std::cout << render_table(*t, e.name, structured ? ReportFormat::Structured : ReportFormat::Human);
  return kOk;
}

int cmd_normals(const Source& src, const Guards& guards, bool structured) {
  auto e = load(src, guards, false).front();
  NormalLattice lat(e.group.group);
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"name", "order", "abelian", "nilpotent", "dl", "generators"}};
  for (const auto& [name, n] : select_normals(e, lat, "")) {
    auto dl = derived_series(n).derived_length;
    std::string gens;
    for (const auto& w : n.generator_words()) gens += (gens.empty() ? "" : ", ") + w;
    rows.push_back({name, std::to_string(n.order()), is_abelian(n) ? "yes" : "no", is_nilpotent(n) ? "yes" : "no",
                    dl ? std::to_string(*dl) : "-", gens});
    arr.push_back({{"name", name},
                   {"order", n.order()},
                   {"generators", n.generator_words()},
                   {"abelian", is_abelian(n)},
                   {"nilpotent", is_nilpotent(n)},
                   {"derived_length", dl ? json(*dl) : json(nullptr)}});
  }
  if (structured)
    std::cout << json{{"group", e.name}, {"order", e.group.group->order()}, {"normal_subgroups", arr}}.dump(2) << "\n";
  else
    std::cout << e.name << ": order " << e.group.group->order() << "\n" << format_columns(rows);
  return kOk;
}

int cmd_reldeg(const Source& src, const Guards& guards, const std::string& wanted, bool sections, bool structured) {
  auto e = load(src, guards, false).front();
  GroupContext ctx(e.name, e.group.group, guards);
  auto t = ctx.table();
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"normal", "|N|", "cd(G|N)", "|Irr(G|N)|"}};
  std::string detail;
  for (const auto& [name, n] : select_normals(e, ctx.lattice(), wanted)) {
    const auto& d = ctx.rel(n);
    rows.push_back({name, std::to_string(n.order()), degree_set(d.degrees), std::to_string(d.members.size())});
    json j{{"normal", normal_json({name, n.order(), n.generator_words()})},
           {"degrees", d.degrees},
           {"members", d.members},
           {"min", d.min ? json(*d.min) : json(nullptr)},
           {"max", d.max ? json(*d.max) : json(nullptr)}};
    if (sections) {
      json per = json::array();
      for (std::size_t i : d.members) {
        json secs = json::array();
        std::vector<std::vector<std::string>> srows{
            {"  X", "Y", "p", "deg X", "deg Y", "reducing", "central", "exceptional"}};
        for (const auto& s : reducing_sections(ctx.cache(), ctx.lattice(), n, i)) {
          secs.push_back(section_to_json(s));
          srows.push_back({"  " + std::to_string(s.x.order()), std::to_string(s.y.order()),
                           s.prime ? std::to_string(*s.prime) : "-", std::to_string(s.degree_on_x),
                           std::to_string(s.degree_on_y), s.reducing ? "yes" : "no", s.central_in_n ? "yes" : "no",
                           s.exceptional ? "yes" : "no"});
        }
        per.push_back({{"row", i}, {"degree", t->degree(i)}, {"sections", secs}});
        detail += name + " X." + std::to_string(i + 1) + " (degree " + std::to_string(t->degree(i)) + ")\n" +
                  format_columns(srows);
      }
      j["sections"] = per;
    }
    arr.push_back(std::move(j));
  }
  if (structured)
    std::cout << json{{"group", e.name}, {"order", e.group.group->order()}, {"relative_degrees", arr}}.dump(2) << "\n";
  else
    std::cout << e.name << ": order " << e.group.group->order() << "\n" << format_columns(rows) << detail;
  return kOk;
}

int cmd_verify(const Source& src, const Guards& guards, const std::string& theorems, bool structured,
               std::size_t max_order, bool tagged_only, unsigned jobs, bool timing) {
  SuiteConfig cfg;
  cfg.guards = guards;
  cfg.max_order = max_order;
  cfg.tagged_only = tagged_only;
  cfg.jobs = jobs;
  if (theorems != "all") {
    std::stringstream ss(theorems);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) cfg.theorems.push_back(id);
    if (cfg.theorems.empty()) throw InputError("empty theorem list");
  }
  auto report = run_suite(load(src, guards, true), cfg);
  std::cout << render_report(report, structured ? ReportFormat::Structured : ReportFormat::Human, timing);
  return report.counts.fail ? kFail : kOk;
}

int cmd_corpus(bool structured) {
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"name", "order", "constructor", "tagged normals", "note"}};
  for (const auto& e : builtin_corpus()) {
    auto tg = build_entry(e);
    std::string ctor = e.constructor;
    if (!e.params.empty()) {
      ctor += "(";
      for (std::size_t i = 0; i < e.params.size(); ++i) ctor += (i ? "," : "") + std::to_string(e.params[i]);
      ctor += ")";
    }
    std::string tags;
    json jt = json::array();
    for (const auto& [tag, s] : tg.resolved_normals()) {
      tags += (tags.empty() ? "" : " ") + tag + ":" + std::to_string(s.order());
      jt.push_back({{"name", tag}, {"order", s.order()}, {"generators", s.generator_words()}});
    }
    rows.push_back({e.name, std::to_string(e.expected_order), ctor, tags, e.note});
    arr.push_back({{"name", e.name},
                   {"order", e.expected_order},
                   {"constructor", e.constructor},
                   {"params", e.params},
                   {"tagged_normals", jt},
                   {"note", e.note}});
  }
  if (structured)
    std::cout << arr.dump(2) << "\n";
  else
    std::cout << format_columns(rows);
  return kOk;
}

int cmd_hunt(const Guards& guards, unsigned jobs, bool structured) {
  std::vector<SuiteEntry> corpus;
  for (const auto& e : builtin_corpus()) corpus.push_back({e.name, build_entry(e, guards.max_elements)});
  auto res = hunt(corpus, guards, jobs);
  bool ok = true;
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{
      {"group", "normal", "|N|", "n", "dl", "h", "G solvable", "h<=n", "dl<=n(n+1)/2", "dl<=3n", "dl<=n"}};
  auto yn = [](bool b) { return std::string(b ? "yes" : "NO"); };
  for (const auto& r : res.rows) {
    ok &= r.ok();
    rows.push_back({r.group, r.normal.name, std::to_string(r.normal.order), std::to_string(r.n), std::to_string(r.dl),
                    std::to_string(r.h), r.group_solvable ? "yes" : "no", yn(r.h_bound), yn(r.quadratic_bound),
                    r.linear_bound ? yn(*r.linear_bound) : "-", r.dl <= r.n ? "yes" : "no"});
    arr.push_back({{"group", r.group},
                   {"normal", normal_json(r.normal)},
                   {"n", r.n},
                   {"dl", r.dl},
                   {"h", r.h},
                   {"group_solvable", r.group_solvable},
                   {"h_le_n", r.h_bound},
                   {"dl_le_quadratic", r.quadratic_bound},
                   {"dl_le_3n", r.linear_bound ? json(*r.linear_bound) : json(nullptr)},
                   {"dl_le_n", r.dl <= r.n}});
  }
  json skipped = json::array();
  for (const auto& [g, why] : res.skipped) skipped.push_back({{"group", g}, {"reason", why}});
  if (structured) {
    std::cout << json{{"schema", kReportSchemaVersion}, {"pairs", arr}, {"skipped", skipped}, {"bounds_hold", ok}}.dump(2)
              << "\n";
  } else {
    std::cout << format_columns(rows);
    for (const auto& [g, why] : res.skipped) std::cout << "skipped " << g << ": " << why << "\n";
    std::cout << (ok ? "all asserted bounds hold\n" : "BOUND VIOLATED\n");
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative character degree sets of normal subgroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Guards guards;
  try {
    guards = Guards::from_environment();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  app.add_option("--max-elements", guards.max_elements, "Element enumeration guard")->capture_default_str();
  app.add_option("--max-table", guards.max_table_order, "Character table order guard")->capture_default_str();
  app.add_option("--max-subgroups", guards.max_subgroup_enum, "Subgroup enumeration order guard")
      ->capture_default_str();

  Source src;
  bool structured = false;
  std::string normal, theorems = "all";
  bool sections = false, tagged_only = false, timing = false;
  std::size_t max_order = 0;
  unsigned jobs = 1;

  auto* table = app.add_subcommand("table", "Print the character table");
  add_source(table, src);
  table->add_flag("--structured", structured, "JSON output");

  auto* normals = app.add_subcommand("normals", "List the normal subgroups");
  add_source(normals, src);
  normals->add_flag("--structured", structured, "JSON output");

  auto* reldeg = app.add_subcommand("reldeg", "Relative degree sets cd(G|N)");
  add_source(reldeg, src);
  reldeg->add_option("--normal", normal, "Normal subgroup name (default: every normal subgroup)");
  reldeg->add_flag("--sections", sections, "Also list chief sections for each character in Irr(G|N)");
  reldeg->add_flag("--structured", structured, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check the theorem suite");
  add_source(verify, src);
  verify->add_option("--theorems", theorems, "Comma separated ids or 'all'")->capture_default_str();
  verify->add_flag("--structured", structured, "JSON output");
  verify->add_option("--max-order", max_order, "Skip groups above this order (0: no cap)");
  verify->add_flag("--tagged-only", tagged_only, "Only the tagged normal subgroups");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Include per-check timings");

  auto* corpus = app.add_subcommand("corpus", "List the built-in groups");
  corpus->add_flag("--structured", structured, "JSON output");

  auto* hunt_cmd = app.add_subcommand("hunt", "Emit (n, dl N, h N) for solvable N over the corpus");
  hunt_cmd->add_flag("--structured", structured, "JSON output");
  hunt_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*table) return cmd_table(src, guards, structured);
    if (*normals) return cmd_normals(src, guards, structured);
    if (*reldeg) return cmd_reldeg(src, guards, normal, sections, structured);
    if (*verify) return cmd_verify(src, guards, theorems, structured, max_order, tagged_only, jobs, timing);
    if (*corpus) return cmd_corpus(structured);
    if (*hunt_cmd) return cmd_hunt(guards, jobs, structured);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Defect& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}
