#include "relchar/report.hpp"

#include <algorithm>
#include <sstream>

namespace relchar {

using nlohmann::json;

std::string format_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

namespace {

json counts_json(const SuiteCounts& c) {
  return {{"pass", c.pass}, {"inapplicable", c.inapplicable}, {"skipped", c.skipped}, {"fail", c.fail}};
}

json outcome_json(const TheoremOutcome& o, bool timing) {
  json j{{"theorem", o.theorem},
         {"group", o.group},
         {"normal", {{"name", o.normal.name}, {"order", o.normal.order}, {"generators", o.normal.generator_words}}},
         {"status", to_string(o.status)}};
  if (!o.reason.empty()) j["reason"] = o.reason;
  if (!o.witness.is_null()) j["witness"] = o.witness;
  if (timing) j["millis"] = o.millis;
  return j;
}

std::string summary_line(const SuiteCounts& c) {
  std::ostringstream s;
  s << "verification report: " << c.pass << " pass, " << c.inapplicable << " inapplicable, " << c.skipped
    << " skipped, " << c.fail << " fail\n";
  return s.str();
}

}  // namespace

json report_to_json(const SuiteReport& r, bool timing) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(outcome_json(o, timing));
  json groups = json::array();
  for (const auto& g : r.groups)
    groups.push_back({{"name", g.name},
                      {"order", g.order},
                      {"dixon_prime", g.dixon_prime},
                      {"normal_subgroups", g.normal_subgroups}});
  return {{"schema", kReportSchemaVersion},
          {"environment",
           {{"guards",
             {{"max_elements", r.guards.max_elements},
              {"max_table_order", r.guards.max_table_order},
              {"max_subgroup_enum", r.guards.max_subgroup_enum}}},
            {"theorems", r.theorems},
            {"groups", groups}}},
          {"outcomes", outcomes},
          {"aggregate", counts_json(r.counts)}};
}

std::string render_report(const SuiteReport& r, ReportFormat format, bool timing) {
  if (format == ReportFormat::Structured) return report_to_json(r, timing).dump(2) + "\n";
  std::string out = summary_line(r.counts);
  for (const auto& id : r.theorems) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"group", "normal", "|N|", "status", "detail"});
    if (timing) rows.front().push_back("ms");
    for (const auto& o : r.outcomes) {
      if (o.theorem != id) continue;
      std::vector<std::string> row{o.group, o.normal.name, std::to_string(o.normal.order), to_string(o.status),
                                   o.reason};
      if (timing) {
        std::ostringstream ms;
        ms.precision(1);
        ms << std::fixed << o.millis;
        row.push_back(ms.str());
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() == 1) continue;
    SuiteCounts c;
    for (const auto& o : r.outcomes) {
      if (o.theorem != id) continue;
      switch (o.status) {
        case Status::Pass: ++c.pass; break;
        case Status::Inapplicable: ++c.inapplicable; break;
        case Status::Skipped: ++c.skipped; break;
        case Status::Fail: ++c.fail; break;
      }
    }
    out += "\n== " + id + " (" + std::to_string(c.pass) + " pass, " + std::to_string(c.inapplicable) +
           " inapplicable, " + std::to_string(c.skipped) + " skipped, " + std::to_string(c.fail) + " fail)\n";
    out += format_columns(rows);
  }
  return out;
}

json cyclotomic_to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coefficients()) coeffs.push_back(q.get_str());
  return {{"conductor", c.conductor()}, {"coefficients", coeffs}};
}

json table_to_json(const CharacterTable& t, const std::string& name) {
  const auto& cd = t.classes();
  const auto& g = *cd.group;
  json classes = json::array();
  for (std::size_t k = 0; k < cd.num_classes(); ++k)
    classes.push_back({{"size", cd.sizes[k]},
                       {"order", cd.rep_orders[k]},
                       {"representative", g.word_string(cd.representatives[k])}});
  json power = json::object();
  for (const auto& [p, m] : cd.power_maps) power[std::to_string(p)] = m;
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
    rows.push_back(r);
  }
  return {{"group", name},
          {"order", g.order()},
          {"exponent", g.exponent()},
          {"dixon_prime", t.dixon_prime()},
          {"classes", classes},
          {"power_maps", power},
          {"inverse_map", cd.inverse_map},
          {"rows", rows}};
}

std::string render_table(const CharacterTable& t, const std::string& name, ReportFormat format) {
  if (format == ReportFormat::Structured) return table_to_json(t, name).dump(2) + "\n";
  const auto& cd = t.classes();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> sizes{"size"}, orders{"order"};
  for (std::size_t k = 0; k < cd.num_classes(); ++k) {
    sizes.push_back(std::to_string(cd.sizes[k]));
    orders.push_back(std::to_string(cd.rep_orders[k]));
  }
  rows.push_back(std::move(orders));
  rows.push_back(std::move(sizes));
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> r{"X." + std::to_string(i + 1)};
    for (const auto& v : t.row(i)) r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  return name + ": order " + std::to_string(cd.group_order()) + ", " + std::to_string(cd.num_classes()) +
         " classes, Dixon prime " + std::to_string(t.dixon_prime()) + "\n" + format_columns(rows);
}

json section_to_json(const SectionRecord& s) {
  json j{{"X_order", s.x.order()},
         {"Y_order", s.y.order()},
         {"abelian", s.abelian},
         {"degree_on_X", s.degree_on_x},
         {"degree_on_Y", s.degree_on_y},
         {"reducing", s.reducing},
         {"central_in_N", s.central_in_n},
         {"exceptional", s.exceptional}};
  j["prime"] = s.prime ? json(*s.prime) : json(nullptr);
  return j;
}

}  // namespace relchar
