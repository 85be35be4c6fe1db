#include "relchar/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relchar/error.hpp"

namespace relchar {

using nlohmann::json;

namespace {

Permutation parse_row(const json& row, std::size_t degree, const std::string& where) {
  if (!row.is_array()) throw InputError(where + ": expected an integer array");
  std::vector<long long> v;
  for (const auto& x : row) {
    if (!x.is_number_integer()) throw InputError(where + ": non-integer entry");
    v.push_back(x.get<long long>());
  }
  if (v.size() != degree)
    throw InputError(where + ": length " + std::to_string(v.size()) + " does not match degree " +
                     std::to_string(degree));
  try {
    return Permutation::from_one_based(v);
  } catch (const InputError& e) {
    throw InputError(where + " is not a permutation: " + e.what());
  }
}

}  // namespace

TaggedGroup parse_group(const std::string& text, std::size_t max_elements) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed group document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("group document must be an object");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw InputError("group document needs an integer 'degree'");
  long long degree = doc["degree"].get<long long>();
  if (degree < 1 || degree > 65535) throw InputError("degree must be in 1..65535");
  std::string name = doc.value("name", std::string{});
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw InputError("group document needs a 'generators' array");

  std::vector<Permutation> gens;
  std::size_t row_no = 0;
  for (const auto& row : doc["generators"])
    gens.push_back(parse_row(row, degree, "generator row " + std::to_string(++row_no)));

  TaggedGroup out{std::make_shared<const PermGroup>(degree, gens, name, max_elements), {}};

  if (doc.contains("normal_subgroups")) {
    const auto& ns = doc["normal_subgroups"];
    if (!ns.is_array()) throw InputError("'normal_subgroups' must be an array");
    for (const auto& entry : ns) {
      if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
        throw InputError("normal subgroup entries need a 'name'");
      TaggedNormal t{entry["name"].get<std::string>(), {}};
      const std::string where = "normal subgroup '" + t.name + "'";
      if (entry.contains("generators")) {
        std::size_t k = 0;
        for (const auto& row : entry["generators"])
          t.generators.push_back(parse_row(row, degree, where + " generator " + std::to_string(++k)));
      }
      if (entry.contains("words")) {
        for (const auto& w : entry["words"]) {
          Permutation p = Permutation::identity(degree);
          if (!w.is_array()) throw InputError(where + ": words must be integer arrays");
          for (const auto& letter : w) {
            if (!letter.is_number_integer()) throw InputError(where + ": bad word letter");
            long long l = letter.get<long long>();
            if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > gens.size())
              throw InputError(where + ": word letter " + std::to_string(l) + " out of range");
            p = p * (l > 0 ? gens[l - 1] : gens[-l - 1].inverse());
          }
          t.generators.push_back(p);
        }
      }
      out.normals.push_back(std::move(t));
    }
    for (const auto& t : out.normals) out.normal(t.name);  // validates
  }
  return out;
}

TaggedGroup load_group_file(const std::string& path, std::size_t max_elements) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group(ss.str(), max_elements);
}

std::string emit_group(const TaggedGroup& g) {
  json doc;
  doc["name"] = g.group->name();
  doc["degree"] = g.group->degree();
  doc["generators"] = json::array();
  for (const auto& p : g.group->generators()) doc["generators"].push_back(p.one_based());
  if (!g.normals.empty()) {
    doc["normal_subgroups"] = json::array();
    for (const auto& t : g.normals) {
      json e;
      e["name"] = t.name;
      e["generators"] = json::array();
      for (const auto& p : t.generators) e["generators"].push_back(p.one_based());
      doc["normal_subgroups"].push_back(e);
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace relchar
