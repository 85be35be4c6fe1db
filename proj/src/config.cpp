#include "relchar/config.hpp"

#include <cstdlib>
#include <string>

#include "relchar/error.hpp"

namespace relchar {

namespace {

void override_from(const char* var, std::size_t& field) {
  const char* v = std::getenv(var);
  if (!v || !*v) return;
  try {
    std::size_t pos = 0;
    unsigned long long n = std::stoull(v, &pos);
    if (pos != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    field = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw InputError(std::string(var) + " must be a positive integer, got '" + v + "'");
  }
}

}  // namespace

Guards Guards::from_environment() {
  Guards g;
  override_from("RELCHAR_MAX_ELEMENTS", g.max_elements);
  override_from("RELCHAR_MAX_TABLE", g.max_table_order);
  override_from("RELCHAR_MAX_SUBGROUPS", g.max_subgroup_enum);
  return g;
}

}  // namespace relchar
