#pragma once

#include <cstddef>

namespace relchar {

struct Guards {
  std::size_t max_elements = 100000;
  std::size_t max_table_order = 5000;
  std::size_t max_subgroup_enum = 300;

  /// Defaults overridden by RELCHAR_MAX_ELEMENTS, RELCHAR_MAX_TABLE and
  /// RELCHAR_MAX_SUBGROUPS when set.
  static Guards from_environment();
};

}  // namespace relchar
