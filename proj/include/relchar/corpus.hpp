#pragma once

#include <string>
#include <vector>

#include "relchar/builtin.hpp"

namespace relchar {

struct CorpusEntry {
  std::string name;
  std::string constructor;
  std::vector<long long> params;
  std::size_t expected_order = 0;
  std::string note;
};

/// The built-in groups in canonical (report) order.
const std::vector<CorpusEntry>& builtin_corpus();
/// Throws InputError for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);
/// Builds the group and checks its order against the entry.
TaggedGroup build_entry(const CorpusEntry& e, std::size_t max_elements = PermGroup::kDefaultMaxElements);

}  // namespace relchar
