#pragma once

#include <string>

#include "relchar/builtin.hpp"

namespace relchar {

/// Parses the JSON group document:
///
///   { "name": "s3", "degree": 3,
///     "generators": [[2,3,1],[2,1,3]],
///     "normal_subgroups": [ {"name": "a3", "generators": [[2,3,1]]},
///                           {"name": "w", "words": [[1,2,-1]]} ] }
///
/// Generator rows are 1-based image arrays. A normal subgroup is given
/// either by image arrays or by words in the group generators (1-based
/// indices, negative for inverses).
TaggedGroup parse_group(const std::string& text,
                        std::size_t max_elements = PermGroup::kDefaultMaxElements);
TaggedGroup load_group_file(const std::string& path,
                            std::size_t max_elements = PermGroup::kDefaultMaxElements);

/// Inverse of parse_group; normal subgroups are written as image arrays.
std::string emit_group(const TaggedGroup& g);

}  // namespace relchar
