#pragma once

#include <string>
#include <vector>

#include "relchar/perm_group.hpp"
#include "relchar/subgroup.hpp"

namespace relchar {

struct TaggedNormal {
  std::string name;
  std::vector<Permutation> generators;
};

/// A group with distinguished normal subgroups given by generators.
struct TaggedGroup {
  GroupPtr group;
  std::vector<TaggedNormal> normals;

  /// Resolves a tag to a verified normal subgroup; throws InputError for an
  /// unknown tag or a tag that is not normal.
  Subgroup normal(const std::string& tag) const;
  std::vector<std::pair<std::string, Subgroup>> resolved_normals() const;
};

/// Built-in constructors. Names: trivial, cyclic[n], dihedral[n] (order 2n),
/// quaternion[2^k], elementary_abelian[p,k], symmetric[n], alternating[n],
/// agl1[p], sl23, gl23, heisenberg27, berger216, c3wrc2, s3xs3, q8xc3.
TaggedGroup builtin_group(const std::string& name, const std::vector<long long>& params = {},
                          std::size_t max_elements = PermGroup::kDefaultMaxElements);

/// Direct product on disjoint point sets.
TaggedGroup direct_product(const TaggedGroup& a, const TaggedGroup& b, std::string name);

}  // namespace relchar
