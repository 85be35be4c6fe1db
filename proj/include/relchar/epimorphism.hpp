#pragma once

#include <vector>

#include "relchar/subgroup.hpp"

namespace relchar {

/// Surjective homomorphism between element tables.
struct Epimorphism {
  GroupPtr source;
  GroupPtr target;
  /// Indexed by source element id.
  std::vector<ElemId> image_of;
  Subgroup kernel;

  ElemId operator()(ElemId x) const { return image_of[x]; }
};

struct CosetAction {
  GroupPtr image;
  Epimorphism map;
};

/// Action of the whole parent of h on the right cosets of h. When h is
/// normal the kernel is h and the image is a faithful model of G/h.
CosetAction coset_action(const Subgroup& h);

/// Exhaustive homomorphism check x, y -> f(xy) == f(x) f(y).
bool verify_homomorphism(const Epimorphism& f);

}  // namespace relchar
