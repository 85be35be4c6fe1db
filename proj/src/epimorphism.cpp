#include "relchar/epimorphism.hpp"

#include <algorithm>
#include <limits>

#include "relchar/error.hpp"
#include "relchar/structure.hpp"

namespace relchar {

CosetAction coset_action(const Subgroup& h) {
  const PermGroup& g = h.group();
  const std::size_t n = g.order();
  if (n % h.order() != 0) throw InputError("not a subgroup: order does not divide group order");
  const std::size_t index = n / h.order();
  if (index > 65535) throw GuardExceeded("coset action degree too large", index);

  // Right coset Hx = {h x}; coset ids follow the smallest member.
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset(n, kNone);
  std::vector<ElemId> reps;
  for (ElemId x = 0; x < n; ++x) {
    if (coset[x] != kNone) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElemId y : h.members()) {
      ElemId hx = g.mul(y, x);
      if (coset[hx] != kNone) throw InputError("not a subgroup: cosets overlap");
      coset[hx] = id;
    }
  }
  if (reps.size() != index) throw InputError("not a subgroup");

  auto action = [&](ElemId x) {
    std::vector<Point> im(index);
    for (std::size_t c = 0; c < index; ++c) im[c] = static_cast<Point>(coset[g.mul(reps[c], x)]);
    return Permutation(std::move(im));
  };

  std::vector<Permutation> gens;
  for (ElemId s : g.generator_ids()) gens.push_back(action(s));
  std::string nm = g.name().empty() ? "" : g.name() + "/" + std::to_string(h.order());
  auto image = std::make_shared<const PermGroup>(index, std::move(gens), nm);

  std::vector<ElemId> image_of(n);
  std::vector<ElemId> kernel;
  for (ElemId x = 0; x < n; ++x) {
    image_of[x] = image->id_of(action(x));
    if (image_of[x] == PermGroup::identity()) kernel.push_back(x);
  }
  Subgroup ker = subgroup_from_members(h.parent(), std::move(kernel));
  ker.mark_normal();
  CosetAction out{image, Epimorphism{h.parent(), image, std::move(image_of), std::move(ker)}};
  return out;
}

bool verify_homomorphism(const Epimorphism& f) {
  const PermGroup& s = *f.source;
  const PermGroup& t = *f.target;
  for (ElemId x = 0; x < s.order(); ++x)
    for (ElemId y = 0; y < s.order(); ++y)
      if (f(s.mul(x, y)) != t.mul(f(x), f(y))) return false;
  return true;
}

}  // namespace relchar
