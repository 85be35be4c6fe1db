#pragma once

#include <cstdint>
#include <vector>

#include "relchar/character_table.hpp"
#include "relchar/epimorphism.hpp"

namespace relchar {

/// A function on the conjugacy classes of ClassData::group.
struct ClassFunction {
  ClassDataPtr classes;
  std::vector<Cyclotomic> values;

  const PermGroup& group() const { return *classes->group; }
  const Cyclotomic& operator[](std::size_t k) const { return values[k]; }
  /// Value at an element id of the group.
  const Cyclotomic& at(ElemId x) const { return values[classes->class_of[x]]; }
  /// Value at the identity; throws Defect unless it is a rational integer.
  long degree() const;
  bool operator==(const ClassFunction& o) const { return values == o.values; }
};

ClassFunction row_function(const CharacterTable& t, std::size_t i);
ClassFunction trivial_character(const ClassDataPtr& cd);
ClassFunction regular_character(const ClassDataPtr& cd);

/// (1/|G|) sum_k |C_k| a(g_k) conj(b(g_k)). Throws InputError when the
/// functions live on different groups and Defect when the value is not
/// rational.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction product(const ClassFunction& a, const ClassFunction& b);
ClassFunction conjugate(const ClassFunction& a);

/// Restriction to h; hclasses must be the classes of h.as_group().
ClassFunction restrict(const ClassFunction& f, const Subgroup& h, const ClassDataPtr& hclasses);

struct Constituent {
  std::size_t row = 0;
  long multiplicity = 0;
};
/// Decomposition against a table on the same group. Throws Defect when
/// a multiplicity is not a nonnegative integer or degrees do not add up.
std::vector<Constituent> constituents(const ClassFunction& f, const CharacterTable& t);

/// Constituents of the restriction of f to the normal subgroup n, with the
/// equal-degree property of normal restrictions asserted.
std::vector<Constituent> normal_constituents(const ClassFunction& f, const Subgroup& n, const CharacterTable& nt);

/// theta lives on h.as_group(); gclasses on the parent of h.
ClassFunction induce_by_summation(const ClassFunction& theta, const Subgroup& h, const ClassDataPtr& gclasses);
ClassFunction induce_by_fusion(const ClassFunction& theta, const Subgroup& h, const ClassDataPtr& gclasses);
/// Element summation up to order 2000, class fusion above.
ClassFunction induce(const ClassFunction& theta, const Subgroup& h, const ClassDataPtr& gclasses);

/// {g : f(g) = f(1)}, flagged normal.
Subgroup kernel_of(const ClassFunction& f);
/// Subgroup generated by {g : f(g) != 0}.
Subgroup vanishing_off(const ClassFunction& f);

struct Determinant {
  ClassFunction lambda;
  std::uint64_t order = 1;
};
/// Determinant character and its multiplicative order.
Determinant det_order(const ClassFunction& chi);

/// Eigenvalue multiplicities of a representation affording chi at the
/// representative of class k: entry j counts zeta_n^j, n the element order.
std::vector<long> eigenvalue_multiplicities(const ClassFunction& chi, std::size_t k);

/// Stabilizer in the parent of n of theta (a class function on n.as_group()).
/// Throws InputError unless n is normal.
Subgroup inertia_group(const Subgroup& n, const ClassFunction& theta);

/// Inflation of a class function of phi.target along phi.
ClassFunction inflate(const ClassFunction& chibar, const Epimorphism& phi, const ClassDataPtr& source_classes);
/// Row index of the inflation in the source table; Defect when absent.
std::size_t lift_character(const ClassFunction& chibar, const Epimorphism& phi, const CharacterTable& source);

}  // namespace relchar
