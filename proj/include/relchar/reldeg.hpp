#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relchar/characters.hpp"
#include "relchar/lattice.hpp"

namespace relchar {

/// Irr(G|N): the rows whose kernel does not contain N, with their degrees.
struct RelativeDegreeData {
  TablePtr table;
  Subgroup normal;
  std::vector<std::size_t> members;
  /// Sorted, distinct.
  std::vector<long> degrees;
  std::optional<long> min;
  std::optional<long> max;

  bool contains_row(std::size_t i) const;
};

/// True iff n lies in the kernel of row i.
bool kernel_contains(const CharacterTable& t, std::size_t i, const Subgroup& n);

/// Throws InputError unless n is normal in the table's group.
RelativeDegreeData irr_rel(const TablePtr& t, const Subgroup& n);

/// {chi(1) : chi in Irr(G|N), M in ker chi}, sorted.
std::vector<long> cd_rel_mod(const TablePtr& t, const Subgroup& n, const Subgroup& m);

/// A chief factor X/Y of G inside N, seen through one character.
struct SectionRecord {
  Subgroup x;
  Subgroup y;
  bool abelian = false;
  /// Set for abelian factors (elementary abelian p-groups).
  std::optional<std::uint64_t> prime;
  long degree_on_x = 0;
  long degree_on_y = 0;
  bool reducing = false;
  bool central_in_n = false;
  bool exceptional = false;
};

/// Every pair Y < X <= N of normal subgroups of G with X/Y a chief factor.
/// Throws InputError unless row is in Irr(G|N).
std::vector<SectionRecord> reducing_sections(TableCache& cache, const NormalLattice& lattice, const Subgroup& n,
                                             std::size_t row);

/// [X, N] <= Y. Throws InputError unless Y < X <= N.
bool section_central_in(const Subgroup& n, const Subgroup& x, const Subgroup& y);

}  // namespace relchar
