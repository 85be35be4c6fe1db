#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "relchar/subgroup.hpp"

namespace relchar {

// ---- arithmetic helpers --------------------------------------------------

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing m.
std::uint64_t p_part(std::uint64_t m, std::uint64_t p);
bool is_prime_power_of(std::uint64_t m, std::uint64_t p);

// ---- generation ----------------------------------------------------------

Subgroup generated_subgroup(const GroupPtr& g, std::span<const ElemId> seeds);
/// Wraps an already-closed sorted member list, choosing a small generating set.
Subgroup subgroup_from_members(const GroupPtr& g, std::vector<ElemId> members);
/// Smallest subgroup normal in `within` containing seeds (which must lie in
/// `within`).
Subgroup normal_closure_in(const Subgroup& within, std::span<const ElemId> seeds);
/// Smallest normal subgroup of g containing seeds; flagged normal.
Subgroup normal_closure(const GroupPtr& g, std::span<const ElemId> seeds);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// [A, B], generated by commutators [a, b].
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Subgroup& n);
Subgroup center(const Subgroup& w);
Subgroup normalizer(const Subgroup& w, const Subgroup& h);

bool normalizes(const Subgroup& w, const Subgroup& h);
/// Normal in the whole parent group.
bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& w);
bool is_p_group(const Subgroup& w, std::uint64_t p);

// ---- series ----------------------------------------------------------------

enum class SeriesKind { Derived, LowerCentral, Chief, Fitting };

struct NormalSeries {
  SeriesKind kind;
  /// Descending; the last term appears once.
  std::vector<Subgroup> terms;
};

struct DerivedSeriesResult {
  NormalSeries series;
  /// nullopt when the series stops above the trivial subgroup.
  std::optional<int> derived_length;
};
DerivedSeriesResult derived_series(const Subgroup& n);
bool is_solvable(const Subgroup& n);
/// Throws InputError when n is not solvable.
int derived_length(const Subgroup& n);

struct LowerCentralResult {
  NormalSeries series;
  bool nilpotent;
  Subgroup residual;
};
LowerCentralResult lower_central_series(const Subgroup& n);
bool is_nilpotent(const Subgroup& n);

// ---- p-local subgroups -----------------------------------------------------

/// Sylow p-subgroup of w grown by ascent through normalizers.
Subgroup sylow_subgroup(const Subgroup& w, std::uint64_t p);
/// Largest normal p-subgroup of w: the core of a Sylow p-subgroup.
Subgroup o_p(const Subgroup& w, std::uint64_t p);
Subgroup fitting_subgroup(const Subgroup& w);
/// Throws InputError on nonsolvable input.
int fitting_height(const Subgroup& w);
/// Generated by the elements of w of order prime to p.
Subgroup o_p_residual(const Subgroup& w, std::uint64_t p);
/// The normal p-complement when it exists (it is then O^p(w)).
std::optional<Subgroup> normal_p_complement(const Subgroup& w, std::uint64_t p);
bool has_normal_p_complement(const Subgroup& w, std::uint64_t p);

// ---- conjugacy -----------------------------------------------------------

struct ConjugacyPartition {
  /// Sorted by smallest member; each class sorted.
  std::vector<std::vector<ElemId>> classes;
  std::vector<std::uint32_t> class_of;
};
ConjugacyPartition conjugacy_partition(const PermGroup& g);

}  // namespace relchar
