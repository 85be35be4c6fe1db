#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relchar/builtin.hpp"
#include "relchar/reldeg.hpp"

namespace relchar {

/// Identifiers of the checkable statements, in report order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

enum class Status { Inapplicable, Pass, Fail, Skipped };
std::string to_string(Status s);

struct NormalDescriptor {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> generator_words;
};

struct TheoremOutcome {
  std::string theorem;
  std::string group;
  NormalDescriptor normal;
  Status status = Status::Inapplicable;
  /// Failed hypothesis (Inapplicable), guard (Skipped) or violated
  /// conclusion (Fail).
  std::string reason;
  nlohmann::json witness;
  double millis = 0;
};

/// Per-group state shared by all checks on that group: tables of the group
/// and its subgroups, the normal lattice and lazily computed facts.
class GroupContext {
 public:
  GroupContext(std::string name, GroupPtr g, Guards guards = {});

  const std::string& name() const { return name_; }
  const GroupPtr& group() const { return group_; }
  const Guards& guards() const { return guards_; }
  TableCache& cache() { return cache_; }
  TablePtr table() { return cache_.table(); }
  const NormalLattice& lattice() const { return lattice_; }
  const std::vector<Subgroup>& normals() const { return lattice_.subgroups(); }

  const RelativeDegreeData& rel(const Subgroup& n);
  bool solvable();
  bool nilpotent(const Subgroup& s);
  /// nullopt for nonsolvable s.
  std::optional<int> derived_len(const Subgroup& s);
  bool p_solvable(std::uint64_t p);
  /// Kernels and vanishing-off subgroups of the rows of the table.
  const Subgroup& kernel(std::size_t row);
  const Subgroup& vanishing(std::size_t row);
  /// nullptr, with the guard message in *why, when enumeration is blocked.
  const std::vector<Subgroup>* all_subgroups(std::string* why);

 private:
  std::string name_;
  GroupPtr group_;
  Guards guards_;
  TableCache cache_;
  NormalLattice lattice_;
  std::map<std::vector<ElemId>, RelativeDegreeData> rel_;
  std::optional<bool> solvable_;
  std::map<std::vector<ElemId>, bool> nilpotent_;
  std::map<std::vector<ElemId>, std::optional<int>> derived_len_;
  std::map<std::uint64_t, bool> p_solvable_;
  std::vector<std::optional<Subgroup>> kernels_;
  std::vector<std::optional<Subgroup>> vanishing_;
  bool subgroups_tried_ = false;
  std::vector<Subgroup> subgroups_;
  std::string subgroups_error_;
};

/// Evaluates one statement on (G, N). N must be normal in G. Guard
/// exceedance becomes Skipped.
TheoremOutcome check_theorem(const std::string& id, GroupContext& ctx, const Subgroup& n,
                             const std::string& normal_name);
TheoremOutcome check_thm_D(GroupContext& ctx, const Subgroup& n, const std::string& normal_name);
TheoremOutcome check_thm_6_1(GroupContext& ctx, const Subgroup& n, const std::string& normal_name);

/// Name of a normal subgroup: a matching tag, "1", "G", or N<index> by
/// position in the sorted normal lattice.
std::string normal_name(const TaggedGroup& tg, const std::vector<Subgroup>& normals, std::size_t index);

struct SuiteEntry {
  std::string name;
  TaggedGroup group;
};

struct SuiteConfig {
  std::vector<std::string> theorems;
  bool tagged_only = false;
  /// Groups above this order are reported as Skipped; 0 means no cap.
  std::size_t max_order = 0;
  Guards guards;
  unsigned jobs = 1;
};

struct SuiteCounts {
  std::size_t pass = 0;
  std::size_t inapplicable = 0;
  std::size_t skipped = 0;
  std::size_t fail = 0;
};

struct GroupEcho {
  std::string name;
  std::size_t order = 0;
  std::uint64_t dixon_prime = 0;
  std::size_t normal_subgroups = 0;
};

struct SuiteReport {
  std::vector<TheoremOutcome> outcomes;
  SuiteCounts counts;
  Guards guards;
  std::vector<std::string> theorems;
  std::vector<GroupEcho> groups;
};

SuiteCounts count_outcomes(const std::vector<TheoremOutcome>& outcomes);
/// Evaluates every requested statement on every (G, N) pair. Outcomes are
/// ordered by corpus entry, then normal subgroup, then statement,
/// independent of the number of worker threads.
SuiteReport run_suite(const std::vector<SuiteEntry>& corpus, const SuiteConfig& config);

/// One solvable (G, N) pair with N > 1 and the bounds asserted on it.
struct HuntRow {
  std::string group;
  NormalDescriptor normal;
  long n = 0;
  int dl = 0;
  int h = 0;
  bool group_solvable = false;
  bool h_bound = true;        // h(N) <= n
  bool quadratic_bound = true;  // dl N <= n(n+1)/2
  /// dl N <= 3n, asserted only when G is solvable.
  std::optional<bool> linear_bound;
  bool ok() const { return h_bound && quadratic_bound && linear_bound.value_or(true); }
};

struct HuntResult {
  std::vector<HuntRow> rows;
  /// Entries blocked by a guard, with the reason.
  std::vector<std::pair<std::string, std::string>> skipped;
};

HuntResult hunt(const std::vector<SuiteEntry>& corpus, const Guards& guards, unsigned jobs = 1);

}  // namespace relchar
