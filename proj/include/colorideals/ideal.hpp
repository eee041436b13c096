#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "colorideals/adapters.hpp"
#include "colorideals/coloring.hpp"
#include "colorideals/errors.hpp"
#include "colorideals/poset.hpp"

namespace colorideals {

using BigInt = boost::multiprecision::cpp_int;

/// Membership test identified by a stable id (used in fingerprints).
struct Predicate {
  std::string id;
  std::function<bool(const Coloring&)> test;
};

/// Builtin predicates over colorings with `colors` colors:
///   all, mono, at-most-one:<c>, exactly-one:<c>, at-most:<k>:<c>.
/// exactly-one is not downward closed; it exists to exercise the audit.
Predicate builtin_predicate(std::string_view id, int colors);

/// An ideal X of C(P): Forb(basis), or a predicate, optionally intersected
/// with the image of a class adapter.
class IdealSpec {
 public:
  /// The basis is reduced to its minimal elements.
  IdealSpec(ColorPoset poset, std::vector<Coloring> basis, AdapterPtr adapter = nullptr);
  IdealSpec(ColorPoset poset, Predicate predicate, AdapterPtr adapter = nullptr);

  /// The adapter's class avoiding the given native patterns, on its own poset.
  static IdealSpec from_adapter(AdapterPtr adapter, const std::vector<NativeObject>& avoid = {});

  const ColorPoset& poset() const { return poset_; }
  int colors() const { return poset_.size(); }
  const std::vector<Coloring>& basis() const { return basis_; }
  const std::optional<Predicate>& predicate() const { return predicate_; }
  const AdapterPtr& adapter() const { return adapter_; }

  /// Full membership test, without assuming anything about restrictions.
  bool contains(const Coloring& k) const;

  /// Membership of k given that k minus its last vertex is a member.
  bool admits_extension(const Coloring& k) const;

  /// Canonical JSON of (poset, minimal basis or predicate id, adapter,
  /// legend version).
  std::string canonical() const;
  /// 16 hex digits of the FNV-1a hash of canonical().
  std::string fingerprint() const;

 private:
  ColorPoset poset_;
  std::vector<Coloring> basis_;
  std::optional<Predicate> predicate_;
  AdapterPtr adapter_;
};

/// Minimal elements of `basis` under containment, sorted, duplicates removed.
std::vector<Coloring> minimal_basis(const ColorPoset& poset, std::vector<Coloring> basis);

struct Budget {
  int max_n = 10;
  std::size_t max_members = 10'000'000;
  /// Zero means no limit.
  std::chrono::milliseconds max_time{0};
  /// Zero means one per hardware thread.
  int workers = 0;
};

/// Thrown by enumerate_level when a budget is exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Level = std::vector<Coloring>;

/// X_n from X_{n-1} (sorted, duplicate-free). The result is sorted.
Level enumerate_level(const IdealSpec& spec, const Level& previous, int n,
                      const Budget& budget = {});

/// Deadline-aware variant used by count_sequence.
Level enumerate_level(const IdealSpec& spec, const Level& previous, int n, const Budget& budget,
                      std::optional<std::chrono::steady_clock::time_point> deadline);

struct SequenceRecord {
  std::string fingerprint;
  std::vector<BigInt> counts;  // counts[n] = |X_n|
  bool complete = true;
  std::string stop_reason;
  std::optional<std::vector<Level>> levels;

  int max_n() const { return static_cast<int>(counts.size()) - 1; }
};

/// Counts for n = 0..N. Predicate specs are audited for downward closure at
/// every level (throws ClosureAuditFailure).
SequenceRecord count_sequence(const IdealSpec& spec, int N, const Budget& budget = {},
                              bool keep_levels = false);

struct ClosureViolation {
  Coloring member;
  /// Vertex whose deletion left the ideal, or 0 for an edge lowering.
  int deleted_vertex = 0;
  std::pair<int, int> lowered_edge{0, 0};
  Color lowered_to = 0;
  Coloring missing;

  std::string describe() const;
};

class ClosureAuditFailure : public AuditFailure {
 public:
  explicit ClosureAuditFailure(ClosureViolation v);
  const ClosureViolation& violation() const { return violation_; }

 private:
  ClosureViolation violation_;
};

/// First member of `level` with a one-vertex-deleted restriction missing
/// from `previous`, or (unless the poset is discrete) a single-edge lowering
/// missing from `level`. Both lists must be sorted.
std::optional<ClosureViolation> find_closure_violation(const ColorPoset& poset, const Level& level,
                                                       const Level& previous);

struct ClosureReport {
  bool under_poset = true;
  bool under_discrete = true;
  std::optional<ClosureViolation> counterexample;
  bool ok() const { return under_poset && under_discrete; }
};

/// Checks `level` against `previous` under P and under discretize(P).
ClosureReport check_downward_closure(const ColorPoset& poset, const Level& level,
                                     const Level& previous);

struct RecolorReport {
  std::vector<BigInt> counts;                 // |X_n|
  std::vector<std::vector<BigInt>> per_color;  // per_color[b-1][n] = |Y^(b)_n|
  bool lower_holds = true;
  bool upper_holds = true;
  bool images_are_ideals = true;
  std::vector<std::string> failures;
  bool ok() const { return lower_holds && upper_holds && images_are_ideals; }
};

/// Enumerates X to N, forms Y^(b) = R_b(X) for each color b and checks
/// |Y^(c)_n| <= |X_n| <= prod_b |Y^(b)_n| for every n and c.
RecolorReport recolored_counts(const IdealSpec& spec, int N, const Budget& budget = {});

/// Brute force over all l^C(n,2) colorings of size n; the test oracle.
Level brute_force_level(const IdealSpec& spec, int n);

}  // namespace colorideals
