#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coxcube/catalog.hpp"
#include "coxcube/matrix.hpp"

namespace coxcube {

/// A canonical potential Coxeter n-cube matrix together with its
/// classification data.
struct PotentialMatrixRecord {
  int n = 0;
  CoxMatrix matrix;
  bool compact_type = false;
  std::vector<std::pair<int, int>> seven_pairs;

  int params() const { return static_cast<int>(seven_pairs.size()); }
};

/// True iff no pair of opposite-facet pairs {k,l} has all four cross
/// entries determined and equal to 2 (the all-right-angle rectangle is the
/// one Euclidean Coxeter 2-cube and is excluded by the signature
/// obstruction). Partial matrices with an undetermined cross slot pass.
bool euclidean_2cube_free(const CoxMatrix& m, int n);

/// compact iff all 2^n vertex groups are finite; noncompact iff at least one
/// is affine. Throws if some vertex group is neither (not a potential
/// matrix).
bool classify_compact_type(const CoxMatrix& m, int n);

/// Number of unordered pairs {i,j} with label 7 (free parameters of the
/// family).
int free_parameter_count(const CoxMatrix& m);

std::vector<std::pair<int, int>> seven_pairs_of(const CoxMatrix& m);

enum class SevenDedupMode {
  /// Keep every canonical record; label-7 families and their small-label
  /// specializations are distinct families. This is the mode that
  /// reproduces the published repartition tables.
  None,
  /// Remove any record obtainable from a 7-carrying record by substituting
  /// values 2..6 at a nonempty subset of its seven-pairs (re-canonicalized).
  Combinational,
};

/// Direct backtracking enumeration over all vertex tuples; n = 2 or 3.
/// Output is canonical, sorted, deterministic.
std::vector<PotentialMatrixRecord> enumerate_base(
    int n, SevenDedupMode dedup = SevenDedupMode::None);

/// One-dimension lift: seeds must be the canonical compact-type records of
/// dimension n-1 (throws on a noncompact seed). Returns the canonical
/// records of dimension n, sorted. `jobs` > 1 processes seeds in parallel;
/// the output is schedule-independent.
std::vector<PotentialMatrixRecord> lift_dimension(
    const std::vector<PotentialMatrixRecord>& seeds, int target_n,
    SevenDedupMode dedup = SevenDedupMode::None, int jobs = 1);

/// Apply the seven-pair removal rule to an already-sorted record list.
std::vector<PotentialMatrixRecord> dedup_seven(
    const std::vector<PotentialMatrixRecord>& records, SevenDedupMode mode);

/// Counts keyed by (compact_type, free parameter count).
struct Distribution {
  std::map<std::pair<bool, int>, std::uint64_t> counts;

  std::uint64_t at(bool compact, int params) const {
    auto it = counts.find({compact, params});
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
  }
};

Distribution distribution_report(const std::vector<PotentialMatrixRecord>& records);

/// Sorted canonical order used for record lists of dimension n.
bool record_less(const PotentialMatrixRecord& a, const PotentialMatrixRecord& b);

}  // namespace coxcube
