#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "coxcube/matrix.hpp"

namespace coxcube {

enum class GroupKind { Finite, Affine, Neither };

/// Named irreducible diagram template (label matrix on nodes 0..rank-1).
struct IrreducibleTemplate {
  std::string name;
  CoxMatrix matrix;
};

/// Catalog of the Coxeter matrices of finite and irreducible affine Coxeter
/// groups of rank <= 6, with label 7 standing for the dihedral family
/// I2(m), m >= 7. Built once; all queries are read-only.
class SimplexGroupCatalog {
 public:
  static const SimplexGroupCatalog& instance();

  /// Finite / Affine / Neither for a fully determined matrix of rank <= 6.
  /// Finite accepts any direct sum of finite irreducibles; Affine accepts
  /// exactly the single irreducible Euclidean simplex diagrams.
  GroupKind classify(const CoxMatrix& m) const;

  /// Same verdict via connected-component decomposition and permutation
  /// matching against the irreducible templates (no table lookup).
  GroupKind classify_by_decomposition(const CoxMatrix& m) const;

  /// All fully determined rank-n matrices of finite or affine type refining
  /// the partial matrix mv, in canonical (row-wise) order. Empty when no
  /// completion exists.
  std::vector<CoxMatrix> completions(const CoxMatrix& mv) const;

  /// Lift-mode query: candidate last rows r such that the matrix formed by
  /// `block` (fully determined, rank-1 x rank-1) extended with row r is
  /// finite or affine. `row_mask` entries that are determined must match.
  void candidate_rows(const CoxMatrix& block, int rank,
                      std::span<const Label> row_constraints,
                      std::vector<std::array<Label, 5>>& out) const;

  const std::vector<IrreducibleTemplate>& finite_irreducibles() const {
    return finite_templates_;
  }
  const std::vector<IrreducibleTemplate>& affine_irreducibles() const {
    return affine_templates_;
  }

  /// All labeled finite (resp. affine) matrices of the given rank.
  const std::vector<CoxMatrix>& finite_table(int rank) const { return finite_[rank]; }
  const std::vector<CoxMatrix>& affine_table(int rank) const { return affine_[rank]; }

 private:
  SimplexGroupCatalog();

  std::vector<IrreducibleTemplate> finite_templates_;
  std::vector<IrreducibleTemplate> affine_templates_;

  // index 1..6 by rank; [0] unused
  std::vector<std::vector<CoxMatrix>> finite_{7};
  std::vector<std::vector<CoxMatrix>> affine_{7};
  std::vector<std::unordered_set<CoxMatrix, CoxMatrixHash>> finite_set_{7};
  std::vector<std::unordered_set<CoxMatrix, CoxMatrixHash>> affine_set_{7};

  struct RowBucket {
    std::vector<std::array<Label, 5>> rows;
  };
  // per rank: leading-(rank-1)-block bytes -> candidate last rows
  std::vector<std::unordered_map<std::string, RowBucket>> rows_by_block_{7};
};

}  // namespace coxcube
