#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxcube {

// Edge labels of a Coxeter matrix, encoded so that the enumeration order
// (infinity before any integer) is the natural numeric order:
//   0   = infinity
//   1   = diagonal entry
//   2..7 = finite label k (angle pi/k); 7 stands for the family m >= 7
//   255 = undetermined slot
using Label = std::uint8_t;

inline constexpr Label kInfinity = 0;
inline constexpr Label kDiagonal = 1;
inline constexpr Label kMaxFinite = 7;
inline constexpr Label kUndetermined = 255;

inline constexpr bool label_determined(Label v) { return v != kUndetermined; }

inline constexpr bool label_valid(Label v) {
  return v == kInfinity || (v >= 1 && v <= kMaxFinite) || v == kUndetermined;
}

/// Symmetric label matrix with inline storage. Sizes never exceed 12
/// (cube matrices are (2n)x(2n), n <= 6; vertex groups have rank <= 6).
struct CoxMatrix {
  static constexpr int kMaxSize = 12;

  std::uint8_t size = 0;
  std::array<Label, kMaxSize * kMaxSize> e{};

  CoxMatrix() = default;
  explicit CoxMatrix(int sz) : size(static_cast<std::uint8_t>(sz)) {
    if (sz < 0 || sz > kMaxSize) throw std::invalid_argument("CoxMatrix size");
    e.fill(kUndetermined);
    for (int i = 0; i < sz; ++i) at(i, i) = kDiagonal;
  }

  Label& at(int i, int j) { return e[static_cast<size_t>(i) * kMaxSize + j]; }
  Label at(int i, int j) const { return e[static_cast<size_t>(i) * kMaxSize + j]; }

  void set(int i, int j, Label v) {
    at(i, j) = v;
    at(j, i) = v;
  }

  bool fully_determined() const {
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < i; ++j)
        if (!label_determined(at(i, j))) return false;
    return true;
  }

  friend bool operator==(const CoxMatrix& a, const CoxMatrix& b) {
    if (a.size != b.size) return false;
    for (int i = 0; i < a.size; ++i)
      for (int j = 0; j < a.size; ++j)
        if (a.at(i, j) != b.at(i, j)) return false;
    return true;
  }
};

struct CoxMatrixHash {
  size_t operator()(const CoxMatrix& m) const {
    size_t h = m.size;
    for (int i = 0; i < m.size; ++i)
      for (int j = 0; j <= i; ++j)
        h = h * 1099511628211ull + m.at(i, j);
    return h;
  }
};

/// Facets of an n-cube are indexed 0..2n-1; facets 2i and 2i+1 are opposite.
inline constexpr int pair_of(int facet) { return facet / 2; }
inline constexpr int opposite(int facet) { return facet ^ 1; }

/// Fresh partial n-cube matrix: diagonal 1, opposite pairs pinned to
/// infinity, all cross slots undetermined.
CoxMatrix make_cube_matrix(int n);

/// Does M satisfy the structural n-cube invariants (diagonal, symmetry,
/// opposite-pair infinities, labels in range)?
bool cube_invariants_hold(const CoxMatrix& m, int n);

// --- entry orderings -------------------------------------------------------

/// Strictly-lower-triangular positions read row-wise:
/// (1,0),(2,0),(2,1),(3,0),...
std::vector<std::pair<int, int>> rowwise_positions(int size);

/// Ordering used for dimension lifting: the initial (size-2)x(size-2)
/// block's positions first, then the last two rows. For row-wise reading
/// this coincides with rowwise_positions; both are kept so callers can name
/// the mode they need.
std::vector<std::pair<int, int>> lift_positions(int size);

/// Lexicographic comparison over the given position sequence; infinity
/// (encoded 0) precedes every integer. Both matrices must be fully
/// determined on the sequence.
std::strong_ordering compare_total(const CoxMatrix& a, const CoxMatrix& b,
                                   std::span<const std::pair<int, int>> positions);

/// Partial-matrix order: true iff the first differing position has both
/// entries determined with a's smaller, and all earlier positions are
/// determined and equal.
bool precedes_partial(const CoxMatrix& a, const CoxMatrix& b,
                      std::span<const std::pair<int, int>> positions);

/// Every determined entry of `base` appears unchanged in `refined`.
bool refines(const CoxMatrix& refined, const CoxMatrix& base);

// --- submatrices and permutations ------------------------------------------

/// M^s: the k x k submatrix picking rows/columns s (distinct indices,
/// order preserved).
CoxMatrix submatrix(const CoxMatrix& m, std::span<const int> s);

using Permutation = std::vector<std::uint8_t>;

/// Does sigma map opposite pairs to opposite pairs?
bool preserves_pairs(const Permutation& sigma);

/// M^sigma with (i,j) entry M[sigma(i)][sigma(j)]. sigma must preserve
/// opposite pairs so the result is again a cube matrix.
CoxMatrix apply_permutation(const CoxMatrix& m, const Permutation& sigma);

/// The symmetry group Sigma of the n-cube acting on facet labels:
/// all 2^n * n! signed permutations of the n opposite pairs.
std::vector<Permutation> cube_symmetries(int n);

/// True iff compare_total(M, M^sigma) <= 0 for every sigma.
bool is_canonical(const CoxMatrix& m,
                  const std::vector<Permutation>& sigmas,
                  std::span<const std::pair<int, int>> positions);

/// Lexicographically least matrix in the Sigma-orbit of M.
CoxMatrix canonical_form(const CoxMatrix& m,
                         const std::vector<Permutation>& sigmas,
                         std::span<const std::pair<int, int>> positions);

// --- cube combinatorics -----------------------------------------------------

/// One facet per opposite pair; the i-th index is 2i or 2i+1.
using VertexTuple = std::vector<int>;

/// All 2^n vertex tuples of the n-cube.
std::vector<VertexTuple> vertex_tuples(int n);

/// f_k of the n-cube: 2^(n-k) * C(n,k).
std::uint64_t face_count(int n, int k);

}  // namespace coxcube
