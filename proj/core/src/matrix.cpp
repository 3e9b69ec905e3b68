#include "coxcube/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace coxcube {

CoxMatrix make_cube_matrix(int n) {
  if (n < 1 || 2 * n > CoxMatrix::kMaxSize) throw std::invalid_argument("cube dimension");
  CoxMatrix m(2 * n);
  for (int i = 0; i < n; ++i) m.set(2 * i, 2 * i + 1, kInfinity);
  return m;
}

bool cube_invariants_hold(const CoxMatrix& m, int n) {
  if (m.size != 2 * n) return false;
  for (int i = 0; i < m.size; ++i) {
    if (m.at(i, i) != kDiagonal) return false;
    for (int j = 0; j < i; ++j) {
      Label v = m.at(i, j);
      if (v != m.at(j, i)) return false;
      if (!label_valid(v) || v == kDiagonal) return false;
      if (j == opposite(i) && v != kInfinity) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> rowwise_positions(int size) {
  std::vector<std::pair<int, int>> p;
  p.reserve(static_cast<size_t>(size) * (size - 1) / 2);
  for (int i = 1; i < size; ++i)
    for (int j = 0; j < i; ++j) p.emplace_back(i, j);
  return p;
}

std::vector<std::pair<int, int>> lift_positions(int size) {
  std::vector<std::pair<int, int>> p;
  p.reserve(static_cast<size_t>(size) * (size - 1) / 2);
  for (int i = 1; i < size - 2; ++i)
    for (int j = 0; j < i; ++j) p.emplace_back(i, j);
  for (int i = std::max(1, size - 2); i < size; ++i)
    for (int j = 0; j < i; ++j) p.emplace_back(i, j);
  return p;
}

std::strong_ordering compare_total(const CoxMatrix& a, const CoxMatrix& b,
                                   std::span<const std::pair<int, int>> positions) {
  if (a.size != b.size) throw std::invalid_argument("compare_total: size mismatch");
  for (auto [i, j] : positions) {
    Label x = a.at(i, j), y = b.at(i, j);
    if (!label_determined(x) || !label_determined(y))
      throw std::invalid_argument("compare_total: undetermined entry");
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

bool precedes_partial(const CoxMatrix& a, const CoxMatrix& b,
                      std::span<const std::pair<int, int>> positions) {
  if (a.size != b.size) return false;
  for (auto [i, j] : positions) {
    Label x = a.at(i, j), y = b.at(i, j);
    if (x == y) {
      if (!label_determined(x)) return false;  // coincide but not determined
      continue;
    }
    return label_determined(x) && label_determined(y) && x < y;
  }
  return false;
}

bool refines(const CoxMatrix& refined, const CoxMatrix& base) {
  if (refined.size != base.size) return false;
  for (int i = 0; i < base.size; ++i)
    for (int j = 0; j < i; ++j) {
      Label v = base.at(i, j);
      if (label_determined(v) && refined.at(i, j) != v) return false;
    }
  return true;
}

CoxMatrix submatrix(const CoxMatrix& m, std::span<const int> s) {
  std::array<bool, CoxMatrix::kMaxSize> seen{};
  for (int idx : s) {
    if (idx < 0 || idx >= m.size) throw std::invalid_argument("submatrix: index out of range");
    if (seen[idx]) throw std::invalid_argument("submatrix: duplicate index");
    seen[idx] = true;
  }
  CoxMatrix r(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j)
      r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(s[i], s[j]);
  return r;
}

bool preserves_pairs(const Permutation& sigma) {
  int sz = static_cast<int>(sigma.size());
  if (sz % 2 != 0) return false;
  std::vector<bool> hit(sz, false);
  for (int i = 0; i < sz; ++i) {
    if (sigma[i] >= sz || hit[sigma[i]]) return false;
    hit[sigma[i]] = true;
  }
  for (int i = 0; i < sz; i += 2)
    if (pair_of(sigma[i]) != pair_of(sigma[i + 1])) return false;
  return true;
}

CoxMatrix apply_permutation(const CoxMatrix& m, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != m.size)
    throw std::invalid_argument("apply_permutation: size mismatch");
  if (!preserves_pairs(sigma))
    throw std::invalid_argument("apply_permutation: permutation breaks opposite pairs");
  CoxMatrix r(m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j)
      r.at(i, j) = m.at(sigma[i], sigma[j]);
  return r;
}

std::vector<Permutation> cube_symmetries(int n) {
  std::vector<int> pairs(n);
  std::iota(pairs.begin(), pairs.end(), 0);
  std::vector<Permutation> out;
  out.reserve((1u << n) * 24);  // grows as needed beyond n = 4
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      Permutation sigma(2 * n);
      for (int a = 0; a < n; ++a) {
        int b = (flips >> a) & 1;
        sigma[2 * a] = static_cast<std::uint8_t>(2 * pairs[a] + b);
        sigma[2 * a + 1] = static_cast<std::uint8_t>(2 * pairs[a] + (b ^ 1));
      }
      out.push_back(std::move(sigma));
    }
  } while (std::next_permutation(pairs.begin(), pairs.end()));
  return out;
}

bool is_canonical(const CoxMatrix& m,
                  const std::vector<Permutation>& sigmas,
                  std::span<const std::pair<int, int>> positions) {
  for (const auto& sigma : sigmas) {
    // inline compare with early exit; image entries read on the fly
    for (auto [i, j] : positions) {
      Label x = m.at(i, j);
      Label y = m.at(sigma[i], sigma[j]);
      if (x != y) {
        if (x > y) return false;
        break;
      }
    }
  }
  return true;
}

CoxMatrix canonical_form(const CoxMatrix& m,
                         const std::vector<Permutation>& sigmas,
                         std::span<const std::pair<int, int>> positions) {
  const Permutation* best = nullptr;
  for (const auto& sigma : sigmas) {
    const auto* ref = best;
    for (auto [i, j] : positions) {
      Label x = ref ? m.at((*ref)[i], (*ref)[j]) : m.at(i, j);
      Label y = m.at(sigma[i], sigma[j]);
      if (x != y) {
        if (y < x) best = &sigma;
        break;
      }
    }
  }
  return best ? apply_permutation(m, *best) : m;
}

std::vector<VertexTuple> vertex_tuples(int n) {
  std::vector<VertexTuple> out;
  out.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexTuple v(n);
    for (int i = 0; i < n; ++i) v[i] = 2 * i + ((mask >> i) & 1);
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t face_count(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("face_count: k out of range");
  std::uint64_t binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  return binom << (n - k);
}

}  // namespace coxcube
