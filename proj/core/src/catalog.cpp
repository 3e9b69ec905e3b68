#include "coxcube/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace coxcube {

namespace {

CoxMatrix path_matrix(std::initializer_list<int> edge_labels) {
  int rank = static_cast<int>(edge_labels.size()) + 1;
  CoxMatrix m(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < i; ++j) m.set(i, j, 2);
  int i = 0;
  for (int lab : edge_labels) {
    m.set(i, i + 1, static_cast<Label>(lab));
    ++i;
  }
  return m;
}

CoxMatrix all_twos(int rank) {
  CoxMatrix m(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < i; ++j) m.set(i, j, 2);
  return m;
}

// Fingerprint used to prune template matching: per node the sorted multiset
// of incident labels, the whole list sorted.
std::vector<std::vector<Label>> fingerprint(const CoxMatrix& m) {
  std::vector<std::vector<Label>> f(m.size);
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j)
      if (j != i && m.at(i, j) != 2) f[i].push_back(m.at(i, j));
    std::sort(f[i].begin(), f[i].end());
  }
  std::sort(f.begin(), f.end());
  return f;
}

bool isomorphic_backtrack(const CoxMatrix& a, const CoxMatrix& b,
                          std::vector<int>& map, std::vector<bool>& used, int next) {
  if (next == a.size) return true;
  for (int cand = 0; cand < b.size; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next; ++prev)
      if (a.at(next, prev) != b.at(cand, map[prev])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (isomorphic_backtrack(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

bool isomorphic(const CoxMatrix& a, const CoxMatrix& b) {
  if (a.size != b.size) return false;
  if (fingerprint(a) != fingerprint(b)) return false;
  std::vector<int> map(a.size, -1);
  std::vector<bool> used(a.size, false);
  return isomorphic_backtrack(a, b, map, used, 0);
}

void permutation_closure(const CoxMatrix& tmpl, std::vector<CoxMatrix>& out) {
  std::vector<int> perm(tmpl.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::unordered_set<CoxMatrix, CoxMatrixHash> seen;
  do {
    CoxMatrix img(tmpl.size);
    for (int i = 0; i < tmpl.size; ++i)
      for (int j = 0; j < tmpl.size; ++j) img.at(i, j) = tmpl.at(perm[i], perm[j]);
    if (seen.insert(img).second) out.push_back(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void set_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<std::vector<int>> current;
  auto rec = [&](auto&& self, int elem) -> void {
    if (elem == n) {
      out.push_back(current);
      return;
    }
    size_t nblocks = current.size();
    for (size_t b = 0; b < nblocks; ++b) {
      current[b].push_back(elem);
      self(self, elem + 1);
      current[b].pop_back();
    }
    current.push_back({elem});
    self(self, elem + 1);
    current.pop_back();
  };
  rec(rec, 0);
}

std::string block_key(const CoxMatrix& m, int rank) {
  std::string key;
  key.reserve(static_cast<size_t>(rank) * (rank - 1) / 2);
  for (int i = 1; i < rank; ++i)
    for (int j = 0; j < i; ++j) key.push_back(static_cast<char>(m.at(i, j)));
  return key;
}

std::vector<std::pair<int, int>> connected_components(const CoxMatrix& m) {
  std::vector<int> comp(m.size, -1);
  int ncomp = 0;
  for (int s = 0; s < m.size; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < m.size; ++w)
        if (w != v && comp[w] == -1 && m.at(v, w) != 2) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::pair<int, int>> res(m.size);
  for (int i = 0; i < m.size; ++i) res[i] = {comp[i], i};
  std::sort(res.begin(), res.end());
  return res;  // (component id, node) sorted by component
}

}  // namespace

const SimplexGroupCatalog& SimplexGroupCatalog::instance() {
  static const SimplexGroupCatalog catalog;
  return catalog;
}

SimplexGroupCatalog::SimplexGroupCatalog() {
  // --- finite irreducibles, rank <= 6 ---
  finite_templates_.push_back({"A1", all_twos(1)});
  for (int m = 3; m <= 7; ++m)
    finite_templates_.push_back({"I2(" + std::to_string(m) + ")", path_matrix({m})});
  finite_templates_.push_back({"A3", path_matrix({3, 3})});
  finite_templates_.push_back({"A4", path_matrix({3, 3, 3})});
  finite_templates_.push_back({"A5", path_matrix({3, 3, 3, 3})});
  finite_templates_.push_back({"A6", path_matrix({3, 3, 3, 3, 3})});
  finite_templates_.push_back({"B3", path_matrix({3, 4})});
  finite_templates_.push_back({"B4", path_matrix({3, 3, 4})});
  finite_templates_.push_back({"B5", path_matrix({3, 3, 3, 4})});
  finite_templates_.push_back({"B6", path_matrix({3, 3, 3, 3, 4})});
  {
    CoxMatrix d4 = all_twos(4);  // star: 1 is the branch node
    d4.set(0, 1, 3);
    d4.set(1, 2, 3);
    d4.set(1, 3, 3);
    finite_templates_.push_back({"D4", d4});
    CoxMatrix d5 = all_twos(5);
    d5.set(0, 1, 3);
    d5.set(1, 2, 3);
    d5.set(2, 3, 3);
    d5.set(2, 4, 3);
    finite_templates_.push_back({"D5", d5});
    CoxMatrix d6 = all_twos(6);
    d6.set(0, 1, 3);
    d6.set(1, 2, 3);
    d6.set(2, 3, 3);
    d6.set(3, 4, 3);
    d6.set(3, 5, 3);
    finite_templates_.push_back({"D6", d6});
    CoxMatrix e6 = all_twos(6);
    e6.set(0, 1, 3);
    e6.set(1, 2, 3);
    e6.set(2, 3, 3);
    e6.set(3, 4, 3);
    e6.set(2, 5, 3);
    finite_templates_.push_back({"E6", e6});
  }
  finite_templates_.push_back({"F4", path_matrix({3, 4, 3})});
  finite_templates_.push_back({"H3", path_matrix({5, 3})});
  finite_templates_.push_back({"H4", path_matrix({5, 3, 3})});

  // --- irreducible affine diagrams with r nodes, r <= 6 ---
  affine_templates_.push_back({"A~1", path_matrix({kInfinity})});
  for (int r = 3; r <= 6; ++r) {
    CoxMatrix cyc = all_twos(r);
    for (int i = 0; i < r; ++i) cyc.set(i, (i + 1) % r, 3);
    affine_templates_.push_back({"A~" + std::to_string(r - 1), cyc});
  }
  affine_templates_.push_back({"C~2", path_matrix({4, 4})});
  affine_templates_.push_back({"C~3", path_matrix({4, 3, 4})});
  affine_templates_.push_back({"C~4", path_matrix({4, 3, 3, 4})});
  affine_templates_.push_back({"C~5", path_matrix({4, 3, 3, 3, 4})});
  {
    CoxMatrix b3 = all_twos(4);  // fork 0,1 -> 2, then a 4-edge
    b3.set(0, 2, 3);
    b3.set(1, 2, 3);
    b3.set(2, 3, 4);
    affine_templates_.push_back({"B~3", b3});
    CoxMatrix b4 = all_twos(5);
    b4.set(0, 2, 3);
    b4.set(1, 2, 3);
    b4.set(2, 3, 3);
    b4.set(3, 4, 4);
    affine_templates_.push_back({"B~4", b4});
    CoxMatrix b5 = all_twos(6);
    b5.set(0, 2, 3);
    b5.set(1, 2, 3);
    b5.set(2, 3, 3);
    b5.set(3, 4, 3);
    b5.set(4, 5, 4);
    affine_templates_.push_back({"B~5", b5});
    CoxMatrix d4 = all_twos(5);  // central node 0
    for (int leaf = 1; leaf <= 4; ++leaf) d4.set(0, leaf, 3);
    affine_templates_.push_back({"D~4", d4});
    CoxMatrix d5 = all_twos(6);  // forks at both ends of a 2-edge path
    d5.set(0, 2, 3);
    d5.set(1, 2, 3);
    d5.set(2, 3, 3);
    d5.set(3, 4, 3);
    d5.set(3, 5, 3);
    affine_templates_.push_back({"D~5", d5});
  }
  affine_templates_.push_back({"G~2", path_matrix({6, 3})});
  affine_templates_.push_back({"F~4", path_matrix({3, 4, 3, 3})});

  // --- labeled irreducibles per rank ---
  std::vector<std::vector<CoxMatrix>> finite_irr_labeled(7);
  for (const auto& t : finite_templates_)
    permutation_closure(t.matrix, finite_irr_labeled[t.matrix.size]);
  for (const auto& t : affine_templates_) permutation_closure(t.matrix, affine_[t.matrix.size]);

  // --- all labeled finite matrices of each rank, as direct sums over
  //     set partitions ---
  for (int rank = 1; rank <= 6; ++rank) {
    std::vector<std::vector<std::vector<int>>> partitions;
    set_partitions(rank, partitions);
    for (const auto& part : partitions) {
      std::vector<size_t> choice(part.size(), 0);
      // odometer over per-block labeled irreducibles
      while (true) {
        CoxMatrix m = all_twos(rank);
        bool valid = true;
        for (size_t b = 0; b < part.size() && valid; ++b) {
          const auto& nodes = part[b];
          const auto& opts = finite_irr_labeled[nodes.size()];
          if (opts.empty()) {
            valid = false;
            break;
          }
          const CoxMatrix& blockm = opts[choice[b]];
          for (size_t i = 0; i < nodes.size(); ++i)
            for (size_t j = 0; j < i; ++j)
              m.set(nodes[i], nodes[j],
                    blockm.at(static_cast<int>(i), static_cast<int>(j)));
        }
        if (valid) finite_[rank].push_back(m);
        // advance odometer
        size_t b = 0;
        for (; b < part.size(); ++b) {
          const auto& opts = finite_irr_labeled[part[b].size()];
          if (opts.empty()) break;
          if (++choice[b] < opts.size()) break;
          choice[b] = 0;
        }
        if (b == part.size() || finite_irr_labeled[part[b].size()].empty()) break;
      }
    }
  }

  auto positions_cache = rowwise_positions(6);
  auto sorter = [&](std::vector<CoxMatrix>& v) {
    std::sort(v.begin(), v.end(), [&](const CoxMatrix& a, const CoxMatrix& b) {
      auto pos = rowwise_positions(a.size);
      return compare_total(a, b, pos) < 0;
    });
  };
  for (int rank = 1; rank <= 6; ++rank) {
    sorter(finite_[rank]);
    sorter(affine_[rank]);
    finite_set_[rank].insert(finite_[rank].begin(), finite_[rank].end());
    affine_set_[rank].insert(affine_[rank].begin(), affine_[rank].end());
  }
  (void)positions_cache;

  // --- lift index: leading block -> candidate last rows ---
  for (int rank = 2; rank <= 6; ++rank) {
    auto add_rows = [&](const std::vector<CoxMatrix>& table) {
      for (const CoxMatrix& m : table) {
        std::string key = block_key(m, rank - 1);
        std::array<Label, 5> row{};
        for (int j = 0; j < rank - 1; ++j) row[j] = m.at(rank - 1, j);
        rows_by_block_[rank][key].rows.push_back(row);
      }
    };
    add_rows(finite_[rank]);
    add_rows(affine_[rank]);
    for (auto& [key, bucket] : rows_by_block_[rank])
      std::sort(bucket.rows.begin(), bucket.rows.end());
  }
}

GroupKind SimplexGroupCatalog::classify(const CoxMatrix& m) const {
  if (m.size < 1 || m.size > 6) throw std::invalid_argument("classify: unsupported rank");
  if (!m.fully_determined()) throw std::invalid_argument("classify: undetermined entries");
  if (finite_set_[m.size].count(m)) return GroupKind::Finite;
  if (affine_set_[m.size].count(m)) return GroupKind::Affine;
  return GroupKind::Neither;
}

GroupKind SimplexGroupCatalog::classify_by_decomposition(const CoxMatrix& m) const {
  if (m.size < 1 || m.size > 6) throw std::invalid_argument("classify: unsupported rank");
  if (!m.fully_determined()) throw std::invalid_argument("classify: undetermined entries");

  auto comps = connected_components(m);
  bool all_finite = true;
  int ncomps = 0;
  for (size_t lo = 0; lo < comps.size(); ++ncomps) {
    size_t hi = lo;
    while (hi < comps.size() && comps[hi].first == comps[lo].first) ++hi;
    std::vector<int> nodes;
    for (size_t k = lo; k < hi; ++k) nodes.push_back(comps[k].second);
    CoxMatrix sub = submatrix(m, nodes);
    bool finite = false;
    for (const auto& t : finite_templates_)
      if (t.matrix.size == sub.size && isomorphic(sub, t.matrix)) {
        finite = true;
        break;
      }
    if (!finite) all_finite = false;
    lo = hi;
  }
  if (all_finite) return GroupKind::Finite;
  if (ncomps == 1) {
    for (const auto& t : affine_templates_)
      if (t.matrix.size == m.size && isomorphic(m, t.matrix)) return GroupKind::Affine;
  }
  return GroupKind::Neither;
}

std::vector<CoxMatrix> SimplexGroupCatalog::completions(const CoxMatrix& mv) const {
  if (mv.size < 1 || mv.size > 6) throw std::invalid_argument("completions: unsupported rank");
  std::vector<CoxMatrix> out;
  for (const CoxMatrix& cand : finite_[mv.size])
    if (refines(cand, mv)) out.push_back(cand);
  for (const CoxMatrix& cand : affine_[mv.size])
    if (refines(cand, mv)) out.push_back(cand);
  auto pos = rowwise_positions(mv.size);
  std::sort(out.begin(), out.end(), [&](const CoxMatrix& a, const CoxMatrix& b) {
    return compare_total(a, b, pos) < 0;
  });
  return out;
}

void SimplexGroupCatalog::candidate_rows(const CoxMatrix& block, int rank,
                                         std::span<const Label> row_constraints,
                                         std::vector<std::array<Label, 5>>& out) const {
  out.clear();
  auto it = rows_by_block_[rank].find(block_key(block, rank - 1));
  if (it == rows_by_block_[rank].end()) return;
  for (const auto& row : it->second.rows) {
    bool ok = true;
    for (int j = 0; j < rank - 1; ++j)
      if (label_determined(row_constraints[j]) && row_constraints[j] != row[j]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(row);
  }
}

}  // namespace coxcube
