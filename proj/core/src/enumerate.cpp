#include "coxcube/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace coxcube {

namespace {

// Visit order over vertex tuples: greedily maximize the number of cross
// slots already determined by earlier tuples, so dead branches are cut
// early. Ties break towards the lexicographically smaller tuple.
std::vector<VertexTuple> overlap_first_order(int n) {
  auto all = vertex_tuples(n);
  std::vector<VertexTuple> order;
  std::set<std::pair<int, int>> seen_slots;
  std::vector<bool> used(all.size(), false);

  auto slots_of = [&](const VertexTuple& v) {
    std::vector<std::pair<int, int>> s;
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = 0; j < i; ++j) s.emplace_back(std::max(v[i], v[j]), std::min(v[i], v[j]));
    return s;
  };

  for (size_t step = 0; step < all.size(); ++step) {
    int best = -1, best_score = -1;
    for (size_t c = 0; c < all.size(); ++c) {
      if (used[c]) continue;
      int score = 0;
      for (auto& s : slots_of(all[c]))
        if (seen_slots.count(s)) ++score;
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(c);
      }
    }
    used[best] = true;
    order.push_back(all[best]);
    for (auto& s : slots_of(all[best])) seen_slots.insert(s);
  }
  return order;
}

// precedes_partial(M^sigma, M) without materializing the image.
bool image_precedes(const CoxMatrix& m, const Permutation& sigma,
                    std::span<const std::pair<int, int>> positions) {
  for (auto [i, j] : positions) {
    Label x = m.at(sigma[i], sigma[j]);
    Label y = m.at(i, j);
    if (x == y) {
      if (!label_determined(x)) return false;
      continue;
    }
    return label_determined(x) && label_determined(y) && x < y;
  }
  return false;
}

struct BaseSearch {
  int n;
  CoxMatrix m;
  std::vector<VertexTuple> order;
  std::vector<Permutation> sigmas;
  std::vector<std::pair<int, int>> positions;
  const SimplexGroupCatalog& catalog = SimplexGroupCatalog::instance();
  std::vector<CoxMatrix> found;

  explicit BaseSearch(int dim)
      : n(dim),
        m(make_cube_matrix(dim)),
        order(overlap_first_order(dim)),
        sigmas(cube_symmetries(dim)),
        positions(rowwise_positions(2 * dim)) {}

  void run() { descend(0); }

  void descend(size_t level) {
    if (level == order.size()) {
      if (is_canonical(m, sigmas, positions)) found.push_back(m);
      return;
    }
    const VertexTuple& v = order[level];
    CoxMatrix sub = submatrix(m, v);
    for (const CoxMatrix& comp : catalog.completions(sub)) {
      std::vector<std::pair<int, int>> filled;
      for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          if (!label_determined(m.at(v[i], v[j]))) {
            m.set(v[i], v[j], comp.at(static_cast<int>(i), static_cast<int>(j)));
            filled.emplace_back(v[i], v[j]);
          }
        }
      bool viable = euclidean_2cube_free(m, n);
      if (viable) {
        for (const auto& sigma : sigmas)
          if (image_precedes(m, sigma, positions)) {
            viable = false;
            break;
          }
      }
      if (viable) descend(level + 1);
      for (auto [i, j] : filled) m.set(i, j, kUndetermined);
    }
  }
};

PotentialMatrixRecord make_record(int n, const CoxMatrix& m) {
  PotentialMatrixRecord r;
  r.n = n;
  r.matrix = m;
  r.compact_type = classify_compact_type(m, n);
  r.seven_pairs = seven_pairs_of(m);
  return r;
}

// Candidate rows for the new facet of a lifted matrix: backtracking over
// the 2^(n-1) vertex tuples that contain it.
std::vector<std::vector<Label>> enumerate_new_rows(const CoxMatrix& seed, int n) {
  const auto& catalog = SimplexGroupCatalog::instance();
  int f = 2 * n - 2;  // new facet; its opposite is 2n-1
  std::vector<Label> row(static_cast<size_t>(f), kUndetermined);
  std::vector<std::vector<Label>> rows;
  auto tuples = vertex_tuples(n - 1);

  std::vector<std::array<Label, 5>> cands;
  auto rec = [&](auto&& self, size_t level) -> void {
    if (level == tuples.size()) {
      rows.push_back(row);
      return;
    }
    const VertexTuple& base = tuples[level];
    CoxMatrix block = submatrix(seed, base);
    std::array<Label, 5> constraints{};
    for (int i = 0; i < n - 1; ++i) constraints[i] = row[base[i]];
    std::vector<std::array<Label, 5>> local;
    catalog.candidate_rows(block, n, std::span<const Label>(constraints.data(), n - 1), local);
    for (const auto& cand : local) {
      std::vector<int> filled;
      for (int i = 0; i < n - 1; ++i)
        if (!label_determined(row[base[i]])) {
          row[base[i]] = cand[i];
          filled.push_back(base[i]);
        }
      self(self, level + 1);
      for (int idx : filled) row[idx] = kUndetermined;
    }
  };
  rec(rec, 0);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  (void)cands;
  return rows;
}

std::vector<CoxMatrix> lift_one_seed(const PotentialMatrixRecord& seed, int n,
                                     const std::vector<Permutation>& sigmas,
                                     std::span<const std::pair<int, int>> positions) {
  std::vector<CoxMatrix> out;
  auto rows = enumerate_new_rows(seed.matrix, n);
  if (rows.empty()) return out;

  int f = 2 * n - 2, g = 2 * n - 1;
  CoxMatrix m = make_cube_matrix(n);
  for (int i = 0; i < seed.matrix.size; ++i)
    for (int j = 0; j < i; ++j) m.set(i, j, seed.matrix.at(i, j));

  for (size_t a = 0; a < rows.size(); ++a) {
    for (int j = 0; j < f; ++j) m.set(f, j, rows[a][j]);
    for (size_t b = a; b < rows.size(); ++b) {
      for (int j = 0; j < f; ++j) m.set(g, j, rows[b][j]);
      bool ok = true;
      for (int k = 0; k < n - 1 && ok; ++k)
        ok = !(m.at(f, 2 * k) == 2 && m.at(f, 2 * k + 1) == 2 && m.at(g, 2 * k) == 2 &&
               m.at(g, 2 * k + 1) == 2);
      if (ok && is_canonical(m, sigmas, positions)) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

bool euclidean_2cube_free(const CoxMatrix& m, int n) {
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < k; ++l) {
      Label a = m.at(2 * k, 2 * l), b = m.at(2 * k, 2 * l + 1);
      Label c = m.at(2 * k + 1, 2 * l), d = m.at(2 * k + 1, 2 * l + 1);
      if (a == 2 && b == 2 && c == 2 && d == 2) return false;
    }
  return true;
}

bool classify_compact_type(const CoxMatrix& m, int n) {
  const auto& catalog = SimplexGroupCatalog::instance();
  bool compact = true;
  for (const auto& v : vertex_tuples(n)) {
    GroupKind kind = catalog.classify(submatrix(m, v));
    if (kind == GroupKind::Neither)
      throw std::invalid_argument("classify_compact_type: vertex group neither finite nor affine");
    if (kind == GroupKind::Affine) compact = false;
  }
  return compact;
}

int free_parameter_count(const CoxMatrix& m) {
  return static_cast<int>(seven_pairs_of(m).size());
}

std::vector<std::pair<int, int>> seven_pairs_of(const CoxMatrix& m) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) == 7) pairs.emplace_back(j, i);
  return pairs;
}

std::vector<PotentialMatrixRecord> enumerate_base(int n, SevenDedupMode dedup) {
  if (n != 2 && n != 3) throw std::invalid_argument("enumerate_base: n must be 2 or 3");
  BaseSearch search(n);
  search.run();
  std::vector<PotentialMatrixRecord> records;
  records.reserve(search.found.size());
  for (const CoxMatrix& m : search.found) records.push_back(make_record(n, m));
  std::sort(records.begin(), records.end(), record_less);
  return dedup_seven(records, dedup);
}

std::vector<PotentialMatrixRecord> lift_dimension(
    const std::vector<PotentialMatrixRecord>& seeds, int target_n, SevenDedupMode dedup,
    int jobs) {
  if (target_n < 3 || target_n > 7)
    throw std::invalid_argument("lift_dimension: target dimension out of range");
  for (const auto& s : seeds) {
    if (!s.compact_type)
      throw std::invalid_argument("lift_dimension: seeds must be of compact type");
    if (s.n != target_n - 1) throw std::invalid_argument("lift_dimension: seed dimension");
  }
  if (seeds.empty()) return {};  // in particular target_n = 7 from zero compact 6-seeds

  auto sigmas = cube_symmetries(target_n);
  auto positions = lift_positions(2 * target_n);

  std::vector<std::vector<CoxMatrix>> per_seed(seeds.size());
  if (jobs < 1) jobs = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1))
      per_seed[i] = lift_one_seed(seeds[i], target_n, sigmas, positions);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<PotentialMatrixRecord> records;
  for (auto& chunk : per_seed)
    for (CoxMatrix& m : chunk) records.push_back(make_record(target_n, m));
  std::sort(records.begin(), records.end(), record_less);
  records.erase(std::unique(records.begin(), records.end(),
                            [](const auto& a, const auto& b) { return a.matrix == b.matrix; }),
                records.end());
  return dedup_seven(records, dedup);
}

std::vector<PotentialMatrixRecord> dedup_seven(
    const std::vector<PotentialMatrixRecord>& records, SevenDedupMode mode) {
  if (mode == SevenDedupMode::None) return records;
  if (records.empty()) return records;

  int n = records.front().n;
  auto sigmas = cube_symmetries(n);
  auto positions = rowwise_positions(2 * n);
  std::unordered_set<CoxMatrix, CoxMatrixHash> removal;

  for (const auto& rec : records) {
    const auto& pairs = rec.seven_pairs;
    if (pairs.empty()) continue;
    // every nonempty substitution pattern over the seven-pairs
    std::vector<int> values(pairs.size(), 0);  // 0 = keep 7, 2..6 = substitute
    auto rec_fill = [&](auto&& self, size_t idx) -> void {
      if (idx == pairs.size()) {
        bool any = false;
        for (int v : values) any |= (v != 0);
        if (!any) return;
        CoxMatrix cand = rec.matrix;
        for (size_t k = 0; k < pairs.size(); ++k)
          if (values[k] != 0)
            cand.set(pairs[k].first, pairs[k].second, static_cast<Label>(values[k]));
        removal.insert(canonical_form(cand, sigmas, positions));
        return;
      }
      for (int v : {0, 2, 3, 4, 5, 6}) {
        values[idx] = v;
        self(self, idx + 1);
      }
      values[idx] = 0;
    };
    rec_fill(rec_fill, 0);
  }

  std::vector<PotentialMatrixRecord> out;
  out.reserve(records.size());
  for (const auto& rec : records)
    if (!removal.count(rec.matrix)) out.push_back(rec);
  return out;
}

Distribution distribution_report(const std::vector<PotentialMatrixRecord>& records) {
  Distribution d;
  for (const auto& r : records) ++d.counts[{r.compact_type, r.params()}];
  return d;
}

bool record_less(const PotentialMatrixRecord& a, const PotentialMatrixRecord& b) {
  auto pos = rowwise_positions(a.matrix.size);
  return compare_total(a.matrix, b.matrix, pos) < 0;
}

}  // namespace coxcube
