#include "versal/enumerate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace versal {

std::vector<Hypergraph> enum_antichains(int n) {
  if (n < 1 || n > kMaxExhaustiveAntichainN)
    throw std::invalid_argument(
        "enum_antichains: exhaustive enumeration is limited to n <= " +
        std::to_string(kMaxExhaustiveAntichainN));
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<Hypergraph> out;
  std::vector<VertexSet> current;

  auto compatible = [&](VertexSet s) {
    for (VertexSet t : current)
      if (s.subset_of(t) || t.subset_of(s)) return false;
    return true;
  };

  // DFS over candidate edges in ascending mask order; every prefix is an
  // antichain, so each node of the search tree emits one hypergraph.
  auto rec = [&](auto&& self, std::uint32_t start) -> void {
    for (std::uint32_t eb = start; eb < limit; ++eb) {
      VertexSet e = VertexSet::from_bits(eb);
      if (!compatible(e)) continue;
      current.push_back(e);
      out.push_back(Hypergraph::unchecked(n, current));
      self(self, eb + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

long long UniformSpace::binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long result = 1;
  for (int i = 0; i < b; ++i) result = result * (a - i) / (i + 1);
  return result;
}

UniformSpace::UniformSpace(int n, int r, int m_min, int m_max)
    : n_(n), r_(r), m_min_(m_min), m_max_(m_max) {
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("UniformSpace: bad n");
  if (r < 1 || r > n) throw std::invalid_argument("UniformSpace: bad r");
  const long long cells = binom(n, r);
  if (cells > 24)
    throw std::invalid_argument(
        "UniformSpace: infeasible, binomial(n, r) > 24");
  if (m_min < 1) throw std::invalid_argument("UniformSpace: m_min must be >= 1");
  if (m_max > cells) m_max_ = static_cast<int>(cells);
  if (m_min_ > m_max_)
    throw std::invalid_argument("UniformSpace: empty edge-count range");
  for (std::uint32_t eb = 0; eb < (std::uint32_t{1} << n); ++eb)
    if (std::popcount(eb) == r) cells_.push_back(VertexSet::from_bits(eb));
  for (int m = m_min_; m <= m_max_; ++m) {
    count_by_m_.push_back(binom(static_cast<int>(cells_.size()), m));
    size_ += count_by_m_.back();
  }
}

Hypergraph UniformSpace::instance(long long index) const {
  if (index < 0 || index >= size_)
    throw std::out_of_range("UniformSpace: index out of range");
  int m = m_min_;
  for (long long c : count_by_m_) {
    if (index < c) break;
    index -= c;
    ++m;
  }
  // Unrank the index-th m-combination of the cell list in colex order,
  // which matches ascending-mask enumeration for a fixed edge count.
  std::vector<VertexSet> edges(static_cast<size_t>(m));
  int upper = static_cast<int>(cells_.size());
  for (int i = m; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < upper && binom(c + 1, i) <= index) ++c;
    index -= binom(c, i);
    edges[static_cast<size_t>(i - 1)] = cells_[static_cast<size_t>(c)];
    upper = c;
  }
  return Hypergraph::unchecked(n_, std::move(edges));
}

namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Hypergraph random_antichain(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 1 || n > kMaxUniverse)
    throw std::invalid_argument("random_antichain: bad n");
  auto rng = seeded_rng(seed, index);
  std::uniform_int_distribution<int> count_dist(1, 3 * n);
  std::uniform_int_distribution<std::uint32_t> set_dist(
      1, (std::uint32_t{1} << n) - 1);
  const int draws = count_dist(rng);
  std::vector<std::uint32_t> family;
  for (int i = 0; i < draws; ++i) family.push_back(set_dist(rng));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // keep containment-maximal sets: an antichain with m >= 1
  std::vector<VertexSet> edges;
  for (std::uint32_t a : family) {
    bool maximal = true;
    for (std::uint32_t b : family)
      if (a != b && (a & b) == a) { maximal = false; break; }
    if (maximal) edges.push_back(VertexSet::from_bits(a));
  }
  return Hypergraph::unchecked(n, std::move(edges));
}

Hypergraph random_uniform(int n_max, std::uint64_t seed, std::uint64_t index) {
  if (n_max < 3 || n_max > kMaxUniverse)
    throw std::invalid_argument("random_uniform: bad n_max");
  auto rng = seeded_rng(seed, ~index);
  std::uniform_int_distribution<int> n_dist(3, n_max);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> r_dist(1, n - 1);
  const int r = r_dist(rng);
  const long long cells = UniformSpace::binom(n, r);
  const long long m_cap = std::min<long long>(cells, 2 * n);
  std::uniform_int_distribution<long long> m_dist(std::min<long long>(2, m_cap),
                                                  m_cap);
  const long long m = m_dist(rng);
  std::vector<int> verts(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) verts[static_cast<size_t>(v)] = v;
  std::vector<std::uint32_t> edges;
  while (static_cast<long long>(edges.size()) < m) {
    // partial Fisher-Yates draw of r distinct vertices
    std::uint32_t e = 0;
    for (int i = 0; i < r; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(verts[static_cast<size_t>(i)],
                verts[static_cast<size_t>(pick(rng))]);
      e |= std::uint32_t{1} << verts[static_cast<size_t>(i)];
    }
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
  }
  std::vector<VertexSet> out;
  for (std::uint32_t e : edges) out.push_back(VertexSet::from_bits(e));
  return Hypergraph::unchecked(n, std::move(out));
}

}  // namespace versal
