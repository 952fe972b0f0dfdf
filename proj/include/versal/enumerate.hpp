#ifndef VERSAL_ENUMERATE_HPP
#define VERSAL_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "versal/hypergraph.hpp"

namespace versal {

// Dedekind numbers M(0)..M(5); enum_antichains(n) must produce M(n) - 2
// hypergraphs (all antichains in the subset lattice minus the empty family
// and the {empty set} family).
inline constexpr long long kDedekind[] = {2, 3, 6, 20, 168, 7581};
inline constexpr int kMaxExhaustiveAntichainN = 5;

// Every antichain of distinct nonempty subsets of {0..n-1} with m >= 1,
// each exactly once, in DFS order over ascending edge masks. n <= 5.
std::vector<Hypergraph> enum_antichains(int n);

// The r-uniform families on n vertices with m_min <= m <= m_max edges,
// indexable for deterministic work partitioning: instance(i) unranks the
// i-th family (edge subsets in ascending-mask order within each m, m
// ascending). Uniform families are automatically antichains.
// Exhaustive feasibility requires binomial(n, r) <= 24.
class UniformSpace {
 public:
  UniformSpace(int n, int r, int m_min, int m_max);

  long long size() const { return size_; }
  Hypergraph instance(long long index) const;

  int n() const { return n_; }
  int r() const { return r_; }
  int m_min() const { return m_min_; }
  int m_max() const { return m_max_; }

  static long long binom(int a, int b);

 private:
  int n_, r_, m_min_, m_max_;
  std::vector<VertexSet> cells_;        // all r-subsets, ascending mask order
  std::vector<long long> count_by_m_;   // C(#cells, m) for m in range
  long long size_ = 0;
};

// Deterministic for fixed (n, seed, index): sample a random family of
// nonempty subsets and keep the containment-maximal ones, which guarantees
// an antichain with m >= 1.
Hypergraph random_antichain(int n, std::uint64_t seed, std::uint64_t index = 0);

// Deterministic random uniform hypergraph: n in [3..n_max], r in [1..n-1],
// m >= 2 distinct r-subsets.
Hypergraph random_uniform(int n_max, std::uint64_t seed, std::uint64_t index = 0);

}  // namespace versal

#endif  // VERSAL_ENUMERATE_HPP
