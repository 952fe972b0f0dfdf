#ifndef VERSAL_ISOLATION_HPP
#define VERSAL_ISOLATION_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "versal/hypergraph.hpp"

namespace versal {

// Bridge between versals and vertex weightings with a unique minimum-weight
// edge: the weighting that is 2 on a versal S and 1 elsewhere gives edge f
// the sum |f| + |S n f|, so S is a versal for e exactly when e is the unique
// minimum. Weightings here take positive integer values.

struct Weighting {
  std::vector<int> values;  // one per vertex, all >= 1
};

// The 2-on-S, 1-off-S weighting. Throws std::invalid_argument when S is not
// a versal for the indexed edge.
Weighting weight_from_versal(const Hypergraph& h, int e_index, VertexSet s);

long long edge_weight(const Hypergraph& h, int e_index, const Weighting& w);

// The unique edge of strictly smallest weight sum, or nullopt on a tie
// (or when there are no edges).
std::optional<int> unique_min_edge(const Hypergraph& h, const Weighting& w);

struct Rational {
  long long num = 0;
  long long den = 1;
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Exact-mode budget on the number of weightings K^n.
inline constexpr long long kExactBudget = 1LL << 26;

// Probability that a uniform random weighting in {1..K}^n has a unique
// minimum-weight edge. Exact mode enumerates all K^n weightings and reports
// a reduced rational; throws when K^n exceeds the budget.
Rational min_unique_probability_exact(const Hypergraph& h, int K);

// Monte Carlo estimate, deterministic for fixed (K, samples, seed): samples
// are drawn in fixed-size blocks with per-block derived seeds, so the pooled
// frequency does not depend on the worker count.
double min_unique_probability_mc(const Hypergraph& h, int K, long long samples,
                                 std::uint64_t seed, int jobs = 1);

}  // namespace versal

#endif  // VERSAL_ISOLATION_HPP
