#include "versal/isolation.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "versal/versals.hpp"

namespace versal {

Weighting weight_from_versal(const Hypergraph& h, int e_index, VertexSet s) {
  if (!is_versal(h, e_index, s))
    throw std::invalid_argument(
        "weight_from_versal: the set is not a versal for the edge");
  Weighting w;
  w.values.assign(static_cast<size_t>(h.n()), 1);
  for (int v : s.members()) w.values[static_cast<size_t>(v)] = 2;
  return w;
}

long long edge_weight(const Hypergraph& h, int e_index, const Weighting& w) {
  long long sum = 0;
  for (int v : h.edge(e_index).members())
    sum += w.values[static_cast<size_t>(v)];
  return sum;
}

std::optional<int> unique_min_edge(const Hypergraph& h, const Weighting& w) {
  if (static_cast<int>(w.values.size()) != h.n())
    throw std::invalid_argument("unique_min_edge: weighting size mismatch");
  for (int x : w.values)
    if (x < 1) throw std::invalid_argument("unique_min_edge: weights must be >= 1");
  std::optional<int> who;
  long long best = std::numeric_limits<long long>::max();
  bool tie = false;
  for (int j = 0; j < h.edge_count(); ++j) {
    const long long sum = edge_weight(h, j, w);
    if (sum < best) {
      best = sum;
      who = j;
      tie = false;
    } else if (sum == best) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return who;
}

namespace {

long long pow_checked(int K, int n, long long budget) {
  long long p = 1;
  for (int i = 0; i < n; ++i) {
    if (p > budget / K) return -1;
    p *= K;
  }
  return p;
}

bool has_unique_min(const Hypergraph& h, const std::vector<int>& w) {
  long long best = std::numeric_limits<long long>::max();
  bool tie = false;
  for (int j = 0; j < h.edge_count(); ++j) {
    long long sum = 0;
    for (int v : h.edge(j).members()) sum += w[static_cast<size_t>(v)];
    if (sum < best) {
      best = sum;
      tie = false;
    } else if (sum == best) {
      tie = true;
    }
  }
  return !tie && h.edge_count() > 0;
}

}  // namespace

Rational min_unique_probability_exact(const Hypergraph& h, int K) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  const long long total = pow_checked(K, h.n(), kExactBudget);
  if (total < 0)
    throw std::invalid_argument("exact mode budget exceeded: K^n too large");
  std::vector<int> w(static_cast<size_t>(h.n()), 1);
  long long hits = 0;
  // odometer over {1..K}^n
  while (true) {
    if (has_unique_min(h, w)) ++hits;
    int i = 0;
    while (i < h.n() && w[static_cast<size_t>(i)] == K) {
      w[static_cast<size_t>(i)] = 1;
      ++i;
    }
    if (i == h.n()) break;
    ++w[static_cast<size_t>(i)];
  }
  const long long g = std::gcd(hits, total);
  return {hits / g, total / g};
}

double min_unique_probability_mc(const Hypergraph& h, int K, long long samples,
                                 std::uint64_t seed, int jobs) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (jobs < 1) jobs = 1;

  // Fixed-size blocks with per-block seeds keep the pooled estimate
  // independent of how blocks are distributed over workers.
  constexpr long long kBlock = 4096;
  const long long blocks = (samples + kBlock - 1) / kBlock;

  auto run_block = [&](long long b) -> long long {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(b >> 32), 0x9e37u};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> weight(1, K);
    const long long lo = b * kBlock;
    const long long hi = std::min(samples, lo + kBlock);
    std::vector<int> w(static_cast<size_t>(h.n()));
    long long hits = 0;
    for (long long s = lo; s < hi; ++s) {
      for (auto& x : w) x = weight(rng);
      if (has_unique_min(h, w)) ++hits;
    }
    return hits;
  };

  long long hits = 0;
  if (jobs == 1) {
    for (long long b = 0; b < blocks; ++b) hits += run_block(b);
  } else {
    std::vector<long long> partial(static_cast<size_t>(jobs), 0);
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (long long b = t; b < blocks; b += jobs)
          partial[static_cast<size_t>(t)] += run_block(b);
      });
    }
    for (auto& th : workers) th.join();
    for (long long p : partial) hits += p;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace versal
