#ifndef VERSAL_VERSALS_HPP
#define VERSAL_VERSALS_HPP

#include <cstdint>
#include <vector>

#include "versal/hypergraph.hpp"

namespace versal {

// S is a versal for edge e when e strictly minimizes |f| + |S n f| over all
// edges f. A versal pins down a unique minimizing edge, so the lists L(e)
// for distinct edges are disjoint and Z(H) = sum |L(e)| without collisions.
// A versal is null when it avoids its own edge.

struct VersalRecord {
  int edge_index;
  VertexSet set;
  bool is_null;  // set n edge = empty
};

struct VersalCensus {
  std::vector<long long> per_edge;       // |L(e)| by edge index
  std::vector<long long> null_per_edge;  // null versals by edge index
  long long total = 0;                   // |Z(H)|
  long long null_total = 0;              // |Z'(H)|
  // Filled only when materialize was requested: ordered by edge index, then
  // canonically within an edge (cardinality, then lexicographic).
  std::vector<VersalRecord> records;
  bool materialized = false;
};

// The defining test: for every edge f != e, |e| + |S n e| < |f| + |S n f|.
// Vacuously true when m = 1. Throws on an out-of-range edge index.
bool is_versal(const Hypergraph& h, int e_index, VertexSet s);

// The simplified test for uniform hypergraphs: |S n e| < |S n f| for every
// f != e. Kept as an independent route; must agree with is_versal whenever
// the hypergraph is uniform.
bool is_versal_uniform(const Hypergraph& h, int e_index, VertexSet s);

// owner[S.bits] = the index of the unique edge minimizing |f| + |S n f|,
// or -1 when the minimum is tied. owner[S] == e iff S is a versal for e.
std::vector<std::int32_t> owner_map(const Hypergraph& h);

// L(e), in canonical order.
std::vector<VertexSet> versals_of(const Hypergraph& h, int e_index);

// Z(H). Counts always; records only when materialize is set.
VersalCensus all_versals(const Hypergraph& h, bool materialize = false);

// Z'(H), enumerating only subsets of each edge's complement (2^(n-|e|)
// candidates per edge; this dominates the verifier's inner loop).
VersalCensus null_versals(const Hypergraph& h, bool materialize = false);

// Reduced free-vertex predicate: v (in the complement of e) is free for e
// iff complement(e)\{v} is a versal for e. By upward closure this is
// equivalent to the existence of any versal S of e with v outside S u e.
// Throws when v lies in e.
bool edge_free(const Hypergraph& h, int e_index, int v);

// q = number of (edge, vertex) pairs with edge_free true.
long long free_pairs(const Hypergraph& h);

}  // namespace versal

#endif  // VERSAL_VERSALS_HPP
