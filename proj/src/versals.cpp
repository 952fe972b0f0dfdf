#include "versal/versals.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace versal {

namespace {

inline int popcount(std::uint32_t x) { return std::popcount(x); }

void check_edge_index(const Hypergraph& h, int e_index) {
  if (e_index < 0 || e_index >= h.edge_count())
    throw std::out_of_range("edge index out of range");
}

}  // namespace

bool is_versal(const Hypergraph& h, int e_index, VertexSet s) {
  check_edge_index(h, e_index);
  const std::uint32_t sb = s.bits();
  const VertexSet e = h.edge(e_index);
  const int lhs = e.cardinality() + popcount(sb & e.bits());
  const int m = h.edge_count();
  for (int j = 0; j < m; ++j) {
    if (j == e_index) continue;
    const VertexSet f = h.edge(j);
    if (lhs >= f.cardinality() + popcount(sb & f.bits())) return false;
  }
  return true;
}

bool is_versal_uniform(const Hypergraph& h, int e_index, VertexSet s) {
  check_edge_index(h, e_index);
  const std::uint32_t sb = s.bits();
  const int lhs = popcount(sb & h.edge(e_index).bits());
  const int m = h.edge_count();
  for (int j = 0; j < m; ++j) {
    if (j == e_index) continue;
    if (lhs >= popcount(sb & h.edge(j).bits())) return false;
  }
  return true;
}

std::vector<std::int32_t> owner_map(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::int32_t> owner(count, -1);
  for (std::size_t sb = 0; sb < count; ++sb) {
    int best = std::numeric_limits<int>::max();
    int who = -1;
    bool tie = false;
    for (int j = 0; j < m; ++j) {
      const VertexSet f = h.edge(j);
      const int key = f.cardinality() + popcount(std::uint32_t(sb) & f.bits());
      if (key < best) {
        best = key;
        who = j;
        tie = false;
      } else if (key == best) {
        tie = true;
      }
    }
    owner[sb] = tie ? -1 : who;
  }
  return owner;
}

std::vector<VertexSet> versals_of(const Hypergraph& h, int e_index) {
  check_edge_index(h, e_index);
  std::vector<VertexSet> out;
  const std::uint32_t count = std::uint32_t{1} << h.n();
  for (std::uint32_t sb = 0; sb < count; ++sb) {
    VertexSet s = VertexSet::from_bits(sb);
    if (is_versal(h, e_index, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

VersalCensus all_versals(const Hypergraph& h, bool materialize) {
  const int m = h.edge_count();
  VersalCensus census;
  census.per_edge.assign(static_cast<size_t>(m), 0);
  census.null_per_edge.assign(static_cast<size_t>(m), 0);
  if (m == 0) return census;

  const auto owner = owner_map(h);
  for (std::size_t sb = 0; sb < owner.size(); ++sb) {
    const int e = owner[sb];
    if (e < 0) continue;
    ++census.per_edge[static_cast<size_t>(e)];
    ++census.total;
    if ((std::uint32_t(sb) & h.edge(e).bits()) == 0) {
      ++census.null_per_edge[static_cast<size_t>(e)];
      ++census.null_total;
    }
  }

  if (materialize) {
    census.materialized = true;
    for (int e = 0; e < m; ++e) {
      std::vector<VertexSet> sets;
      for (std::size_t sb = 0; sb < owner.size(); ++sb)
        if (owner[sb] == e) sets.push_back(VertexSet::from_bits(std::uint32_t(sb)));
      std::sort(sets.begin(), sets.end(), canonical_less);
      for (VertexSet s : sets)
        census.records.push_back({e, s, !s.intersects(h.edge(e))});
    }
  }
  return census;
}

VersalCensus null_versals(const Hypergraph& h, bool materialize) {
  const int m = h.edge_count();
  VersalCensus census;
  census.per_edge.assign(static_cast<size_t>(m), 0);
  census.null_per_edge.assign(static_cast<size_t>(m), 0);
  census.materialized = materialize;
  std::vector<VertexSet> sets;
  for (int e = 0; e < m; ++e) {
    const std::uint32_t comp = h.edge(e).complement(h.n()).bits();
    sets.clear();
    // submask walk over the complement of e, descending; includes 0
    std::uint32_t sb = comp;
    while (true) {
      if (is_versal(h, e, VertexSet::from_bits(sb))) {
        ++census.null_per_edge[static_cast<size_t>(e)];
        if (materialize) sets.push_back(VertexSet::from_bits(sb));
      }
      if (sb == 0) break;
      sb = (sb - 1) & comp;
    }
    census.per_edge[static_cast<size_t>(e)] =
        census.null_per_edge[static_cast<size_t>(e)];
    if (materialize) {
      std::sort(sets.begin(), sets.end(), canonical_less);
      for (VertexSet s : sets) census.records.push_back({e, s, true});
    }
  }
  for (long long c : census.null_per_edge) census.null_total += c;
  census.total = census.null_total;
  return census;
}

bool edge_free(const Hypergraph& h, int e_index, int v) {
  check_edge_index(h, e_index);
  if (v < 0 || v >= h.n()) throw std::out_of_range("vertex out of range");
  const VertexSet e = h.edge(e_index);
  if (e.contains(v))
    throw std::invalid_argument("edge_free: vertex lies in the edge");
  return is_versal(h, e_index, e.complement(h.n()).without(v));
}

long long free_pairs(const Hypergraph& h) {
  long long q = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    const VertexSet comp = h.edge(e).complement(h.n());
    for (int v : comp.members())
      if (edge_free(h, e, v)) ++q;
  }
  return q;
}

}  // namespace versal
