#include "versal/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace versal {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::singletons: return "singletons";
    case FamilyKind::co_singletons: return "co_singletons";
    case FamilyKind::c4: return "c4";
    case FamilyKind::star: return "star";
    case FamilyKind::binary_star: return "binary_star";
    case FamilyKind::other: return "other";
  }
  return "other";
}

Hypergraph gen_singletons(int n) {
  if (n < 2) throw std::invalid_argument("gen_singletons: n must be >= 2");
  std::vector<VertexSet> edges;
  for (int v = 0; v < n; ++v) edges.push_back(VertexSet::of({v}));
  return Hypergraph::unchecked(n, std::move(edges));
}

Hypergraph gen_cosingletons(int n) {
  if (n < 2) throw std::invalid_argument("gen_cosingletons: n must be >= 2");
  std::vector<VertexSet> edges;
  for (int v = 0; v < n; ++v)
    edges.push_back(VertexSet::of({v}).complement(n));
  return Hypergraph::unchecked(n, std::move(edges));
}

Hypergraph gen_c4() {
  return Hypergraph::unchecked(
      4, {VertexSet::of({0, 1}), VertexSet::of({1, 2}), VertexSet::of({2, 3}),
          VertexSet::of({0, 3})});
}

Hypergraph gen_star(int r, int m) {
  if (r < 1 || m < 2) throw std::invalid_argument("gen_star: need r >= 1, m >= 2");
  const int n = r - 1 + m;
  if (n > kMaxUniverse) throw std::invalid_argument("gen_star: universe exceeds cap");
  VertexSet core;
  for (int v = 0; v < r - 1; ++v) core = core.with(v);
  std::vector<VertexSet> edges;
  for (int t = 0; t < m; ++t) edges.push_back(core.with(r - 1 + t));
  return Hypergraph::unchecked(n, std::move(edges));
}

Hypergraph gen_binary_star(int r, int s) {
  if (r < 2 || s < 2)
    throw std::invalid_argument("gen_binary_star: need r >= 2, s >= 2");
  const int n = r + s;
  if (n > kMaxUniverse)
    throw std::invalid_argument("gen_binary_star: universe exceeds cap");
  VertexSet shared;
  for (int v = 0; v < r - 2; ++v) shared = shared.with(v);
  const int a = r - 2, b = r - 1;
  std::vector<VertexSet> edges;
  for (int t = 0; t < s; ++t) edges.push_back(shared.with(a).with(r + t));
  for (int t = 0; t < s; ++t) edges.push_back(shared.with(b).with(r + t));
  return Hypergraph::unchecked(n, std::move(edges));
}

namespace {

VertexSet edges_intersection(const Hypergraph& h) {
  VertexSet inter = VertexSet::full(h.n());
  for (VertexSet e : h.edges()) inter = inter & e;
  return inter;
}

VertexSet edges_union(const Hypergraph& h) {
  VertexSet u;
  for (VertexSet e : h.edges()) u = u | e;
  return u;
}

// Binary-star decomposition: find distinct a, b such that no edge contains
// both, the edges split evenly between them, each side is a star whose core
// contains its pivot, the cores meet in r-2 vertices, and the two tip sets
// coincide. n <= 24 keeps the pair scan negligible.
bool binary_star_decompose(const Hypergraph& h, int* star_size,
                           VertexSet* shared_core) {
  const int m = h.edge_count();
  if (m < 4 || m % 2 != 0 || !h.is_uniform()) return false;
  const int r = h.rank();
  if (r < 2) return false;
  const int s = m / 2;
  for (int a = 0; a < h.n(); ++a) {
    for (int b = a + 1; b < h.n(); ++b) {
      VertexSet core_a = VertexSet::full(h.n());
      VertexSet core_b = VertexSet::full(h.n());
      VertexSet tips_a, tips_b;
      int count_a = 0, count_b = 0;
      bool bad = false;
      for (VertexSet e : h.edges()) {
        const bool has_a = e.contains(a), has_b = e.contains(b);
        if (has_a == has_b) { bad = true; break; }  // both or neither
        if (has_a) { core_a = core_a & e; ++count_a; }
        else { core_b = core_b & e; ++count_b; }
      }
      if (bad || count_a != s || count_b != s) continue;
      if (core_a.cardinality() != r - 1 || core_b.cardinality() != r - 1)
        continue;
      if ((core_a & core_b).cardinality() != r - 2) continue;
      for (VertexSet e : h.edges()) {
        if (e.contains(a)) tips_a = tips_a | (e - core_a);
        else tips_b = tips_b | (e - core_b);
      }
      // s distinct single-vertex tips per side, and the sides coincide
      if (tips_a.cardinality() != s || tips_a != tips_b) continue;
      if (star_size) *star_size = s;
      if (shared_core) *shared_core = core_a & core_b;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_star_family(const Hypergraph& h) {
  if (h.edge_count() < 2 || !h.is_uniform()) return false;
  return edges_intersection(h).cardinality() >= h.rank() - 1;
}

bool is_spanning_star(const Hypergraph& h) {
  return is_star_family(h) && edges_union(h) == VertexSet::full(h.n());
}

FamilyTag classify(const Hypergraph& h) {
  const int n = h.n();
  const int m = h.edge_count();
  if (m == 0) return {FamilyKind::other, 0, 0, {}};
  const int r = h.rank();

  FamilyTag tag;
  tag.rank = r;

  auto all_size = [&](int k) {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [k](VertexSet e) { return e.cardinality() == k; });
  };

  if (m == n && all_size(1)) {
    tag.kind = FamilyKind::singletons;
    return tag;
  }
  if (m == n && all_size(n - 1)) {
    tag.kind = FamilyKind::co_singletons;
    return tag;
  }
  if (is_star_family(h)) {
    tag.kind = FamilyKind::star;
    tag.star_size = m;
    tag.core = edges_intersection(h);
    return tag;
  }
  int s = 0;
  VertexSet shared;
  if (binary_star_decompose(h, &s, &shared)) {
    tag.kind = FamilyKind::binary_star;
    tag.star_size = s;
    tag.core = shared;
    return tag;
  }
  tag.kind = FamilyKind::other;
  return tag;
}

PoleReport pole_report(const Hypergraph& h, int e_index) {
  if (e_index < 0 || e_index >= h.edge_count())
    throw std::out_of_range("pole_report: edge index out of range");
  if (!h.is_uniform())
    throw std::invalid_argument("pole_report: hypergraph must be uniform");
  const int r = h.rank();
  const VertexSet e = h.edge(e_index);
  PoleReport report;
  report.edge_index = e_index;
  VertexSet covered;
  for (int j = 0; j < h.edge_count(); ++j) {
    if (j == e_index) continue;
    const VertexSet f = h.edge(j);
    if ((f & e).cardinality() == r - 1) {
      report.pennants.push_back(j);
      covered = covered | (f - e);  // the pennant's single outside vertex
    }
  }
  const VertexSet comp = e.complement(h.n());
  report.missing = (comp - covered).cardinality();
  report.is_pole = report.missing == 0;
  return report;
}

std::vector<int> poles(const Hypergraph& h) {
  std::vector<int> out;
  for (int i = 0; i < h.edge_count(); ++i)
    if (pole_report(h, i).is_pole) out.push_back(i);
  return out;
}

bool is_flag(const Hypergraph& h, int pole_index) {
  if (pole_index < 0 || pole_index >= h.edge_count())
    throw std::out_of_range("is_flag: edge index out of range");
  if (!h.is_uniform())
    throw std::invalid_argument("is_flag: hypergraph must be uniform");
  const int n = h.n();
  const int r = h.rank();
  const int m = h.edge_count();
  if (m != n - r + 1) return false;
  const VertexSet pole = h.edge(pole_index);
  VertexSet tips;
  for (int j = 0; j < m; ++j) {
    if (j == pole_index) continue;
    const VertexSet f = h.edge(j);
    if ((f & pole).cardinality() != r - 1) return false;  // not a pennant
    const VertexSet tip = f - pole;
    if (tips.intersects(tip)) return false;  // tips must be distinct
    tips = tips | tip;
    if (h.degree(tip.members().front()) != 1) return false;
  }
  return tips == pole.complement(n);
}

}  // namespace versal
