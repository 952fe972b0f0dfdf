#include "versal/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace versal {

namespace {

void validate(int n, const std::vector<VertexSet>& edges) {
  if (n < 1 || n > kMaxUniverse)
    throw std::invalid_argument("universe size must be in [1, " +
                                std::to_string(kMaxUniverse) + "]");
  const VertexSet universe = VertexSet::full(n);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].empty())
      throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
    if (!edges[i].subset_of(universe))
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has a vertex outside the universe");
    for (size_t j = 0; j < i; ++j) {
      if (edges[j] == edges[i])
        throw std::invalid_argument("duplicate edge at index " +
                                    std::to_string(i));
      if (edges[j].subset_of(edges[i]) || edges[i].subset_of(edges[j]))
        throw std::invalid_argument(
            "containment violation between edges " + std::to_string(j) +
            " and " + std::to_string(i));
    }
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) {
  validate(n, edges);
  n_ = n;
  edges_ = std::move(edges);
}

Hypergraph Hypergraph::unchecked(int n, std::vector<VertexSet> edges) {
  Hypergraph h;
  h.n_ = n;
  h.edges_ = std::move(edges);
  return h;
}

int Hypergraph::rank() const {
  if (edges_.empty()) throw std::logic_error("rank: empty edge list");
  int r = 0;
  for (VertexSet e : edges_) r = std::max(r, e.cardinality());
  return r;
}

int Hypergraph::min_rank() const {
  if (edges_.empty()) throw std::logic_error("min_rank: empty edge list");
  int r = n_ + 1;
  for (VertexSet e : edges_) r = std::min(r, e.cardinality());
  return r;
}

bool Hypergraph::is_uniform() const { return rank() == min_rank(); }

int Hypergraph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("degree: vertex out of range");
  int d = 0;
  for (VertexSet e : edges_)
    if (e.contains(v)) ++d;
  return d;
}

Hypergraph Hypergraph::reflect() const {
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  for (VertexSet e : edges_) {
    VertexSet c = e.complement(n_);
    if (c.empty())
      throw std::invalid_argument(
          "reflect: an edge equals the full vertex set");
    out.push_back(c);
  }
  return unchecked(n_, std::move(out));
}

std::vector<int> Hypergraph::min_layer_indices() const {
  const int rho = min_rank();
  std::vector<int> idx;
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[static_cast<size_t>(i)].cardinality() == rho) idx.push_back(i);
  return idx;
}

Hypergraph Hypergraph::min_layer() const {
  std::vector<VertexSet> out;
  for (int i : min_layer_indices()) out.push_back(edge(i));
  return unchecked(n_, std::move(out));
}

std::string Hypergraph::to_hg() const {
  std::string s = std::to_string(n_) + " " + std::to_string(edge_count()) + "\n";
  for (VertexSet e : edges_) {
    bool first = true;
    for (int v : e.members()) {
      if (!first) s += " ";
      s += std::to_string(v);
      first = false;
    }
    s += "\n";
  }
  return s;
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long long m = -1;
  std::vector<VertexSet> edges;
  std::vector<int> edge_lines;

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string content;
  if (!next_content_line(content)) throw ParseError(lineno ? lineno : 1, "missing header");
  {
    std::istringstream hs(content);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw ParseError(lineno, "malformed header, expected \"n m\"");
    if (n < 1 || n > kMaxUniverse)
      throw ParseError(lineno, "universe size must be in [1, " +
                                   std::to_string(kMaxUniverse) + "]");
    if (m < 0) throw ParseError(lineno, "negative edge count");
  }

  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(content))
      throw ParseError(lineno ? lineno : 1,
                       "expected " + std::to_string(m) + " edges, got " +
                           std::to_string(i));
    std::istringstream es(content);
    VertexSet e;
    int v;
    int prev = -1;
    while (es >> v) {
      if (v < 0 || v >= n)
        throw ParseError(lineno, "vertex " + std::to_string(v) +
                                     " outside universe of size " +
                                     std::to_string(n));
      if (v <= prev)
        throw ParseError(lineno, "vertex indices must be strictly ascending");
      prev = v;
      e = e.with(v);
    }
    if (!es.eof()) throw ParseError(lineno, "malformed edge line");
    if (e.empty()) throw ParseError(lineno, "empty edge");
    for (size_t j = 0; j < edges.size(); ++j) {
      if (edges[j] == e) throw ParseError(lineno, "duplicate edge");
      if (edges[j].subset_of(e) || e.subset_of(edges[j]))
        throw ParseError(lineno,
                         "containment violation with edge on line " +
                             std::to_string(edge_lines[j]));
    }
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }

  if (next_content_line(content))
    throw ParseError(lineno, "unexpected content after last edge");

  return Hypergraph::unchecked(n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

}  // namespace versal
