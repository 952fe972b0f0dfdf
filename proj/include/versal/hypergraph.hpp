#ifndef VERSAL_HYPERGRAPH_HPP
#define VERSAL_HYPERGRAPH_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "versal/vertex_set.hpp"

namespace versal {

// Error from the .hg reader, carrying the 1-based input line.
struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
  int line;
};

// A hypergraph on universe {0..n-1} whose edges are distinct, nonempty, and
// form an antichain (no edge contains another). Edges keep input order; all
// reported indices refer to that order. Immutable after construction.
//
// m = 0 is representable (the parser accepts it); operations that need an
// edge state so explicitly.
class Hypergraph {
 public:
  // Validates: universe bounds, nonempty edges, membership range,
  // distinctness, antichain. Throws std::invalid_argument on violation.
  Hypergraph(int n, std::vector<VertexSet> edges);

  // For generators whose output is an antichain by construction.
  static Hypergraph unchecked(int n, std::vector<VertexSet> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(int i) const { return edges_[static_cast<size_t>(i)]; }

  int rank() const;      // max edge cardinality; throws if m = 0
  int min_rank() const;  // min edge cardinality (rho); throws if m = 0
  bool is_uniform() const;

  // Number of edges containing v. Isolated vertices (degree 0) are legal.
  int degree(int v) const;

  // Edgewise complement within the universe. Requires every complement
  // nonempty (no edge equal to the full vertex set). Complementation
  // reverses containment, so the result is again an antichain.
  Hypergraph reflect() const;

  // The sub-hypergraph of minimum-cardinality edges, on the same universe.
  Hypergraph min_layer() const;
  std::vector<int> min_layer_indices() const;

  std::string to_hg() const;

 private:
  Hypergraph() = default;
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// Reads the `.hg` interchange format:
//   line 1: "n m"; then m lines of strictly ascending space-separated
//   0-based vertex indices, one edge per line. `#` starts a comment line,
//   blank lines are ignored. Errors carry the offending line number.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);

}  // namespace versal

#endif  // VERSAL_HYPERGRAPH_HPP
