#ifndef VERSAL_FAMILIES_HPP
#define VERSAL_FAMILIES_HPP

#include <string>
#include <vector>

#include "versal/hypergraph.hpp"

namespace versal {

// Named extremal families. Recognition is structural on labeled vertices;
// generators emit one canonical labeling.

enum class FamilyKind {
  singletons,    // all n one-element edges
  co_singletons, // all n complements of singletons
  c4,            // the 4-cycle; classify reports it as binary_star with s = 2
  star,          // m > 1 rank-r edges sharing an (r-1)-core
  binary_star,   // two s-stars, cores meeting in r-2, tip sets coinciding
  other,
};

std::string to_string(FamilyKind k);

struct FamilyTag {
  FamilyKind kind = FamilyKind::other;
  int rank = 0;
  int star_size = 0;  // m for star, s for binary_star
  VertexSet core;     // (r-1)-core for star, shared (r-2)-core for binary_star
};

Hypergraph gen_singletons(int n);    // n >= 2
Hypergraph gen_cosingletons(int n);  // n >= 2
Hypergraph gen_c4();

// Star with core {0..r-2} and tips {r-1..r-2+m}; spanning (n = r-1+m).
Hypergraph gen_star(int r, int m);  // r >= 1, m >= 2

// Two s-stars: shared core {0..r-3}, extra core vertices r-2 and r-1, tips
// {r..r-1+s}; n = r+s, 2s edges.
Hypergraph gen_binary_star(int r, int s);  // r >= 2, s >= 2

// Checks, in order: singletons, co-singletons, star, binary star (C4 comes
// out as binary_star with star_size 2), else other.
FamilyTag classify(const Hypergraph& h);

// Structural star test (uniform, m > 1, all edges share an (r-1)-set),
// independent of classify's ordering; singletons are the r = 1 case.
bool is_star_family(const Hypergraph& h);
bool is_spanning_star(const Hypergraph& h);  // star covering the universe

// Pennants of e are the edges meeting it in r-1 vertices; each contributes
// its single outside vertex (tip). e is a pole when the tips cover the
// whole complement of e.
struct PoleReport {
  int edge_index;
  std::vector<int> pennants;  // edge indices
  int missing;                // vertices of the complement with no pennant
  bool is_pole;               // missing == 0
};

PoleReport pole_report(const Hypergraph& h, int e_index);  // requires uniform
std::vector<int> poles(const Hypergraph& h);

// True when h itself is a flag with the given pole: m = n-r+1, every other
// edge a pennant of the pole, the tips distinct and covering the pole's
// complement, each tip of degree 1.
bool is_flag(const Hypergraph& h, int pole_index);  // requires uniform

}  // namespace versal

#endif  // VERSAL_FAMILIES_HPP
