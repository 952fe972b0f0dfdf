#ifndef VERSAL_VERTEX_SET_HPP
#define VERSAL_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace versal {

// Universe cap: with n <= 24 a vertex set fits in one 32-bit word, every set
// operation is a single instruction, and full subset enumeration (2^n per
// edge) stays at desk scale.
inline constexpr int kMaxUniverse = 24;

// Subset of {0..n-1}. The universe size n is carried by the owning
// Hypergraph; a VertexSet is just the membership mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint32_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }

  static constexpr VertexSet full(int n) {
    return from_bits(n == 0 ? 0u : (~0u >> (32 - n)));
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.bits_ |= (1u << v);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr VertexSet with(int v) const { return from_bits(bits_ | (1u << v)); }
  constexpr VertexSet without(int v) const {
    return from_bits(bits_ & ~(1u << v));
  }
  constexpr VertexSet complement(int n) const {
    return from_bits(~bits_ & full(n).bits());
  }

  constexpr bool subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(cardinality());
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : members()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

// Canonical reporting order: by cardinality, then lexicographic on the
// ascending member lists. For equal cardinalities the lists first diverge at
// the smallest vertex of the symmetric difference, and whichever set contains
// that vertex sorts first.
inline bool canonical_less(VertexSet a, VertexSet b) {
  if (a.cardinality() != b.cardinality())
    return a.cardinality() < b.cardinality();
  std::uint32_t d = a.bits() ^ b.bits();
  if (d == 0) return false;
  return (a.bits() & (d & -d)) != 0;
}

}  // namespace versal

#endif  // VERSAL_VERTEX_SET_HPP
