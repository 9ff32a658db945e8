#ifndef HYPERLAG_VERTEX_SET_HPP
#define HYPERLAG_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hyperlag {

/// 1-based vertex label.
using Vertex = int;

/// Largest vertex count a Hypergraph can hold (one bit per vertex).
inline constexpr int kMaxVertices = 64;

/// A set of vertices stored as a 64-bit mask; vertex v occupies bit v-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static VertexSet from_vector(const std::vector<Vertex>& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  /// {1..n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  constexpr bool contains(VertexSet other) const { return (bits_ & other.bits_) == other.bits_; }

  void insert(Vertex v) {
    if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex label outside 1..64");
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  /// Smallest vertex, or 0 when empty.
  constexpr Vertex min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest vertex, or 0 when empty.
  constexpr Vertex max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Calls f(v) for every member in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b) + 1));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted member lists. For sets of equal size the
/// first difference is decided by the smallest element of the symmetric
/// difference.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) {
    // Fall back to a direct comparison of sorted lists.
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
      const int lx = std::countr_zero(x), ly = std::countr_zero(y);
      if (lx != ly) return lx < ly;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

}  // namespace hyperlag

#endif  // HYPERLAG_VERTEX_SET_HPP
