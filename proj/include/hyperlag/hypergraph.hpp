#ifndef HYPERLAG_HYPERGRAPH_HPP
#define HYPERLAG_HYPERGRAPH_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlag/vertex_set.hpp"

namespace hyperlag {

/// An r-uniform hypergraph on the labeled vertex set {1..n}.
///
/// Edges are kept sorted lexicographically (each edge is a VertexSet, so the
/// members of an edge are implicitly sorted). Values are immutable once
/// constructed; every operation that changes the edge set returns a new graph.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument on a malformed edge or a duplicate edge.
  Hypergraph(int r, int n, std::vector<VertexSet> edges) : r_(r), n_(n), edges_(std::move(edges)) {
    if (r < 0) throw std::invalid_argument("uniformity must be non-negative");
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must lie in 0..64");
    const VertexSet all = VertexSet::range(n);
    for (VertexSet e : edges_) {
      if (e.size() != r) throw std::invalid_argument("edge does not have exactly r distinct vertices");
      if (!all.contains(e)) throw std::invalid_argument("edge vertex outside 1..n");
    }
    std::sort(edges_.begin(), edges_.end(), LexLess{});
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge");
  }

  Hypergraph(int r, int n, const std::vector<std::vector<Vertex>>& edges)
      : Hypergraph(r, n, to_sets(r, edges)) {}

  /// Edgeless graph.
  static Hypergraph empty(int r, int n) { return Hypergraph(r, n, std::vector<VertexSet>{}); }

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  /// |G|: number of edges.
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  std::span<const VertexSet> edges() const { return edges_; }

  bool has_edge(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e, LexLess{}); }

  int degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](VertexSet e) { return e.contains(v); }));
  }

  /// Vertices lying in no edge.
  VertexSet isolated_vertices() const {
    VertexSet covered;
    for (VertexSet e : edges_) covered = covered | e;
    return vertices() - covered;
  }

  std::vector<std::vector<Vertex>> edge_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(edges_.size());
    for (VertexSet e : edges_) out.push_back(e.to_vector());
    return out;
  }

  /// Same vertex set with one more edge; throws if e is already present or malformed.
  Hypergraph with_edge(VertexSet e) const {
    std::vector<VertexSet> es = edges_;
    es.push_back(e);
    return Hypergraph(r_, n_, std::move(es));
  }

  /// Same vertex set with e removed; throws if e is absent.
  Hypergraph without_edge(VertexSet e) const {
    std::vector<VertexSet> es = edges_;
    auto it = std::lower_bound(es.begin(), es.end(), e, LexLess{});
    if (it == es.end() || *it != e) throw std::invalid_argument("edge not present");
    es.erase(it);
    return Hypergraph(r_, n_, std::move(es));
  }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  /// Order used to sort graph collections deterministically: (n, |E|, edge sequence).
  friend bool operator<(const Hypergraph& a, const Hypergraph& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.edges_.size() != b.edges_.size()) return a.edges_.size() < b.edges_.size();
    return std::lexicographical_compare(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end(), LexLess{});
  }

 private:
  static std::vector<VertexSet> to_sets(int r, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<VertexSet> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
      if (static_cast<int>(e.size()) != r) throw std::invalid_argument("edge does not have exactly r vertices");
      VertexSet s;
      for (Vertex v : e) {
        if (v < 1 || v > kMaxVertices) throw std::invalid_argument("edge vertex outside 1..n");
        if (s.contains(v)) throw std::invalid_argument("edge repeats a vertex");
        s.insert(v);
      }
      out.push_back(s);
    }
    return out;
  }

  int r_ = 0;
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

/// Injective map from pattern vertices to host vertices; map[i] is the image
/// of pattern vertex i+1.
struct Embedding {
  std::vector<Vertex> map;

  Vertex operator()(Vertex v) const { return map.at(static_cast<std::size_t>(v - 1)); }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Non-empty list of same-uniformity patterns; a host is free of the family
/// when it contains none of them.
class ForbiddenFamily {
 public:
  ForbiddenFamily() = default;

  explicit ForbiddenFamily(std::vector<Hypergraph> members, std::string name = {})
      : members_(std::move(members)), name_(std::move(name)) {
    if (members_.empty()) throw std::invalid_argument("forbidden family must have at least one member");
    const int r = members_.front().uniformity();
    for (const auto& m : members_)
      if (m.uniformity() != r) throw std::invalid_argument("forbidden family members differ in uniformity");
  }

  /// A family with no members; every graph is free of it.
  static ForbiddenFamily nothing() { return ForbiddenFamily(Tag{}); }

  std::span<const Hypergraph> members() const { return members_; }
  const std::string& name() const { return name_; }
  bool is_empty() const { return members_.empty(); }
  std::optional<int> uniformity() const {
    if (members_.empty()) return std::nullopt;
    return members_.front().uniformity();
  }

 private:
  struct Tag {};
  explicit ForbiddenFamily(Tag) : name_("none") {}

  std::vector<Hypergraph> members_;
  std::string name_;
};

}  // namespace hyperlag

#endif  // HYPERLAG_HYPERGRAPH_HPP
