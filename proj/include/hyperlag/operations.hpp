#ifndef HYPERLAG_OPERATIONS_HPP
#define HYPERLAG_OPERATIONS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

inline void require_same_uniformity(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity()) throw std::invalid_argument("uniformity mismatch");
}

/// N(v): the (r-1)-graph {S : S ∪ {v} ∈ E(G)} on the same vertex set, v isolated.
inline Hypergraph link(const Hypergraph& g, Vertex v) {
  g.check_vertex(v);
  if (g.uniformity() < 1) throw std::invalid_argument("link needs uniformity at least 1");
  std::vector<VertexSet> out;
  for (VertexSet e : g.edges())
    if (e.contains(v)) out.push_back(e.without(v));
  return Hypergraph(g.uniformity() - 1, g.vertex_count(), std::move(out));
}

/// N(a,b): the (r-2)-sets S with S ∪ {a,b} ∈ E(G), in lexicographic order.
inline std::vector<VertexSet> pair_link(const Hypergraph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw std::invalid_argument("pair_link needs two distinct vertices");
  const VertexSet ab{a, b};
  std::vector<VertexSet> out;
  for (VertexSet e : g.edges())
    if (e.contains(ab)) out.push_back(e - ab);
  return out;  // already lex-sorted: removing a common pair preserves edge order
}

/// True iff every pair of vertices of G lies in a common edge.
inline bool covers_pairs(const Hypergraph& g) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (VertexSet e : g.edges())
    e.for_each([&](Vertex v) { nbr[static_cast<std::size_t>(v - 1)] |= e.bits(); });
  for (int v = 1; v <= n; ++v) {
    const std::uint64_t want = VertexSet::range(n).without(v).bits();
    if ((nbr[static_cast<std::size_t>(v - 1)] & want) != want) return false;
  }
  return true;
}

/// Pairs {i<j} not contained in any edge, in lexicographic order.
inline std::vector<std::pair<Vertex, Vertex>> uncovered_pairs(const Hypergraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int n = g.vertex_count();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      const VertexSet ij{i, j};
      const auto edges = g.edges();
      if (std::none_of(edges.begin(), edges.end(), [ij](VertexSet e) { return e.contains(ij); }))
        out.emplace_back(i, j);
    }
  return out;
}

/// L_G(j \ i): (r-1)-sets e with i ∉ e, e ∪ {j} ∈ E(G) and e ∪ {i} ∉ E(G).
inline std::vector<VertexSet> l_diff(const Hypergraph& g, Vertex j, Vertex i) {
  g.check_vertex(i);
  g.check_vertex(j);
  if (i == j) throw std::invalid_argument("l_diff needs two distinct vertices");
  std::vector<VertexSet> out;
  for (VertexSet e : g.edges()) {
    if (!e.contains(j) || e.contains(i)) continue;
    const VertexSet rest = e.without(j);
    if (!g.has_edge(rest.with(i))) out.push_back(rest);
  }
  return out;
}

namespace detail {

struct EdgeLookup {
  std::unordered_set<std::uint64_t> bits;
  explicit EdgeLookup(const Hypergraph& g) {
    bits.reserve(static_cast<std::size_t>(g.size()) * 2);
    for (VertexSet e : g.edges()) bits.insert(e.bits());
  }
  bool has(VertexSet e) const { return bits.contains(e.bits()); }
};

/// Backtracking search for an injective edge-preserving map pattern -> host.
/// Pattern vertices are assigned in order 1..p and host candidates are tried in
/// increasing order, so the first map found is the lexicographically least.
/// `allowed(pv, hv)` can forbid individual assignments.
template <class Allowed>
std::optional<Embedding> find_embedding(const Hypergraph& host, const Hypergraph& pattern, Allowed&& allowed) {
  const int p = pattern.vertex_count();
  const int n = host.vertex_count();
  if (p > n || pattern.size() > host.size()) return std::nullopt;

  const EdgeLookup lookup(host);
  // Edges checked once their largest vertex is placed; the empty edge (r = 0) up front.
  std::vector<std::vector<VertexSet>> closing(static_cast<std::size_t>(p) + 1);
  std::vector<int> pdeg(static_cast<std::size_t>(p) + 1, 0), hdeg(static_cast<std::size_t>(n) + 1, 0);
  for (VertexSet e : pattern.edges()) {
    closing[static_cast<std::size_t>(e.max())].push_back(e);
    e.for_each([&](Vertex v) { ++pdeg[static_cast<std::size_t>(v)]; });
  }
  for (VertexSet e : host.edges()) e.for_each([&](Vertex v) { ++hdeg[static_cast<std::size_t>(v)]; });
  if (!closing[0].empty() && !lookup.has(VertexSet{})) return std::nullopt;

  std::vector<Vertex> map(static_cast<std::size_t>(p) + 1, 0);
  std::uint64_t used = 0;

  auto image = [&](VertexSet e) {
    std::uint64_t b = 0;
    e.for_each([&](Vertex v) { b |= std::uint64_t{1} << (map[static_cast<std::size_t>(v)] - 1); });
    return VertexSet(b);
  };

  auto extend = [&](auto&& self, Vertex pv) -> bool {
    if (pv > p) return true;
    for (Vertex hv = 1; hv <= n; ++hv) {
      if ((used >> (hv - 1)) & 1U) continue;
      if (hdeg[static_cast<std::size_t>(hv)] < pdeg[static_cast<std::size_t>(pv)]) continue;
      if (!allowed(pv, hv)) continue;
      map[static_cast<std::size_t>(pv)] = hv;
      bool ok = true;
      for (VertexSet e : closing[static_cast<std::size_t>(pv)])
        if (!lookup.has(image(e))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used |= std::uint64_t{1} << (hv - 1);
      if (self(self, pv + 1)) return true;
      used &= ~(std::uint64_t{1} << (hv - 1));
    }
    return false;
  };

  if (!extend(extend, 1)) return std::nullopt;
  return Embedding{std::vector<Vertex>(map.begin() + 1, map.end())};
}

}  // namespace detail

/// Lexicographically least embedding of `pattern` into `host` as a (not
/// necessarily induced) subhypergraph, or nullopt when there is none.
inline std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern) {
  require_same_uniformity(host, pattern);
  return detail::find_embedding(host, pattern, [](Vertex, Vertex) { return true; });
}

/// True iff the host contains no member of the family.
inline bool is_free(const Hypergraph& host, const ForbiddenFamily& family) {
  for (const Hypergraph& m : family.members()) {
    require_same_uniformity(host, m);
    if (contains(host, m)) return false;
  }
  return true;
}

/// G ⊔ H: H's labels are shifted past G's.
inline Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  require_same_uniformity(g, h);
  const int shift = g.vertex_count();
  if (shift + h.vertex_count() > kMaxVertices) throw std::invalid_argument("disjoint union exceeds 64 vertices");
  std::vector<VertexSet> es(g.edges().begin(), g.edges().end());
  for (VertexSet e : h.edges()) es.push_back(VertexSet(e.bits() << shift));
  return Hypergraph(g.uniformity(), shift + h.vertex_count(), std::move(es));
}

/// H^F: every uncovered pair {i,j} receives r-2 fresh vertices B_ij and the edge {i,j} ∪ B_ij.
/// Fresh blocks are numbered consecutively in lexicographic order of the pairs.
inline Hypergraph extension(const Hypergraph& f) {
  const int r = f.uniformity();
  if (r < 3) throw std::invalid_argument("extension needs uniformity at least 3");
  const auto pairs = uncovered_pairs(f);
  const long total = f.vertex_count() + static_cast<long>(r - 2) * static_cast<long>(pairs.size());
  if (total > kMaxVertices) throw std::invalid_argument("extension exceeds 64 vertices");
  std::vector<VertexSet> es(f.edges().begin(), f.edges().end());
  Vertex next = f.vertex_count() + 1;
  for (auto [i, j] : pairs) {
    VertexSet e{i, j};
    for (int k = 0; k < r - 2; ++k) e.insert(next++);
    es.push_back(e);
  }
  return Hypergraph(r, static_cast<int>(total), std::move(es));
}

/// Graph on the members of `keep`, relabeled 1..|keep| in increasing order.
inline Hypergraph induced_subgraph(const Hypergraph& g, VertexSet keep) {
  keep = keep & g.vertices();
  std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  int next = 0;
  keep.for_each([&](Vertex v) { relabel[static_cast<std::size_t>(v)] = ++next; });
  std::vector<VertexSet> es;
  for (VertexSet e : g.edges()) {
    if (!keep.contains(e)) continue;
    VertexSet m;
    e.for_each([&](Vertex v) { m.insert(relabel[static_cast<std::size_t>(v)]); });
    es.push_back(m);
  }
  return Hypergraph(g.uniformity(), next, std::move(es));
}

/// Drops isolated vertices and relabels the rest in order.
inline Hypergraph remove_isolated(const Hypergraph& g) { return induced_subgraph(g, g.vertices() - g.isolated_vertices()); }

/// Relabels vertex v as perm[v-1]; perm must be a permutation of 1..n.
inline Hypergraph permute(const Hypergraph& g, const std::vector<Vertex>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation length differs from n");
  VertexSet seen;
  for (Vertex v : perm) {
    if (v < 1 || v > n || seen.contains(v)) throw std::invalid_argument("not a permutation of 1..n");
    seen.insert(v);
  }
  std::vector<VertexSet> es;
  es.reserve(static_cast<std::size_t>(g.size()));
  for (VertexSet e : g.edges()) {
    std::uint64_t b = 0;
    e.for_each([&](Vertex v) { b |= std::uint64_t{1} << (perm[static_cast<std::size_t>(v - 1)] - 1); });
    es.emplace_back(b);
  }
  return Hypergraph(g.uniformity(), n, std::move(es));
}

/// Pairs {a<b} outside A with N(a,k) = {b} and N(b,k) = {a} for every k ∈ A.
/// An empty A yields no pairs.
inline std::vector<std::pair<Vertex, Vertex>> good_pairs(const Hypergraph& g, VertexSet a_set) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (a_set.empty()) return out;
  if (!g.vertices().contains(a_set)) throw std::out_of_range("A is not a subset of V(G)");
  const VertexSet outside = g.vertices() - a_set;
  auto only = [](const std::vector<VertexSet>& link, Vertex v) { return link.size() == 1 && link.front() == VertexSet{v}; };
  outside.for_each([&](Vertex a) {
    outside.for_each([&](Vertex b) {
      if (b <= a) return;
      bool good = true;
      a_set.for_each([&](Vertex k) {
        if (good && !(only(pair_link(g, a, k), b) && only(pair_link(g, b, k), a))) good = false;
      });
      if (good) out.emplace_back(a, b);
    });
  });
  return out;
}

/// Splits V(G) \ A into disjoint good pairs if possible (the structural half of
/// the good-graph definition). nullopt when |V(G) \ A| is odd, A is empty, or
/// no such split exists.
inline std::optional<std::vector<std::pair<Vertex, Vertex>>> good_pair_partition(const Hypergraph& g, VertexSet a_set) {
  const VertexSet outside = g.vertices() - a_set;
  if (a_set.empty() || outside.size() % 2 != 0) return std::nullopt;
  const auto pairs = good_pairs(g, a_set);
  std::vector<std::pair<Vertex, Vertex>> chosen;
  auto match = [&](auto&& self, VertexSet left) -> bool {
    if (left.empty()) return true;
    const Vertex v = left.min();
    for (auto [a, b] : pairs) {
      if (a != v || !left.contains(b)) continue;
      chosen.emplace_back(a, b);
      if (self(self, left.without(a).without(b))) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!match(match, outside)) return std::nullopt;
  return chosen;
}

}  // namespace hyperlag

#endif  // HYPERLAG_OPERATIONS_HPP
