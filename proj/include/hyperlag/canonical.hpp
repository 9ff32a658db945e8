#ifndef HYPERLAG_CANONICAL_HPP
#define HYPERLAG_CANONICAL_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/operations.hpp"

namespace hyperlag {

/// A canonical relabeling: perm[v-1] is the canonical label of vertex v and
/// form = permute(g, perm).
struct CanonicalLabeling {
  std::vector<Vertex> perm;
  Hypergraph form;
};

namespace detail {

/// Ordered vertex coloring; colors are dense in 0..k-1 and cell order matters.
using Coloring = std::vector<int>;

inline int color_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

/// Iterated incidence refinement to an equitable coloring. A vertex's
/// signature is its color followed by the sorted color tuples of its link;
/// cells split by signature and are ordered by signature, so the result is
/// independent of the input labeling.
inline void refine(const Hypergraph& g, Coloring& colors) {
  const int n = g.vertex_count();
  if (n == 0) return;
  using Signature = std::pair<int, std::vector<std::vector<int>>>;
  int cells = color_count(colors);
  while (true) {
    std::vector<Signature> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) sig[static_cast<std::size_t>(v)].first = colors[static_cast<std::size_t>(v)];
    for (VertexSet e : g.edges()) {
      e.for_each([&](Vertex v) {
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(e.size()));
        e.for_each([&](Vertex u) {
          if (u != v) tuple.push_back(colors[static_cast<std::size_t>(u - 1)]);
        });
        std::sort(tuple.begin(), tuple.end());
        sig[static_cast<std::size_t>(v - 1)].second.push_back(std::move(tuple));
      });
    }
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    Coloring next(static_cast<std::size_t>(n));
    int rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++rank;
      next[static_cast<std::size_t>(order[i])] = rank;
    }
    colors = std::move(next);
    if (rank + 1 == cells) return;
    cells = rank + 1;
  }
}

/// Gives v its own cell placed just before the rest of its old cell.
inline Coloring individualize(const Coloring& colors, int v) {
  Coloring out = colors;
  const int c = colors[static_cast<std::size_t>(v)];
  for (std::size_t u = 0; u < out.size(); ++u)
    if (static_cast<int>(u) != v && out[u] >= c) ++out[u];
  return out;
}

/// twin[v] = smallest u such that the transposition (u v) is an automorphism.
inline std::vector<int> twin_classes(const Hypergraph& g) {
  const int n = g.vertex_count();
  std::vector<int> rep(static_cast<std::size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  for (int u = 1; u <= n; ++u) {
    if (rep[static_cast<std::size_t>(u - 1)] != u - 1) continue;
    for (int v = u + 1; v <= n; ++v) {
      if (rep[static_cast<std::size_t>(v - 1)] != v - 1) continue;
      if (l_diff(g, u, v).empty() && l_diff(g, v, u).empty()) rep[static_cast<std::size_t>(v - 1)] = u - 1;
    }
  }
  return rep;
}

inline std::vector<VertexSet> relabel_edges(const Hypergraph& g, const Coloring& discrete) {
  std::vector<VertexSet> es;
  es.reserve(static_cast<std::size_t>(g.size()));
  for (VertexSet e : g.edges()) {
    std::uint64_t b = 0;
    e.for_each([&](Vertex v) { b |= std::uint64_t{1} << discrete[static_cast<std::size_t>(v - 1)]; });
    es.emplace_back(b);
  }
  std::sort(es.begin(), es.end(), LexLess{});
  return es;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace detail

/// Canonical labeling by refinement and individualization: branch on the
/// smallest non-singleton cell and keep the lexicographically least relabeled
/// edge sequence over all leaves. Twin vertices and root-level automorphism
/// orbits are explored once. `initial` (optional) is an ordered coloring the
/// labeling must respect.
inline CanonicalLabeling canonical_labeling(const Hypergraph& g, detail::Coloring initial = {}) {
  const int n = g.vertex_count();
  if (initial.empty()) initial.assign(static_cast<std::size_t>(n), 0);
  const std::vector<int> twins = detail::twin_classes(g);
  detail::UnionFind root_orbits(n);

  std::optional<std::vector<VertexSet>> best;
  detail::Coloring best_leaf;

  auto search = [&](auto&& self, detail::Coloring colors, int depth) -> void {
    detail::refine(g, colors);
    const int cells = detail::color_count(colors);
    if (cells == n) {
      auto es = detail::relabel_edges(g, colors);
      if (!best || std::lexicographical_compare(es.begin(), es.end(), best->begin(), best->end(), LexLess{})) {
        best = std::move(es);
        best_leaf = colors;
      } else if (es == *best) {
        // colors^-1 o best_leaf is an automorphism.
        std::vector<int> at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(best_leaf[static_cast<std::size_t>(v)])] = v;
        for (int v = 0; v < n; ++v) root_orbits.unite(v, at[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])]);
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < cells; ++c)
      if (size[static_cast<std::size_t>(c)] > 1 && (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) target = c;

    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      const int tw = twins[static_cast<std::size_t>(v)];
      bool skip = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins[static_cast<std::size_t>(u)] == tw; });
      if (!skip && depth == 0)
        skip = std::any_of(tried.begin(), tried.end(), [&](int u) { return root_orbits.find(u) == root_orbits.find(v); });
      if (skip) continue;
      tried.push_back(v);
      self(self, detail::individualize(colors, v), depth + 1);
    }
  };
  search(search, initial, 0);

  CanonicalLabeling out;
  out.perm.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.perm[static_cast<std::size_t>(v)] = best_leaf.empty() ? v + 1 : best_leaf[static_cast<std::size_t>(v)] + 1;
  out.form = Hypergraph(g.uniformity(), n, best ? std::move(*best) : std::vector<VertexSet>{});
  return out;
}

/// Isomorphic inputs give identical outputs.
inline Hypergraph canonical_form(const Hypergraph& g) { return canonical_labeling(g).form; }

inline bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Vertex orbits of Aut(G), each sorted, ordered by smallest member. Two
/// vertices share an orbit iff marking either one yields the same canonical
/// labeled graph.
inline std::vector<std::vector<Vertex>> automorphism_orbits(const Hypergraph& g) {
  const int n = g.vertex_count();
  detail::Coloring refined(static_cast<std::size_t>(n), 0);
  detail::refine(g, refined);
  const std::vector<int> twins = detail::twin_classes(g);

  std::vector<std::optional<std::vector<VertexSet>>> marked(static_cast<std::size_t>(n));
  auto marked_form = [&](int v) -> const std::vector<VertexSet>& {
    auto& slot = marked[static_cast<std::size_t>(v)];
    if (!slot) {
      detail::Coloring c(static_cast<std::size_t>(n), 1);
      c[static_cast<std::size_t>(v)] = 0;
      const auto lab = canonical_labeling(g, c);
      slot = std::vector<VertexSet>(lab.form.edges().begin(), lab.form.edges().end());
    }
    return *slot;
  };

  detail::UnionFind uf(n);
  for (int v = 0; v < n; ++v) uf.unite(v, twins[static_cast<std::size_t>(v)]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (refined[static_cast<std::size_t>(u)] != refined[static_cast<std::size_t>(v)] || uf.find(u) == uf.find(v)) continue;
      if (marked_form(u) == marked_form(v)) uf.unite(u, v);
    }

  std::vector<std::vector<Vertex>> orbits;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    if (index[static_cast<std::size_t>(root)] < 0) {
      index[static_cast<std::size_t>(root)] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(index[static_cast<std::size_t>(root)])].push_back(v + 1);
  }
  return orbits;
}

}  // namespace hyperlag

#endif  // HYPERLAG_CANONICAL_HPP
