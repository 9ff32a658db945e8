#ifndef HYPERLAG_TESTS_SUPPORT_HPP
#define HYPERLAG_TESTS_SUPPORT_HPP

// Brute-force oracles. None of these share code with the algorithms they
// check beyond the Hypergraph container itself.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <hyperlag/hyperlag.hpp>

namespace hyperlag::testing {

inline Hypergraph graph(int r, int n, std::vector<std::vector<int>> edges) { return Hypergraph(r, n, edges); }

/// Seeded binomial random graph with n, r drawn from the given ranges.
inline Hypergraph random_graph(std::uint64_t index, int n_lo, int n_hi, int r_lo, int r_hi, std::uint64_t seed = 7) {
  auto rng = SplitMix64::stream(seed, index);
  const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
  const int r = r_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(r_hi - r_lo + 1)));
  return random_hypergraph(n, r, 0.2 + 0.6 * rng.uniform(), rng);
}

inline std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

/// Edge list as sorted vectors after applying perm (vertex v -> perm[v-1]).
inline std::vector<std::vector<int>> image(const Hypergraph& g, const std::vector<int>& perm) {
  std::vector<std::vector<int>> es;
  for (const auto& e : g.edge_lists()) {
    std::vector<int> f;
    for (int v : e) f.push_back(perm[static_cast<std::size_t>(v - 1)]);
    std::sort(f.begin(), f.end());
    es.push_back(f);
  }
  std::sort(es.begin(), es.end());
  return es;
}

/// Lexicographically least embedding (as a map vector) by trying every
/// injection in lexicographic order.
inline std::optional<std::vector<int>> brute_embedding(const Hypergraph& host, const Hypergraph& pattern) {
  const int p = pattern.vertex_count(), h = host.vertex_count();
  if (p > h) return std::nullopt;
  std::set<std::vector<int>> host_edges;
  for (const auto& e : host.edge_lists()) host_edges.insert(e);
  std::vector<int> map(static_cast<std::size_t>(p), 0);
  std::vector<bool> used(static_cast<std::size_t>(h) + 1, false);
  std::optional<std::vector<int>> found;
  auto ok = [&]() {
    for (const auto& e : pattern.edge_lists()) {
      std::vector<int> f;
      for (int v : e) f.push_back(map[static_cast<std::size_t>(v - 1)]);
      std::sort(f.begin(), f.end());
      if (!host_edges.count(f)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == p) {
      if (ok()) found = map;
      return found.has_value();
    }
    for (int v = 1; v <= h; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      map[static_cast<std::size_t>(i)] = v;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

/// Orbits of the automorphism group by trying all n! permutations.
inline std::vector<std::vector<int>> brute_orbits(const Hypergraph& g) {
  const int n = g.vertex_count();
  const auto base = image(g, identity_perm(n));
  std::vector<int> parent = identity_perm(n);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v - 1)] != v) v = parent[static_cast<std::size_t>(v - 1)];
    return v;
  };
  auto perm = identity_perm(n);
  do {
    if (image(g, perm) != base) continue;
    for (int v = 1; v <= n; ++v) {
      const int a = find(v), b = find(perm[static_cast<std::size_t>(v - 1)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b) - 1)] = std::min(a, b);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<int, std::vector<int>> cls;
  for (int v = 1; v <= n; ++v) cls[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [k, vs] : cls) out.push_back(vs);
  return out;
}

/// Isomorphism key: the least relabelled edge list over all permutations.
inline std::vector<std::vector<int>> brute_key(const Hypergraph& g) {
  auto perm = identity_perm(g.vertex_count());
  auto best = image(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, image(g, perm));
  return best;
}

inline bool brute_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  return a.uniformity() == b.uniformity() && a.vertex_count() == b.vertex_count() && a.size() == b.size() && brute_key(a) == brute_key(b);
}

/// Number of isomorphism classes of r-graphs on n vertices, from all 2^C(n,r)
/// edge sets.
inline std::size_t brute_class_count(int n, int r) {
  const auto all = detail::k_subsets(n, r);
  std::set<std::vector<std::vector<int>>> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<VertexSet> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((mask >> i) & 1U) es.push_back(all[i]);
    keys.insert(brute_key(Hypergraph(r, n, es)));
  }
  return keys.size();
}

/// Clique number of a 2-graph by subset enumeration.
inline int brute_clique_number(const Hypergraph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s(mask);
    if (s.size() <= best) continue;
    bool clique = true;
    s.for_each([&](Vertex a) {
      s.for_each([&](Vertex b) {
        if (a < b && !g.has_edge(VertexSet{a, b})) clique = false;
      });
    });
    if (clique) best = s.size();
  }
  return best;
}

/// Max of λ(G, x) over the simplex grid with spacing 1/steps (n <= 5).
inline double grid_lagrangian(const Hypergraph& g, int steps) {
  const int n = g.vertex_count();
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  double best = 0;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      x[static_cast<std::size_t>(i)] = static_cast<double>(left) / steps;
      best = std::max(best, evaluate(g, x));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      x[static_cast<std::size_t>(i)] = static_cast<double>(k) / steps;
      self(self, i + 1, left - k);
    }
  };
  if (n > 0) rec(rec, 0, steps);
  return best;
}

}  // namespace hyperlag::testing

#endif  // HYPERLAG_TESTS_SUPPORT_HPP
