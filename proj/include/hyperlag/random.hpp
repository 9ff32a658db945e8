#ifndef HYPERLAG_RANDOM_HPP
#define HYPERLAG_RANDOM_HPP

#include <vector>

#include "hyperlag/constructions.hpp"
#include "hyperlag/rng.hpp"

namespace hyperlag {

/// Binomial random r-graph: each r-subset of [n] is an edge with probability p.
inline Hypergraph random_hypergraph(int n, int r, double p, SplitMix64& rng) {
  std::vector<VertexSet> edges;
  for (VertexSet e : detail::k_subsets(n, r))
    if (rng.bernoulli(p)) edges.push_back(e);
  return Hypergraph(r, n, std::move(edges));
}

/// Uniformly random permutation of 1..n (Fisher–Yates).
inline std::vector<Vertex> random_permutation(int n, SplitMix64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return perm;
}

}  // namespace hyperlag

#endif  // HYPERLAG_RANDOM_HPP
