#ifndef HYPERLAG_DENSITY_HPP
#define HYPERLAG_DENSITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlag/lagrangian.hpp"
#include "hyperlag/operations.hpp"

namespace hyperlag {

struct DensityOptions {
  SolverOptions solver;
  /// λ(G - e) must fall below λ(G) by more than this.
  double gap = 1e-7;
};

struct DenseVerdict {
  bool dense = false;
  double lambda = 0;
  /// A proper subgraph whose λ is not smaller (present when not dense).
  std::optional<Hypergraph> witness;
  double witness_lambda = 0;
  /// Both λ values have exact witnesses and they coincide.
  bool exact_confirmed = false;
  std::string reason;
};

/// Dense: every proper subgraph has strictly smaller λ. Every proper subgraph
/// lies in some G - e or misses a vertex, and by monotonicity it suffices to
/// test single-edge deletions plus isolated vertices.
inline DenseVerdict is_dense(const Hypergraph& g, const DensityOptions& opt = {}) {
  DenseVerdict out;
  if (g.vertex_count() == 0) {
    out.dense = true;
    out.reason = "no proper subgraph";
    return out;
  }
  if (g.size() == 0) {
    out.witness = Hypergraph::empty(g.uniformity(), g.vertex_count() - 1);
    out.exact_confirmed = true;
    out.reason = "edgeless: deleting a vertex keeps lambda = 0";
    return out;
  }
  const auto whole = lagrangian(g, opt.solver);
  out.lambda = whole.value;
  if (g.vertex_count() >= 2 && !g.isolated_vertices().empty()) {
    out.witness = remove_isolated(g);
    out.witness_lambda = whole.value;
    out.exact_confirmed = true;
    out.reason = "isolated vertex " + std::to_string(g.isolated_vertices().min());
    return out;
  }
  for (VertexSet e : g.edges()) {
    const Hypergraph sub = g.without_edge(e);
    const auto part = lagrangian(sub, opt.solver);
    if (part.value >= whole.value - opt.gap) {
      out.witness = sub;
      out.witness_lambda = part.value;
      out.exact_confirmed = whole.exact && part.exact && *whole.exact == *part.exact;
      std::string edge;
      for (Vertex v : e.to_vector()) edge += std::to_string(v);
      out.reason = "deleting edge " + edge + " keeps lambda";
      return out;
    }
  }
  out.dense = true;
  out.reason = "every single-edge deletion lowers lambda";
  return out;
}

/// A dense subgraph with the same λ (within the gap), by repeatedly deleting
/// an edge or isolated vertex whose removal keeps λ. Remaining vertices are
/// relabeled in order.
inline Hypergraph dense_reduction(const Hypergraph& g, const DensityOptions& opt = {}) {
  if (g.size() == 0) return Hypergraph::empty(g.uniformity(), 0);
  const double reference = lagrangian(g, opt.solver).value;
  Hypergraph cur = remove_isolated(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexSet e : cur.edges()) {
      const Hypergraph sub = cur.without_edge(e);
      if (lagrangian(sub, opt.solver).value >= reference - opt.gap) {
        cur = remove_isolated(sub);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

/// Dense, and V(G) \ A splits into good pairs to A. An odd |V(G) \ A| or an
/// empty A is reported as not good.
inline bool is_good_graph(const Hypergraph& g, VertexSet a_set, const DensityOptions& opt = {}) {
  if (!good_pair_partition(g, a_set)) return false;
  return is_dense(g, opt).dense;
}

}  // namespace hyperlag

#endif  // HYPERLAG_DENSITY_HPP
