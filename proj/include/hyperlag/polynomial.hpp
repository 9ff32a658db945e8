#ifndef HYPERLAG_POLYNOMIAL_HPP
#define HYPERLAG_POLYNOMIAL_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

namespace detail {

inline void require_dimension(const Hypergraph& g, std::size_t size) {
  if (size != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("weight vector length " + std::to_string(size) + " differs from n = " +
                                std::to_string(g.vertex_count()));
}

/// Pairwise (cascade) summation of v[lo, hi).
inline double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double product(VertexSet e, std::span<const double> x) {
  double p = 1;
  e.for_each([&](Vertex v) { p *= x[static_cast<std::size_t>(v - 1)]; });
  return p;
}

}  // namespace detail

/// λ(G, x) = Σ_e Π_{i∈e} x_i, summed over the sorted edge list pairwise.
/// x need not lie on the simplex.
inline double evaluate(const Hypergraph& g, std::span<const double> x) {
  detail::require_dimension(g, x.size());
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(g.size()));
  for (VertexSet e : g.edges()) terms.push_back(detail::product(e, x));
  return detail::pairwise_sum(terms, 0, terms.size());
}

/// ∂λ/∂x_i: the link of i evaluated at x.
inline std::vector<double> gradient(const Hypergraph& g, std::span<const double> x) {
  detail::require_dimension(g, x.size());
  std::vector<double> grad(x.size(), 0.0);
  for (VertexSet e : g.edges())
    e.for_each([&](Vertex v) { grad[static_cast<std::size_t>(v - 1)] += detail::product(e.without(v), x); });
  return grad;
}

/// ∂²λ/∂x_i∂x_j (zero diagonal).
inline Eigen::MatrixXd hessian(const Hypergraph& g, std::span<const double> x) {
  detail::require_dimension(g, x.size());
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (VertexSet e : g.edges())
    e.for_each([&](Vertex i) {
      e.for_each([&](Vertex j) {
        if (j <= i) return;
        const double p = detail::product(e.without(i).without(j), x);
        h(i - 1, j - 1) += p;
        h(j - 1, i - 1) += p;
      });
    });
  return h;
}

/// The polynomial in exact arithmetic at arbitrary (not necessarily feasible) rational x.
inline Rational exact_polynomial(const Hypergraph& g, std::span<const Rational> x) {
  detail::require_dimension(g, x.size());
  Rational total = 0;
  for (VertexSet e : g.edges()) {
    Rational p = 1;
    e.for_each([&](Vertex v) { p *= x[static_cast<std::size_t>(v - 1)]; });
    total += p;
  }
  return total;
}

/// Exact λ(G, x) for a rational weighting; the weights must sum to exactly 1
/// and be non-negative.
inline Rational exact_eval(const Hypergraph& g, std::span<const Rational> x) {
  detail::require_dimension(g, x.size());
  Rational sum = 0;
  for (const auto& w : x) {
    if (w < 0) throw std::invalid_argument("negative weight");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("weights sum to " + to_string(sum) + ", not 1");
  return exact_polynomial(g, x);
}

}  // namespace hyperlag

#endif  // HYPERLAG_POLYNOMIAL_HPP
