#ifndef HYPERLAG_LAGRANGIAN_HPP
#define HYPERLAG_LAGRANGIAN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperlag/canonical.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/operations.hpp"
#include "hyperlag/parallel.hpp"
#include "hyperlag/polynomial.hpp"
#include "hyperlag/rational.hpp"
#include "hyperlag/rng.hpp"

namespace hyperlag {

/// A point of the standard simplex: non-negative weights summing to 1.
class WeightVector {
 public:
  WeightVector() = default;

  /// Throws std::invalid_argument unless every weight is in [0,1] and the sum is 1 within 1e-12.
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    double sum = 0;
    for (double v : w_) {
      if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("weight outside [0,1]");
      sum += v;
    }
    if (!w_.empty() && std::fabs(sum - 1.0) > 1e-12) throw std::invalid_argument("weights do not sum to 1");
  }

  static WeightVector uniform(int n) { return WeightVector(std::vector<double>(static_cast<std::size_t>(n), n > 0 ? 1.0 / n : 0.0)); }

  /// Clamps negatives to zero and rescales onto the simplex.
  static WeightVector normalized(std::vector<double> w) {
    double sum = 0;
    for (double& v : w) sum += (v = std::max(v, 0.0));
    if (sum <= 0) throw std::invalid_argument("cannot normalize a zero vector");
    for (double& v : w) v /= sum;
    return WeightVector(std::move(w));
  }

  std::span<const double> values() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  double max() const { return w_.empty() ? 0.0 : *std::max_element(w_.begin(), w_.end()); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> w_;
};

enum class Method { ascent, support_enum, motzkin_straus, closed_form };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::ascent: return "ascent";
    case Method::support_enum: return "support-enum";
    case Method::motzkin_straus: return "motzkin-straus";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

/// Reported optimum of λ(G) with the evidence behind it.
struct LagrangianCertificate {
  double value = 0;
  WeightVector weights;
  /// Vertices of positive weight; empty for an edgeless graph.
  std::vector<Vertex> support;
  /// max_{i∈S} |∂_iλ - rλ| + max_{i∉S} (∂_iλ - rλ)^+
  double kkt_residual = 0;
  Method method = Method::ascent;
  int starts_used = 0;
  std::uint64_t seed = 0;
  std::optional<Rational> exact;
  std::vector<Rational> exact_weights;
};

struct SolverOptions {
  /// Random multistarts; negative means 50·n.
  int starts = -1;
  std::uint64_t seed = 0;
  /// Per-support ascent for n at most this.
  int support_enum_max = 10;
  /// Stop the ascent once max_i x_i |∂_iλ - rλ| falls below this.
  double tol = 1e-12;
  int max_iters = 20000;
  bool use_motzkin_straus = true;
  std::int64_t rational_denominator_cap = 10000;
  const Executor* executor = nullptr;
};

// ---------------------------------------------------------------------------
// First-order conditions
// ---------------------------------------------------------------------------

inline std::vector<Vertex> support_of(std::span<const double> x) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) s.push_back(static_cast<Vertex>(i + 1));
  return s;
}

/// Stationarity residual at x (0 at a KKT point of max λ over the simplex).
inline double kkt_residual(const Hypergraph& g, std::span<const double> x) {
  if (g.size() == 0) return 0.0;
  const double target = g.uniformity() * evaluate(g, x);
  const auto grad = gradient(g, x);
  double inside = 0, outside = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) inside = std::max(inside, std::fabs(grad[i] - target));
    else outside = std::max(outside, grad[i] - target);
  }
  return inside + outside;
}

/// Euclidean projection onto the simplex (sort-based).
inline std::vector<double> project_to_simplex(std::vector<double> y) {
  if (y.empty()) return y;
  std::vector<double> u = y;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0, theta = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0) theta = t;
  }
  for (double& v : y) v = std::max(v - theta, 0.0);
  return y;
}

// ---------------------------------------------------------------------------
// Local ascent
// ---------------------------------------------------------------------------

struct AscentResult {
  WeightVector weights;
  double value = 0;
  bool converged = false;
  int iterations = 0;
};

/// Monotone ascent from x0 by the growth transform x_i <- x_i ∂_iλ / (rλ),
/// with projected-gradient steps while λ = 0. Stops when
/// max_i x_i |∂_iλ - rλ| <= tol or after max_iters; `trace`, when given,
/// receives λ at every iterate.
inline AscentResult local_ascend(const Hypergraph& g, const WeightVector& x0, double tol = 1e-12, int max_iters = 20000,
                                 std::vector<double>* trace = nullptr) {
  detail::require_dimension(g, x0.size());
  std::vector<double> x(x0.values().begin(), x0.values().end());
  const double r = g.uniformity();
  AscentResult out;
  double value = evaluate(g, x);
  if (trace) trace->push_back(value);

  int it = 0;
  for (; it < max_iters; ++it) {
    const auto grad = gradient(g, x);
    if (value <= 0) {
      if (std::all_of(grad.begin(), grad.end(), [](double d) { return d <= 0; })) {
        out.converged = true;  // flat: no edge can gain weight from here
        break;
      }
      // λ = 0: step along the gradient, which is non-zero only off the current support.
      std::vector<double> y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += grad[i];
      auto z = project_to_simplex(std::move(y));
      const double v = evaluate(g, z);
      if (v <= value) {
        // Spread onto every vertex with a positive partial derivative.
        std::vector<double> spread(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) spread[i] = grad[i] > 0 ? 1.0 : 0.0;
        const auto w = WeightVector::normalized(std::move(spread));
        z.assign(w.values().begin(), w.values().end());
      }
      x = std::move(z);
      value = evaluate(g, x);
      if (trace) trace->push_back(value);
      continue;
    }
    const double target = r * value;
    double measure = 0;
    for (std::size_t i = 0; i < x.size(); ++i) measure = std::max(measure, x[i] * std::fabs(grad[i] - target));
    if (measure <= tol) {
      out.converged = true;
      break;
    }
    double sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += (x[i] *= grad[i] / target);
    for (double& v : x) v /= sum;
    const double next = evaluate(g, x);
    value = next;
    if (trace) trace->push_back(value);
  }
  out.iterations = it;
  out.weights = WeightVector::normalized(std::move(x));
  out.value = evaluate(g, out.weights.values());
  return out;
}

namespace detail {

/// Active-set Newton refinement of a near-stationary point: drops vanishing
/// weights, then solves ∇_S λ = μ·1, Σ x_S = 1 on the support S.
inline std::vector<double> polish(const Hypergraph& g, std::vector<double> x) {
  const std::size_t n = x.size();
  if (g.size() == 0 || n == 0) return x;
  for (int round = 0; round < 6; ++round) {
    for (double& v : x)
      if (v < 1e-7) v = 0;
    double s = std::accumulate(x.begin(), x.end(), 0.0);
    if (s <= 0) return x;
    for (double& v : x) v /= s;

    std::vector<std::size_t> sup;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] > 0) sup.push_back(i);
    const auto m = static_cast<Eigen::Index>(sup.size());
    bool negative = false;
    for (int step = 0; step < 40; ++step) {
      const auto grad = gradient(g, x);
      const double mu = g.uniformity() * evaluate(g, x);
      Eigen::VectorXd f(m + 1);
      for (Eigen::Index k = 0; k < m; ++k) f(k) = grad[sup[static_cast<std::size_t>(k)]] - mu;
      double total = 0;
      for (auto i : sup) total += x[i];
      f(m) = total - 1.0;
      if (f.cwiseAbs().maxCoeff() < 1e-15) break;
      const Eigen::MatrixXd h = hessian(g, x);
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m + 1, m + 1);
      for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b)
          jac(a, b) = h(static_cast<Eigen::Index>(sup[static_cast<std::size_t>(a)]), static_cast<Eigen::Index>(sup[static_cast<std::size_t>(b)]));
        jac(a, m) = -1.0;
        jac(m, a) = 1.0;
      }
      const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(-f);
      if (!delta.allFinite()) return x;
      double moved = 0;
      for (Eigen::Index k = 0; k < m; ++k) {
        x[sup[static_cast<std::size_t>(k)]] += delta(k);
        moved = std::max(moved, std::fabs(delta(k)));
      }
      if (std::any_of(sup.begin(), sup.end(), [&](std::size_t i) { return x[i] < 0; })) {
        negative = true;
        break;
      }
      if (moved < 1e-17) break;
    }
    if (!negative) return x;
  }
  return x;
}

struct Candidate {
  double value = -1;
  std::vector<double> weights;
  Method method = Method::ascent;
};

/// Replaces c by its polished version when that is feasible, no worse, and
/// at least as stationary.
inline void adopt_polished(const Hypergraph& g, Candidate& c) {
  auto polished = polish(g, c.weights);
  if (!std::all_of(polished.begin(), polished.end(), [](double v) { return v >= 0; })) return;
  const double s = std::accumulate(polished.begin(), polished.end(), 0.0);
  if (s <= 0) return;
  for (double& v : polished) v /= s;
  const double pv = evaluate(g, polished);
  if (pv >= c.value - 1e-12 && kkt_residual(g, polished) <= kkt_residual(g, c.weights)) {
    c.value = pv;
    c.weights = std::move(polished);
  }
}

/// Ascent followed by polishing. A short ascent usually identifies the
/// support, after which Newton converges quadratically; only when the
/// polished point is not stationary does the ascent continue to full
/// tolerance (degenerate optima converge sublinearly under the growth map).
inline Candidate ascend_and_polish(const Hypergraph& g, const WeightVector& start, const SolverOptions& opt, Method method) {
  constexpr double kCoarse = 1e-9;
  constexpr int kCoarseIters = 2000;
  const auto coarse = local_ascend(g, start, std::max(opt.tol, kCoarse), std::min(opt.max_iters, kCoarseIters));
  Candidate c{coarse.value, std::vector<double>(coarse.weights.values().begin(), coarse.weights.values().end()), method};
  adopt_polished(g, c);
  if (kkt_residual(g, c.weights) <= 1e-11 || opt.max_iters <= coarse.iterations) return c;

  const auto fine = local_ascend(g, coarse.weights, opt.tol, opt.max_iters - coarse.iterations);
  Candidate f{fine.value, std::vector<double>(fine.weights.values().begin(), fine.weights.values().end()), method};
  adopt_polished(g, f);
  return f.value >= c.value - 1e-12 ? f : c;
}

/// Deterministic winner: largest value; among values within 1e-12 of it, the
/// lexicographically largest descending-sorted weight vector, then the
/// lexicographically largest weight vector, then the earliest index.
inline std::size_t select_best(const std::vector<Candidate>& cands) {
  double top = -1;
  for (const auto& c : cands) top = std::max(top, c.value);
  std::optional<std::size_t> best;
  std::vector<double> best_sorted;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].value < top - 1e-12) continue;
    std::vector<double> sorted = cands[i].weights;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (!best || sorted > best_sorted || (sorted == best_sorted && cands[i].weights > cands[*best].weights)) {
      best = i;
      best_sorted = std::move(sorted);
    }
  }
  return best.value_or(0);
}

inline bool induced_covers_pairs(const Hypergraph& g, VertexSet s) {
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexSet e : g.edges())
    if (s.contains(e)) e.for_each([&](Vertex v) { nbr[static_cast<std::size_t>(v - 1)] |= e.bits(); });
  bool ok = true;
  s.for_each([&](Vertex v) {
    const std::uint64_t want = s.without(v).bits();
    if ((nbr[static_cast<std::size_t>(v - 1)] & want) != want) ok = false;
  });
  return ok;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Symmetrization and the clique oracle
// ---------------------------------------------------------------------------

/// Averages the weights of every pair {i,j} with L(i\j) = L(j\i) = ∅. Such
/// pairs are exactly the twins (the transposition is an automorphism), so
/// each twin class receives its mean weight. λ does not decrease.
inline WeightVector symmetrize(const Hypergraph& g, const WeightVector& x) {
  detail::require_dimension(g, x.size());
  const auto twins = detail::twin_classes(g);
  const std::size_t n = x.size();
  std::vector<double> sum(n, 0.0);
  std::vector<int> count(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    sum[static_cast<std::size_t>(twins[v])] += x[v];
    ++count[static_cast<std::size_t>(twins[v])];
  }
  std::vector<double> y(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = static_cast<std::size_t>(twins[v]);
    y[v] = sum[c] / count[c];
  }
  return WeightVector::normalized(std::move(y));
}

/// A maximum clique of a 2-graph by branch and bound with a greedy-coloring bound.
inline VertexSet max_clique(const Hypergraph& g) {
  if (g.uniformity() != 2) throw std::invalid_argument("max_clique needs a 2-graph");
  const int n = g.vertex_count();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (VertexSet e : g.edges()) {
    const auto v = e.to_vector();
    adj[static_cast<std::size_t>(v[0] - 1)] |= std::uint64_t{1} << (v[1] - 1);
    adj[static_cast<std::size_t>(v[1] - 1)] |= std::uint64_t{1} << (v[0] - 1);
  }
  std::uint64_t best = 0;
  int best_size = 0;

  auto expand = [&](auto&& self, std::uint64_t clique, int size, std::uint64_t cand) -> void {
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best = clique;
      }
      return;
    }
    // Greedy coloring of the candidates; colors bound the extension size.
    std::vector<std::pair<int, int>> order;  // (vertex, color)
    std::uint64_t uncolored = cand;
    int color = 0;
    while (uncolored != 0) {
      ++color;
      std::uint64_t avail = uncolored;
      while (avail != 0) {
        const int v = std::countr_zero(avail);
        avail &= ~(std::uint64_t{1} << v);
        avail &= ~adj[static_cast<std::size_t>(v)];
        uncolored &= ~(std::uint64_t{1} << v);
        order.emplace_back(v, color);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (size + it->second <= best_size) return;
      const int v = it->first;
      self(self, clique | (std::uint64_t{1} << v), size + 1, cand & adj[static_cast<std::size_t>(v)]);
      cand &= ~(std::uint64_t{1} << v);
    }
  };
  expand(expand, 0, 0, VertexSet::range(n).bits());
  return VertexSet(best);
}

inline int clique_number(const Hypergraph& g) { return max_clique(g).size(); }

/// Exact λ of a 2-graph: (1/2)(1 - 1/ω).
inline Rational motzkin_straus(const Hypergraph& g) {
  if (g.uniformity() != 2) throw std::invalid_argument("motzkin_straus needs a 2-graph");
  const int omega = clique_number(g);
  if (omega == 0) return Rational(0);
  return make_rational(omega - 1, 2LL * omega);
}

// ---------------------------------------------------------------------------
// Global maximization
// ---------------------------------------------------------------------------

namespace detail {

inline void attach_exact(const Hypergraph& g, LagrangianCertificate& cert, std::int64_t cap) {
  if (cert.exact) return;
  std::vector<Rational> w;
  w.reserve(cert.weights.size());
  Rational sum = 0;
  for (double v : cert.weights.values()) {
    w.push_back(approximate(v, cap));
    sum += w.back();
  }
  if (sum != 1) return;
  const Rational value = exact_eval(g, w);
  if (std::fabs(to_double(value) - cert.value) <= 1e-9) {
    cert.exact = value;
    cert.exact_weights = std::move(w);
  }
}

inline LagrangianCertificate certify(const Hypergraph& g, std::vector<double> weights, Method method, const SolverOptions& opt, int starts) {
  LagrangianCertificate cert;
  cert.weights = WeightVector::normalized(std::move(weights));
  cert.value = evaluate(g, cert.weights.values());
  cert.support = support_of(cert.weights.values());
  cert.kkt_residual = kkt_residual(g, cert.weights.values());
  cert.method = method;
  cert.starts_used = starts;
  cert.seed = opt.seed;
  attach_exact(g, cert, opt.rational_denominator_cap);
  return cert;
}

}  // namespace detail

/// λ(G) with a certificate: the best of seeded multistart ascent (half the
/// starts tied within automorphism orbits), per-support ascent over every
/// support whose induced graph covers pairs (n <= support_enum_max), and the
/// exact clique formula for 2-graphs. Deterministic for a fixed seed.
inline LagrangianCertificate lagrangian(const Hypergraph& g, const SolverOptions& opt = {}) {
  const int n = g.vertex_count();
  const int r = g.uniformity();
  const Executor serial;
  const Executor& exec = opt.executor ? *opt.executor : serial;

  if (n == 0 || g.size() == 0) {
    LagrangianCertificate cert;
    cert.weights = WeightVector::uniform(n);
    cert.method = Method::closed_form;
    cert.seed = opt.seed;
    cert.exact = Rational(0);
    for (int i = 0; i < n; ++i) cert.exact_weights.push_back(make_rational(1, n));
    return cert;
  }
  if (r < 1) throw std::invalid_argument("lagrangian needs uniformity at least 1");

  const int starts = opt.starts < 0 ? 50 * n : opt.starts;
  std::vector<std::vector<Vertex>> orbits;
  if (n <= 16) orbits = automorphism_orbits(g);
  else
    for (Vertex v = 1; v <= n; ++v) orbits.push_back({v});

  std::vector<VertexSet> supports;
  if (n <= opt.support_enum_max) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < total; ++bits) {
      const VertexSet s(bits);
      if (s.size() < r) continue;
      if (detail::induced_covers_pairs(g, s)) supports.push_back(s);
    }
  }

  const std::size_t jobs = static_cast<std::size_t>(starts) + supports.size();
  auto cands = exec.map<detail::Candidate>(jobs, [&](std::size_t k) {
    std::vector<double> x0(static_cast<std::size_t>(n), 0.0);
    Method method = Method::ascent;
    if (k < static_cast<std::size_t>(starts)) {
      auto rng = SplitMix64::stream(opt.seed, k);
      if (k % 2 == 0) {
        const auto w = rng.dirichlet(orbits.size());
        for (std::size_t o = 0; o < orbits.size(); ++o)
          for (Vertex v : orbits[o]) x0[static_cast<std::size_t>(v - 1)] = w[o] / static_cast<double>(orbits[o].size());
      } else {
        x0 = rng.dirichlet(static_cast<std::size_t>(n));
      }
    } else {
      const VertexSet s = supports[k - static_cast<std::size_t>(starts)];
      s.for_each([&](Vertex v) { x0[static_cast<std::size_t>(v - 1)] = 1.0 / s.size(); });
      method = Method::support_enum;
    }
    return detail::ascend_and_polish(g, WeightVector::normalized(std::move(x0)), opt, method);
  });

  if (r == 2 && opt.use_motzkin_straus) {
    const VertexSet clique = max_clique(g);
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    clique.for_each([&](Vertex v) { w[static_cast<std::size_t>(v - 1)] = 1.0 / clique.size(); });
    cands.push_back({evaluate(g, w), std::move(w), Method::motzkin_straus});
  }

  const std::size_t win = detail::select_best(cands);
  detail::Candidate best = cands[win];

  // A winner violating the outside-support condition is re-ascended with the
  // offending vertices switched on.
  for (int round = 0; round < 4 && kkt_residual(g, best.weights) > 1e-9; ++round) {
    const auto grad = gradient(g, best.weights);
    const double target = r * best.value;
    std::vector<double> x = best.weights;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] == 0 && grad[i] > target) x[i] = 1e-3;
    auto next = detail::ascend_and_polish(g, WeightVector::normalized(std::move(x)), opt, best.method);
    if (next.value < best.value - 1e-12) break;
    best = std::move(next);
  }

  auto cert = detail::certify(g, std::move(best.weights), best.method, opt, starts);
  if (cert.method == Method::motzkin_straus) {
    cert.exact = motzkin_straus(g);
    cert.exact_weights.clear();
    for (double v : cert.weights.values()) cert.exact_weights.push_back(v > 0 ? make_rational(1, static_cast<long long>(cert.support.size())) : Rational(0));
  }
  return cert;
}

}  // namespace hyperlag

#endif  // HYPERLAG_LAGRANGIAN_HPP
