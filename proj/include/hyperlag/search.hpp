#ifndef HYPERLAG_SEARCH_HPP
#define HYPERLAG_SEARCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlag/canonical.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/operations.hpp"
#include "hyperlag/parallel.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

inline constexpr const char* kSearchSchema = "hyperlag.search/1";

/// Raised when an enumeration exceeds the desk-scale guard without `force`.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  /// Allow edge spaces larger than kGuardedEdgeSpace.
  bool force = false;
  const Executor* executor = nullptr;
};

/// Largest C(n,r) enumerated without `force` (n = 6 for r = 3).
inline constexpr int kGuardedEdgeSpace = 20;

namespace detail {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

inline void check_guard(int n, int r, bool force) {
  if (r < 1) throw std::invalid_argument("enumeration needs r >= 1");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("enumeration needs 0 <= n <= 64");
  const long long space = binomial(n, r);
  if (space > 62) throw SizeGuardError("edge space C(" + std::to_string(n) + "," + std::to_string(r) + ") is beyond reach");
  if (space > kGuardedEdgeSpace && !force)
    throw SizeGuardError("edge space C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(space) +
                         " exceeds the desk-scale guard; pass --force to run anyway");
}

/// Canonical representatives level by level (by edge count): every canonical
/// graph with m edges is extended by each absent edge, the child is
/// canonicalized, and each class is kept once. `keep` prunes children (and
/// hence their whole subtree); it must be inherited by subgraphs.
inline std::vector<Hypergraph> enumerate_classes(int n, int r, const EnumerateOptions& opt,
                                                 const std::function<bool(const Hypergraph&)>& keep) {
  check_guard(n, r, opt.force);
  const Executor serial;
  const Executor& exec = opt.executor ? *opt.executor : serial;
  const auto all_edges = k_subsets(n, r);

  std::vector<Hypergraph> out;
  std::vector<Hypergraph> level{Hypergraph::empty(r, n)};
  if (!keep(level.front())) return out;
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    auto children = exec.map<std::vector<Hypergraph>>(level.size(), [&](std::size_t i) {
      std::vector<Hypergraph> kids;
      const Hypergraph& parent = level[i];
      for (VertexSet e : all_edges) {
        if (parent.has_edge(e)) continue;
        Hypergraph child = parent.with_edge(e);
        if (!keep(child)) continue;
        kids.push_back(canonical_form(child));
      }
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      return kids;
    });
    std::vector<Hypergraph> next;
    for (auto& kids : children) next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace detail

/// One canonical representative per isomorphism class of r-graphs on n
/// vertices, ordered by edge count and then edge sequence.
inline std::vector<Hypergraph> enumerate(int n, int r, const EnumerateOptions& opt = {}) {
  return detail::enumerate_classes(n, r, opt, [](const Hypergraph&) { return true; });
}

/// Canonical representatives of every family-free r-graph on n vertices.
/// Branches that already contain a forbidden member are pruned.
inline std::vector<Hypergraph> enumerate_free(int n, int r, const ForbiddenFamily& family, const EnumerateOptions& opt = {}) {
  if (auto fr = family.uniformity(); fr && *fr != r) throw std::invalid_argument("family uniformity differs from r");
  return detail::enumerate_classes(n, r, opt, [&](const Hypergraph& g) { return is_free(g, family); });
}

/// True iff g is free and adding any absent edge creates a forbidden member.
inline bool is_maximal_free(const Hypergraph& g, const ForbiddenFamily& family) {
  if (!is_free(g, family)) return false;
  for (VertexSet e : detail::k_subsets(g.vertex_count(), g.uniformity())) {
    if (g.has_edge(e)) continue;
    if (is_free(g.with_edge(e), family)) return false;
  }
  return true;
}

/// Maximal family-free graphs among the free classes.
inline std::vector<Hypergraph> maximal_free(int n, int r, const ForbiddenFamily& family, const EnumerateOptions& opt = {}) {
  const auto free_graphs = enumerate_free(n, r, family, opt);
  const Executor serial;
  const Executor& exec = opt.executor ? *opt.executor : serial;
  const auto flags = exec.map<char>(free_graphs.size(), [&](std::size_t i) { return static_cast<char>(is_maximal_free(free_graphs[i], family)); });
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < free_graphs.size(); ++i)
    if (flags[i]) out.push_back(free_graphs[i]);
  return out;
}

/// ex(n, F): most edges in a family-free r-graph on n vertices.
inline int turan_number(int n, int r, const ForbiddenFamily& family, const EnumerateOptions& opt = {}) {
  int best = 0;
  for (const auto& g : maximal_free(n, r, family, opt)) best = std::max(best, g.size());
  return best;
}

// ---------------------------------------------------------------------------
// Maximum Lagrangian over free graphs
// ---------------------------------------------------------------------------

struct Achiever {
  Hypergraph graph;
  double lambda = 0;
  std::optional<Rational> exact;
};

struct BoundCheck {
  Rational bound;
  bool pass = false;
};

struct SearchReport {
  int n = 0;
  int r = 0;
  std::string family;
  /// Free classes visited.
  std::size_t graphs_enumerated = 0;
  std::size_t maximal_free_count = 0;
  double max_lambda = 0;
  std::optional<Rational> max_exact;
  std::vector<Achiever> achievers;
  /// Maximal-free graphs whose λ is below the achiever threshold.
  std::size_t non_achievers = 0;
  std::optional<BoundCheck> bound;
  std::optional<int> turan_number;
  double wall_seconds = 0;
  std::uint64_t seed = 0;

  double r_factorial_lambda() const {
    double f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    return f * max_lambda;
  }
};

struct SearchOptions {
  SolverOptions solver{.starts = 12};
  EnumerateOptions enumeration;
  std::optional<Rational> bound;
  bool turan = false;
  /// Achievers are maximal-free graphs within this of the maximum.
  double achiever_tolerance = 1e-7;
};

/// Runs the solver on every maximal family-free graph (only maximal ones can
/// maximize λ, by monotonicity) and reports the maximum and its achievers.
inline SearchReport max_lagrangian(int n, int r, const ForbiddenFamily& family, const SearchOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Executor serial;
  const Executor& exec = opt.enumeration.executor ? *opt.enumeration.executor : serial;

  SearchReport rep;
  rep.n = n;
  rep.r = r;
  rep.family = family.name();
  rep.seed = opt.solver.seed;

  const auto free_graphs = enumerate_free(n, r, family, opt.enumeration);
  rep.graphs_enumerated = free_graphs.size();
  const auto flags = exec.map<char>(free_graphs.size(), [&](std::size_t i) { return static_cast<char>(is_maximal_free(free_graphs[i], family)); });
  std::vector<Hypergraph> maximal;
  for (std::size_t i = 0; i < free_graphs.size(); ++i)
    if (flags[i]) maximal.push_back(free_graphs[i]);
  rep.maximal_free_count = maximal.size();
  if (opt.turan) {
    int best = 0;
    for (const auto& g : maximal) best = std::max(best, g.size());
    rep.turan_number = best;
  }

  SolverOptions inner = opt.solver;
  inner.executor = nullptr;
  inner.support_enum_max = std::max(inner.support_enum_max, n);
  const auto certs = exec.map<LagrangianCertificate>(maximal.size(), [&](std::size_t i) { return lagrangian(maximal[i], inner); });

  for (const auto& c : certs) rep.max_lambda = std::max(rep.max_lambda, c.value);
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if (certs[i].value >= rep.max_lambda - opt.achiever_tolerance) rep.achievers.push_back({maximal[i], certs[i].value, certs[i].exact});
    else ++rep.non_achievers;
  }
  for (const auto& a : rep.achievers)
    if (a.lambda == rep.max_lambda && a.exact) rep.max_exact = a.exact;
  if (opt.bound) rep.bound = BoundCheck{*opt.bound, rep.max_lambda <= to_double(*opt.bound) + 1e-9};

  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// True iff every achiever contains the pattern.
inline bool verify_extremal_structure(const SearchReport& rep, const Hypergraph& pattern) {
  return std::all_of(rep.achievers.begin(), rep.achievers.end(), [&](const Achiever& a) { return contains(a.graph, pattern).has_value(); });
}

/// Report as JSON. Wall time is omitted unless requested so that equal inputs
/// give byte-identical output.
inline nlohmann::json to_json(const SearchReport& rep, bool include_timing = false) {
  nlohmann::json j;
  j["schema"] = kSearchSchema;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["family"] = rep.family;
  j["graphs_enumerated"] = rep.graphs_enumerated;
  j["maximal_free_count"] = rep.maximal_free_count;
  j["reduction_factor"] = rep.maximal_free_count == 0 ? 0.0 : static_cast<double>(rep.graphs_enumerated) / static_cast<double>(rep.maximal_free_count);
  j["max_lambda"] = rep.max_lambda;
  j["r_factorial_lambda"] = rep.r_factorial_lambda();
  j["max_lambda_exact"] = rep.max_exact ? nlohmann::json(to_string(*rep.max_exact)) : nlohmann::json(nullptr);
  nlohmann::json ach = nlohmann::json::array();
  for (const auto& a : rep.achievers) {
    nlohmann::json g = to_json(a.graph);
    g["lambda"] = a.lambda;
    g["exact"] = a.exact ? nlohmann::json(to_string(*a.exact)) : nlohmann::json(nullptr);
    ach.push_back(std::move(g));
  }
  j["achievers"] = std::move(ach);
  j["non_achievers"] = rep.non_achievers;
  if (rep.bound) j["bound"] = {{"value", to_string(rep.bound->bound)}, {"pass", rep.bound->pass}};
  else j["bound"] = nullptr;
  j["turan_number"] = rep.turan_number ? nlohmann::json(*rep.turan_number) : nlohmann::json(nullptr);
  j["seed"] = rep.seed;
  if (include_timing) j["wall_seconds"] = rep.wall_seconds;
  return j;
}

/// Flat CSV header and row for tabulation.
inline std::string csv_header() { return "n,r,family,graphs_enumerated,maximal_free_count,max_lambda,r_factorial_lambda,achievers,bound,bound_pass,turan_number,seed"; }

inline std::string csv_row(const SearchReport& rep) {
  std::string row = std::to_string(rep.n) + "," + std::to_string(rep.r) + ",\"" + rep.family + "\"," + std::to_string(rep.graphs_enumerated) + "," +
                    std::to_string(rep.maximal_free_count) + "," + nlohmann::json(rep.max_lambda).dump() + "," + nlohmann::json(rep.r_factorial_lambda()).dump() + "," +
                    std::to_string(rep.achievers.size()) + ",";
  row += rep.bound ? to_string(rep.bound->bound) + "," + (rep.bound->pass ? "true" : "false") : std::string(",");
  row += "," + (rep.turan_number ? std::to_string(*rep.turan_number) : std::string()) + "," + std::to_string(rep.seed);
  return row;
}

}  // namespace hyperlag

#endif  // HYPERLAG_SEARCH_HPP
