#ifndef HYPERLAG_LEDGER_HPP
#define HYPERLAG_LEDGER_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlag/canonical.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/density.hpp"
#include "hyperlag/envelopes.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/operations.hpp"
#include "hyperlag/parallel.hpp"
#include "hyperlag/random.hpp"
#include "hyperlag/search.hpp"

// The verification ledger: every closed-form inequality, envelope bound and
// desk-scale extremal claim as one pass/fail/skipped entry.

namespace hyperlag {

inline constexpr const char* kLedgerSchema = "hyperlag.ledger/1";

enum class Status { pass, fail, skipped };
enum class CheckKind { closed_form, grid, search, structural };
enum class Level { quick, full };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::closed_form: return "closed-form identity";
    case CheckKind::grid: return "grid inequality";
    case CheckKind::search: return "search bound";
    case CheckKind::structural: return "structural";
  }
  return "?";
}

inline const char* to_string(Level l) { return l == Level::quick ? "quick" : "full"; }

inline Level parse_level(const std::string& s) {
  if (s == "quick") return Level::quick;
  if (s == "full") return Level::full;
  throw std::invalid_argument("level must be quick or full, got '" + s + "'");
}

struct LedgerEntry {
  std::string id;
  /// The mathematical statement being checked.
  std::string claim;
  CheckKind kind = CheckKind::structural;
  nlohmann::json parameters = nlohmann::json::object();
  Status status = Status::pass;
  /// Grid point or graph on failure, null otherwise.
  nlohmann::json witness;
  std::string detail;

  void fail(nlohmann::json w, std::string why) {
    if (status == Status::fail) return;  // keep the first witness
    status = Status::fail;
    witness = std::move(w);
    detail = std::move(why);
  }
};

struct SuiteOptions {
  Level level = Level::quick;
  std::uint64_t seed = 0;
  /// Negative control: corrupts the expected K_5^3 value to 2/24.
  bool tamper = false;
  const Executor* executor = nullptr;
};

/// K_{t-1}^r and r!·λ(K_{t-1}^r) for an r-graph F on t >= r+1 vertices. The
/// clique is F-free because it has fewer vertices than F.
struct PerfectnessFloor {
  Hypergraph clique;
  Rational value;
};

inline PerfectnessFloor perfectness_floor(const Hypergraph& f) {
  const int t = f.vertex_count(), r = f.uniformity();
  if (t <= r) throw std::domain_error("perfectness_floor needs t >= r+1 vertices, got t = " + std::to_string(t));
  Hypergraph k = complete(t - 1, r);
  if (!is_free(k, ForbiddenFamily({f}, "F"))) throw std::logic_error("K_{t-1}^r contains F");
  // The uniform weighting is optimal on a complete graph.
  const std::vector<Rational> w(static_cast<std::size_t>(t - 1), make_rational(1, t - 1));
  Rational v = exact_eval(k, w);
  for (int i = 2; i <= r; ++i) v *= i;
  return {std::move(k), std::move(v)};
}

/// Every maximal F5-free 3-graph on n <= max_n vertices that contains K_4^3 has
/// λ <= 1/16. This covers every F5-free graph containing K_4^3 (subgraph
/// monotonicity), dense or not.
inline LedgerEntry k43_lemma_check(int max_n = 6, const Executor* exec = nullptr) {
  LedgerEntry e{.id = "search.k43-lemma",
                .claim = "an F5-free 3-graph containing K_4^3 has lambda <= 1/16",
                .kind = CheckKind::search};
  e.parameters = {{"max_n", max_n}, {"tolerance", 1e-9}};
  const auto family = ForbiddenFamily({f5()}, "F5");
  const Hypergraph k4 = complete(4, 3);
  SolverOptions opt{.starts = 12};
  std::size_t tested = 0, dense = 0;
  for (int n = 4; n <= max_n; ++n) {
    opt.support_enum_max = std::max(opt.support_enum_max, n);
    for (const auto& g : maximal_free(n, 3, family, {.executor = exec})) {
      if (!contains(g, k4)) continue;
      ++tested;
      const auto cert = lagrangian(g, opt);
      if (is_dense(g, {.solver = opt}).dense) ++dense;
      if (cert.value > 1.0 / 16 + 1e-9) e.fail({{"graph", to_json(g)}, {"lambda", cert.value}}, "lambda exceeds 1/16");
    }
  }
  e.parameters["graphs_tested"] = tested;
  e.parameters["dense_among_them"] = dense;
  if (e.status == Status::pass) e.detail = std::to_string(tested) + " maximal graphs containing K_4^3, " + std::to_string(dense) + " dense";
  return e;
}

namespace detail {

struct Check {
  std::string id;
  CheckKind kind;
  std::string claim;
  std::function<void(const SuiteOptions&, LedgerEntry&)> run;
};

/// Solver λ must equal `expected` exactly and within 1e-10 in floating point.
inline void expect_lambda(LedgerEntry& e, const std::string& label, const Hypergraph& g, const Rational& expected) {
  const auto cert = lagrangian(g);
  const bool ok = cert.exact && *cert.exact == expected && std::fabs(cert.value - to_double(expected)) <= 1e-10;
  if (!ok)
    e.fail({{"graph", label},
            {"computed", cert.value},
            {"computed_exact", cert.exact ? nlohmann::json(to_string(*cert.exact)) : nlohmann::json(nullptr)},
            {"expected", to_string(expected)}},
           label + ": solver value differs from the closed form");
}

inline int property_count(const SuiteOptions& o, int quick, int full) { return o.level == Level::quick ? quick : full; }

inline double grid_step(const SuiteOptions& o) { return o.level == Level::quick ? 1e-4 : 1e-5; }

/// Grid points 0, h, 2h, ..., hi (hi always included).
template <class F>
void scan(double hi, double h, F&& f) {
  const auto steps = static_cast<long long>(std::llround(hi / h));
  for (long long i = 0; i <= steps; ++i) f(i == steps ? hi : static_cast<double>(i) * h);
}

/// Graphs with plenty of twins, for the symmetrization check.
inline std::vector<Hypergraph> symmetric_samples() {
  return {complete(5, 3), o_graph(3), star(6), s2t(4), complete_minus(5, 3), complete(6, 2), linear_path(2), f5()};
}

inline std::vector<Hypergraph> extension_samples() {
  return {f5(), linear_cycle(3), linear_path(2), complete_minus(4, 3), o_graph(2), star(5), s2t(3), fano(),
          f_member(4, 0), f_member(4, 1), Hypergraph(3, 6, std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}})};
}

/// All r-sets containing the core {1..r-2}; F^r-free for every n.
inline Hypergraph core_star(int r, int n) {
  std::vector<VertexSet> edges;
  const VertexSet core = VertexSet::range(r - 2);
  for (VertexSet pair : k_subsets(n - (r - 2), 2)) {
    VertexSet e = core;
    pair.for_each([&](Vertex v) { e.insert(v + r - 2); });
    edges.push_back(e);
  }
  return Hypergraph(r, n, std::move(edges));
}

/// A graph built to have good pairs: K_{2t-2}^{3-} on A = [2t-2], s pairs
/// (a_i, b_i) joined to every vertex of A, and O_s on the pairs.
inline Hypergraph good_pair_instance(int t, int s) {
  const int a = 2 * t - 2;
  const Hypergraph base = complete_minus(a, 3);
  std::vector<VertexSet> edges(base.edges().begin(), base.edges().end());
  auto ai = [&](int i) { return a + 2 * i - 1; };
  auto bi = [&](int i) { return a + 2 * i; };
  for (int i = 1; i <= s; ++i) {
    for (Vertex k = 1; k <= a; ++k) edges.push_back(VertexSet{ai(i), bi(i), k});
    for (int j = 1; j <= s; ++j)
      if (j != i) {
        edges.push_back(VertexSet{ai(i), bi(i), ai(j)});
        edges.push_back(VertexSet{ai(i), bi(i), bi(j)});
      }
  }
  return Hypergraph(3, a + 2 * s, std::move(edges));
}

// ---------------------------------------------------------------------------
// Golden values
// ---------------------------------------------------------------------------

inline void golden_k53(const SuiteOptions& o, LedgerEntry& e) {
  const Rational expected = o.tamper ? make_rational(2, 24) : make_rational(2, 25);
  e.parameters = {{"expected", to_string(expected)}, {"tolerance", 1e-10}};
  expect_lambda(e, "K5_3", complete(5, 3), expected);
}

inline void golden_k43_os(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"s", {2, 3, 4, 5}}, {"tolerance", 1e-10}};
  expect_lambda(e, "K4_3", complete(4, 3), make_rational(1, 16));
  for (int s = 2; s <= 5; ++s) expect_lambda(e, "O" + std::to_string(s), o_graph(s), make_rational(1, 16));
}

inline void golden_odd_cliques(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"t", {3, 4, 5}}, {"tolerance", 1e-10}};
  for (long long t = 3; t <= 5; ++t)
    expect_lambda(e, "K" + std::to_string(2 * t - 1) + "_3", complete(static_cast<int>(2 * t - 1), 3),
                  make_rational((2 * t - 2) * (2 * t - 3), 6 * (2 * t - 1) * (2 * t - 1)));
}

inline void golden_graph_cliques(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"t", "2..8"}, {"tolerance", 1e-10}};
  for (int t = 2; t <= 8; ++t) expect_lambda(e, "K" + std::to_string(t) + "_2", complete(t, 2), make_rational(t - 1, 2LL * t));
}

inline void golden_star(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"n", "4..9"}};
  const auto family = ForbiddenFamily({f5()}, "F5");
  Rational previous = 0;
  for (long long n = 4; n <= 9; ++n) {
    const Hypergraph g = star(static_cast<int>(n));
    const Rational expected = make_rational(2 * (n - 2), 27 * (n - 1));
    expect_lambda(e, "Star" + std::to_string(n), g, expected);
    if (!is_free(g, family)) e.fail({{"graph", to_json(g)}}, "star contains F5");
    if (expected <= previous || expected >= make_rational(2, 27)) e.fail({{"n", n}}, "star values not increasing below 2/27");
    previous = expected;
  }
}

// ---------------------------------------------------------------------------
// Solver properties
// ---------------------------------------------------------------------------

inline Hypergraph random_sample(std::uint64_t seed, std::uint64_t index, int n_lo, int n_hi, int r_lo, int r_hi) {
  auto rng = SplitMix64::stream(seed, index);
  const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
  const int r = r_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(r_hi - r_lo + 1)));
  return random_hypergraph(n, r, 0.25 + 0.6 * rng.uniform(), rng);
}

inline void prop_monotonicity(const SuiteOptions& o, LedgerEntry& e) {
  const int count = property_count(o, 40, 200);
  e.parameters = {{"graphs", count}, {"tolerance", 1e-9}};
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 10000 + i, 3, 7, 2, 3);
    if (g.size() == 0) continue;
    auto rng = SplitMix64::stream(o.seed, 20000 + i);
    const VertexSet drop = g.edges()[rng.below(static_cast<std::uint64_t>(g.size()))];
    const double whole = lagrangian(g).value, part = lagrangian(g.without_edge(drop)).value;
    if (part > whole + 1e-9) e.fail({{"graph", to_json(g)}, {"removed", drop.to_vector()}, {"lambda", whole}, {"lambda_sub", part}}, "subgraph has larger lambda");
  }
}

inline void prop_symmetrization(const SuiteOptions& o, LedgerEntry& e) {
  const int per = property_count(o, 20, 100);
  e.parameters = {{"samples_per_graph", per}, {"tolerance", 1e-12}};
  for (const auto& g : symmetric_samples())
    for (int i = 0; i < per; ++i) {
      auto rng = SplitMix64::stream(o.seed, 30000 + i);
      const WeightVector x(rng.dirichlet(static_cast<std::size_t>(g.vertex_count())));
      const double before = evaluate(g, x.values()), after = evaluate(g, symmetrize(g, x).values());
      if (after < before - 1e-12) e.fail({{"graph", to_json(g)}, {"x", std::vector<double>(x.values().begin(), x.values().end())}}, "symmetrization lowered lambda");
    }
}

inline void prop_ascent(const SuiteOptions& o, LedgerEntry& e) {
  const int count = property_count(o, 40, 200);
  e.parameters = {{"graphs", count}, {"slack", 1e-15}};
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 40000 + i, 3, 8, 2, 4);
    if (g.size() == 0) continue;
    auto rng = SplitMix64::stream(o.seed, 50000 + i);
    std::vector<double> trace;
    local_ascend(g, WeightVector(rng.dirichlet(static_cast<std::size_t>(g.vertex_count()))), 1e-12, 2000, &trace);
    for (std::size_t k = 1; k < trace.size(); ++k)
      if (trace[k] < trace[k - 1] - 1e-15 * std::max(1.0, trace[k - 1]) * 4) {
        e.fail({{"graph", to_json(g)}, {"iteration", k}, {"before", trace[k - 1]}, {"after", trace[k]}}, "ascent decreased lambda");
        break;
      }
  }
}

inline void prop_gradient(const SuiteOptions& o, LedgerEntry& e) {
  const int count = property_count(o, 40, 200);
  const double h = 1e-6;
  e.parameters = {{"graphs", count}, {"step", h}, {"tolerance", 1e-6}};
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 60000 + i, 2, 9, 2, 4);
    auto rng = SplitMix64::stream(o.seed, 70000 + i);
    const auto x = rng.dirichlet(static_cast<std::size_t>(g.vertex_count()));
    const auto grad = gradient(g, x);
    for (std::size_t k = 0; k < x.size(); ++k) {
      auto up = x, down = x;
      up[k] += h;
      down[k] -= h;
      const double fd = (evaluate(g, up) - evaluate(g, down)) / (2 * h);
      if (std::fabs(fd - grad[k]) > 1e-6) e.fail({{"graph", to_json(g)}, {"x", x}, {"coordinate", k + 1}, {"analytic", grad[k]}, {"finite_difference", fd}}, "gradient mismatch");
    }
  }
}

inline void prop_uniform_bound(const SuiteOptions& o, LedgerEntry& e) {
  const int count = property_count(o, 40, 200);
  e.parameters = {{"graphs", count}};
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 80000 + i, 2, 8, 2, 4);
    const auto u = WeightVector::uniform(g.vertex_count());
    const auto cert = lagrangian(g);
    if (cert.value < evaluate(g, u.values()) - 1e-12) e.fail({{"graph", to_json(g)}, {"lambda", cert.value}}, "lambda below the uniform weighting");
  }
}

inline void prop_stationarity(const SuiteOptions& o, LedgerEntry& e) {
  const int count = property_count(o, 40, 200);
  e.parameters = {{"graphs", count}, {"kkt_tolerance", 1e-8}};
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 90000 + i, 2, 8, 2, 4);
    const auto cert = lagrangian(g);
    if (cert.kkt_residual > 1e-8 || std::fabs(evaluate(g, cert.weights.values()) - cert.value) > 1e-12)
      e.fail({{"graph", to_json(g)}, {"kkt_residual", cert.kkt_residual}}, "certificate is not stationary");
  }
}

inline void prop_motzkin_straus(const SuiteOptions& o, LedgerEntry& e) {
  const int count = 200;
  e.parameters = {{"graphs", count}, {"max_n", 12}, {"tolerance", 1e-8}};
  SolverOptions opt;
  opt.use_motzkin_straus = false;
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 100000 + i, 2, 12, 2, 2);
    const double solver = lagrangian(g, opt).value, formula = to_double(motzkin_straus(g));
    if (std::fabs(solver - formula) > 1e-8) e.fail({{"graph", to_json(g)}, {"solver", solver}, {"clique_formula", formula}}, "solver disagrees with the clique formula");
  }
}

/// An optimum with a vertex of weight >= 1/3 has λ <= 2/27.
inline void prop_heavy_vertex(const SuiteOptions& o, LedgerEntry& e) {
  const int random_count = 500;
  e.parameters = {{"enumerated_n", "3..5"}, {"random_graphs", random_count}, {"random_max_n", 8}, {"tolerance", 1e-9}};
  std::vector<Hypergraph> graphs;
  for (int n = 3; n <= 5; ++n)
    for (auto& g : enumerate(n, 3)) graphs.push_back(std::move(g));
  for (int i = 0; i < random_count; ++i) graphs.push_back(random_sample(o.seed, 110000 + i, 3, 8, 3, 3));
  std::size_t heavy = 0;
  for (const auto& g : graphs) {
    const auto cert = lagrangian(g);
    if (g.size() == 0 || cert.weights.max() < 1.0 / 3) continue;
    ++heavy;
    if (cert.value > 2.0 / 27 + 1e-9) e.fail({{"graph", to_json(g)}, {"lambda", cert.value}, {"max_weight", cert.weights.max()}}, "heavy-vertex optimum above 2/27");
  }
  e.parameters["heavy_optima"] = heavy;
}

/// H^F covers every pair of V(F) and has v(F) + (r-2)u vertices and |F| + u
/// edges, u the number of uncovered pairs of F.
inline void prop_extension(const SuiteOptions&, LedgerEntry& e) {
  for (const auto& f : extension_samples()) {
    const auto ext = extension(f);
    const int u = static_cast<int>(uncovered_pairs(f).size()), r = f.uniformity();
    const bool counts = ext.vertex_count() == f.vertex_count() + (r - 2) * u && ext.size() == f.size() + u;
    bool covered = true;
    for (auto [a, b] : uncovered_pairs(ext))
      if (b <= f.vertex_count()) covered = false;
    if (!covered || !counts || !contains(ext, f))
      e.fail({{"graph", to_json(f)}, {"extension_vertices", ext.vertex_count()}, {"extension_edges", ext.size()}, {"uncovered_pairs", u}},
             "extension is wrong");
  }
}

inline void prop_canonical(const SuiteOptions& o, LedgerEntry& e) {
  const int count = property_count(o, 60, 300);
  e.parameters = {{"graphs", count}};
  for (int i = 0; i < count; ++i) {
    const Hypergraph g = random_sample(o.seed, 120000 + i, 1, 9, 2, 4);
    auto rng = SplitMix64::stream(o.seed, 130000 + i);
    const Hypergraph h = permute(g, random_permutation(g.vertex_count(), rng));
    const Hypergraph c = canonical_form(g);
    if (canonical_form(h) != c || canonical_form(c) != c) e.fail({{"graph", to_json(g)}, {"relabelled", to_json(h)}}, "canonical form not invariant");
  }
}

inline void prop_round_trip(const SuiteOptions& o, LedgerEntry& e) {
  std::vector<Hypergraph> graphs = extension_samples();
  for (const auto& entry : gallery()) {
    std::vector<int> p;
    if (entry.name == "K" || entry.name == "Kminus") p = {5, 3};
    else if (entry.name == "Fr") p = {5, 1};
    else if (entry.arity == 1) p = {entry.name == "E" ? 4 : 3};
    graphs.push_back(build_construction({entry.name, p}));
  }
  for (int i = 0; i < 200; ++i) graphs.push_back(random_sample(o.seed, 140000 + i, 0, 10, 1, 4));
  e.parameters = {{"graphs", graphs.size()}};
  for (const auto& g : graphs)
    if (parse_hypergraph(to_hg(g)) != g || hypergraph_from_json(nlohmann::json::parse(to_json(g).dump())) != g)
      e.fail({{"graph", to_json(g)}}, "serialization does not round-trip");
}

inline void prop_determinism(const SuiteOptions& o, LedgerEntry& e) {
  const Executor one(1), four(4);
  SolverOptions a{.seed = o.seed, .executor = &one}, b{.seed = o.seed, .executor = &four};
  for (const auto& g : {complete(5, 3), fano(), o_graph(3), star(7)}) {
    const auto x = lagrangian(g, a), y = lagrangian(g, b);
    if (x.value != y.value || x.weights != y.weights) e.fail({{"graph", to_json(g)}}, "solver output depends on worker count");
  }
  const auto family = ForbiddenFamily({f5()}, "F5");
  SearchOptions sa, sb;
  sa.solver.seed = sb.solver.seed = o.seed;
  sa.enumeration.executor = &one;
  sb.enumeration.executor = &four;
  if (to_json(max_lagrangian(5, 3, family, sa)).dump() != to_json(max_lagrangian(5, 3, family, sb)).dump())
    e.fail({{"search", "F5, n=5"}}, "search report depends on worker count");
}

// ---------------------------------------------------------------------------
// Envelopes
// ---------------------------------------------------------------------------

/// At the maximizer (2/3, 1/3) the envelope is 2k/(27(k+1)), below 2/27 and
/// tending to it as k grows.
inline void envelope_f5_exact(const SuiteOptions&, LedgerEntry& e) {
  const Rational a = make_rational(2, 3), c = make_rational(1, 3);
  for (long long k = 3; k <= 200; ++k) {
    const Rational v = envelope::f5(a, c, static_cast<int>(k));
    if (v != make_rational(2 * k, 27 * (k + 1)) || !(v < make_rational(2, 27)))
      e.fail({{"a", "2/3"}, {"c", "1/3"}, {"k", k}, {"value", to_string(v)}}, "f(2/3, 1/3) != 2k/(27(k+1))");
  }
  if (envelope::f5(Rational(0), Rational(0), 3) != make_rational(1, 24)) e.fail({{"a", 0}, {"c", 0}, {"k", 3}}, "f(0, 0) != 1/24");
  // Float and exact paths agree.
  for (int k : {3, 4, 7, 50})
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; i + j <= 12; ++j) {
        const Rational ra = make_rational(i, 12), rc = make_rational(j, 12);
        if (std::fabs(to_double(envelope::f5(ra, rc, k)) - envelope::f5(i / 12.0, j / 12.0, k)) > 1e-12)
          e.fail({{"a", to_string(ra)}, {"c", to_string(rc)}, {"k", k}}, "float and exact evaluations differ");
      }
}

/// Grid over {a, c >= 0, a + c <= 1, c <= 1/3}. The full level adds a finer
/// scan in c; for fixed c the envelope is convex in a (coefficient 2a²), so
/// each row's grid maximum sits at a row endpoint.
inline void envelope_f5_grid(const SuiteOptions& o, LedgerEntry& e) {
  const std::vector<int> ks{3, 4, 5, 6, 10, 100, 1000};
  const double h = 1e-4, bound = 2.0 / 27 + 1e-9;
  e.parameters = {{"k", ks}, {"step", h}, {"bound", "2/27 + 1e-9"}};
  if (o.level == Level::full) e.parameters["row_step"] = 1e-5;
  for (int k : ks) {
    double best = -1, best_a = 0, best_c = 0;
    scan(1.0 / 3, h, [&](double c) {
      scan(1.0 - c, h, [&](double a) {
        const double v = envelope::f5(a, c, k);
        if (v > best) best = v, best_a = a, best_c = c;
      });
    });
    if (o.level == Level::full)
      scan(1.0 / 3, 1e-5, [&](double c) {
        for (double a : {0.0, 1.0 - c}) {
          const double v = envelope::f5(a, c, k);
          if (v > best) best = v, best_a = a, best_c = c;
        }
      });
    if (best > bound) e.fail({{"k", k}, {"a", best_a}, {"c", best_c}, {"value", best}}, "envelope exceeds 2/27");
    if (std::fabs(best_a - 2.0 / 3) > 2 * h || std::fabs(best_c - 1.0 / 3) > 2 * h)
      e.fail({{"k", k}, {"a", best_a}, {"c", best_c}}, "maximizer is not at (2/3, 1/3)");
  }
}

inline void envelope_good_t3_identity(const SuiteOptions&, LedgerEntry& e) {
  const Rational m = envelope::good_m(3);
  if (m != make_rational(2, 25)) e.fail({{"t", 3}, {"m", to_string(m)}}, "m(3) != 2/25");
  // Two cubics agreeing at five points are identical.
  for (int i = 0; i <= 4; ++i) {
    const Rational a = make_rational(i, 4);
    if (envelope::good(a, m) != envelope::good_t3(a)) e.fail({{"a", to_string(a)}}, "expansion differs from the envelope");
  }
  if (envelope::good_t3(Rational(0)) != make_rational(2, 25)) e.fail({{"a", 0}}, "g(0) != 2/25");
}

inline void envelope_good_t3_grid(const SuiteOptions& o, LedgerEntry& e) {
  const double h = grid_step(o);
  const double x1 = envelope::good_t3_critical_low(), x2 = envelope::good_t3_critical_high();
  e.parameters = {{"step", h}, {"x1", x1}, {"x2", x2}};
  double best = -1, best_a = 0, upper_best = -1, upper_a = 0;
  scan(1.0, h, [&](double a) {
    const double v = envelope::good_t3(a);
    if (v > best) best = v, best_a = a;
    if (a >= x1 && v > upper_best) upper_best = v, upper_a = a;
    // Sign of g' between and outside the critical points.
    const double d = envelope::good_t3_derivative(a);
    const bool expect_negative = a < x1 - h || a > x2 + h, expect_positive = a > x1 + h && a < x2 - h;
    if ((expect_negative && d >= 0) || (expect_positive && d <= 0)) e.fail({{"a", a}, {"derivative", d}}, "derivative sign differs from the critical-point analysis");
  });
  if (std::fabs(best - 0.08) > 1e-12 || best_a != 0.0) e.fail({{"a", best_a}, {"value", best}}, "grid maximum is not g(0) = 2/25");
  if (std::fabs(upper_a - x2) > h || !(envelope::good_t3(x2) < 0.08)) e.fail({{"a", upper_a}, {"x2", x2}}, "local maximum is not at x2 or exceeds 2/25");
  e.parameters["g_x2"] = envelope::good_t3(x2);
}

/// For t >= 4 the relaxed cubic is at most max{m, 1/12} = m, decreasing on
/// [0, 6m/(6m+1)] and increasing after; the envelope itself is below it.
inline void envelope_good_relaxed(const SuiteOptions& o, LedgerEntry& e) {
  const double h = grid_step(o);
  e.parameters = {{"t", "4..12"}, {"step", h}};
  if (envelope::good_m(4) != make_rational(5, 49)) e.fail({{"t", 4}}, "m(4) != 5/49");
  for (int t = 4; t <= 12; ++t) {
    const Rational mr = envelope::good_m(t);
    if (mr < make_rational(1, 12)) e.fail({{"t", t}, {"m", to_string(mr)}}, "m below 1/12");
    if (envelope::good_relaxed(Rational(0), mr) != mr) e.fail({{"t", t}}, "relaxed cubic at 0 is not m");
    const double m = to_double(mr), turn = 6 * m / (6 * m + 1);
    double best = -1, best_a = 0;
    scan(1.0, h, [&](double a) {
      const double v = envelope::good_relaxed(a, m);
      if (v > best) best = v, best_a = a;
      if (envelope::good(a, m) > v + 1e-15) e.fail({{"t", t}, {"a", a}}, "envelope above its relaxation");
      const double d = envelope::good_relaxed_derivative(a, m);
      if ((a < turn - h && d >= 0) || (a > turn + h && a < 1 - h && d <= 0)) e.fail({{"t", t}, {"a", a}, {"derivative", d}}, "monotonicity intervals differ");
    });
    if (best > m + 1e-15 || best_a != 0.0) e.fail({{"t", t}, {"a", best_a}, {"value", best}, {"m", m}}, "relaxed maximum is not m at a = 0");
  }
}

inline void envelope_s2t_grid(const SuiteOptions& o, LedgerEntry& e) {
  const double h = grid_step(o);
  e.parameters = {{"s", "3..20"}, {"step", h}, {"tolerance", 1e-6}};
  for (int s = 3; s <= 20; ++s) {
    // 3 - 2m = (s² + 4s - 9)/(s - 1)², exactly.
    const Rational m = envelope::s2t_m(s);
    if ((3 - 2 * m) * (s - 1) * (s - 1) != Rational(s * s + 4 * s - 9)) e.fail({{"s", s}}, "closed form of 3 - 2m is wrong");
    if (envelope::s2t(Rational(0), s) != m / 6) e.fail({{"s", s}, {"a", 0}}, "f(0) != m/6");
    const double peak = envelope::s2t_argmax(s);
    double best = -1, best_a = 0;
    scan(0.5, h, [&](double a) {
      const double v = envelope::s2t(a, s);
      if (v > best) best = v, best_a = a;
      const double d = envelope::s2t_derivative(a, s);
      if ((a < peak - h && d <= 0) || (a > peak + h && d >= 0)) e.fail({{"s", s}, {"a", a}, {"derivative", d}}, "monotonicity intervals differ");
    });
    const double closed = envelope::s2t_max(s);
    if (std::fabs(best - closed) > 1e-6 || std::fabs(best_a - peak) > h)
      e.fail({{"s", s}, {"grid_max", best}, {"closed_form", closed}, {"a", best_a}, {"argmax", peak}}, "maximum differs from the closed form");
  }
  const double s3 = envelope::s2t_max(3);
  if (std::fabs(s3 - 1 / (6 * std::sqrt(3.0))) > 1e-15) e.fail({{"s", 3}}, "s = 3 maximum is not 1/(6 sqrt 3)");
}

/// (s-1)/(6√(s²+4s-9)) <= (s+3)(s+2)/(6(s+4)²) for 3 <= s <= 100, squared and
/// compared in exact integers.
inline void envelope_s2t_target(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"s", "3..100"}};
  for (long long s = 3; s <= 100; ++s) {
    const BigInt x = s;
    const BigInt lhs = (x - 1) * (x - 1) * (x + 4) * (x + 4) * (x + 4) * (x + 4);
    const BigInt rhs = (x + 3) * (x + 3) * (x + 2) * (x + 2) * (x * x + 4 * x - 9);
    if (!(lhs < rhs)) e.fail({{"s", s}}, "envelope maximum is not below lambda(K_{s+4}^3)");
  }
}

inline void envelope_quartic(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"s", "3..100"}};
  if (envelope::quartic_gap(3) != 1196) e.fail({{"s", 3}, {"g", envelope::quartic_gap(3).str()}}, "g(3) != 1196");
  if (envelope::quartic_gap(1) != -576) e.fail({{"s", 1}, {"g", envelope::quartic_gap(1).str()}}, "g(1) != -576");
  for (long long s = 3; s <= 100; ++s)
    if (envelope::quartic_gap(s) <= 0) e.fail({{"s", s}, {"g", envelope::quartic_gap(s).str()}}, "g(s) is not positive");
}

// ---------------------------------------------------------------------------
// Searches
// ---------------------------------------------------------------------------

inline void search_f5(const SuiteOptions& o, LedgerEntry& e) {
  const int max_n = o.level == Level::quick ? 5 : 6;
  e.parameters = {{"n", max_n == 5 ? "4..5" : "4..6"}, {"bound", "2/27"}};
  const auto family = ForbiddenFamily({f5()}, "F5");
  SearchOptions opt;
  opt.solver.seed = o.seed;
  opt.bound = make_rational(2, 27);
  opt.enumeration.executor = o.executor;
  for (int n = 4; n <= max_n; ++n) {
    const auto rep = max_lagrangian(n, 3, family, opt);
    if (!rep.bound->pass) e.fail(to_json(rep), "maximum exceeds 2/27 at n = " + std::to_string(n));
    if (n == 5 && (std::fabs(rep.max_lambda - 1.0 / 16) > 1e-9 || !verify_extremal_structure(rep, complete(4, 3))))
      e.fail(to_json(rep), "n = 5 maximum is not 1/16 attained by K_4^3");
    e.parameters["max_lambda_n" + std::to_string(n)] = rep.max_lambda;
  }
}

inline void search_c33(const SuiteOptions& o, LedgerEntry& e) {
  const int n = o.level == Level::quick ? 5 : 6;
  e.parameters = {{"n", n}, {"value", "2/25"}, {"tolerance", 1e-7}};
  const auto family = ForbiddenFamily({linear_cycle(3)}, "C3_3");
  SearchOptions opt;
  opt.solver.seed = o.seed;
  opt.enumeration.executor = o.executor;
  const auto rep = max_lagrangian(n, 3, family, opt);
  const bool value = std::fabs(rep.max_lambda - 0.08) <= 1e-7;
  const bool structure = verify_extremal_structure(rep, complete(5, 3));
  // At n = 5 every graph is C_3^3-free and only K_5^3 is maximal.
  const bool non_vacuous = n == 5 || rep.non_achievers > 0;
  if (!value || !structure || !non_vacuous) e.fail(to_json(rep), "extremal structure differs from K_5^3");
  e.parameters["achievers"] = rep.achievers.size();
  e.parameters["non_achievers"] = rep.non_achievers;
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

inline void structural_fano(const SuiteOptions&, LedgerEntry& e) {
  const Hypergraph g = fano();
  const auto verdict = is_dense(g);
  if (!covers_pairs(g)) e.fail({{"graph", to_json(g)}}, "Fano plane does not cover pairs");
  if (verdict.dense) e.fail({{"graph", to_json(g)}, {"lambda", verdict.lambda}}, "Fano plane reported dense");
  else e.parameters["witness"] = to_json(*verdict.witness);
}

inline void structural_dense(const SuiteOptions& o, LedgerEntry& e) {
  const int max_n = o.level == Level::quick ? 5 : 6;
  const Hypergraph cherry(3, 4, std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}});
  e.parameters = {{"n", max_n == 5 ? "4..5" : "4..6"}};
  const Executor serial;
  const Executor& exec = o.executor ? *o.executor : serial;
  std::size_t dense_count = 0;
  for (int n = 4; n <= max_n; ++n) {
    const auto all = enumerate(n, 3, {.executor = o.executor});
    const auto flags = exec.map<char>(all.size(), [&](std::size_t i) { return static_cast<char>(is_dense(all[i], {.solver = {.starts = 12}}).dense); });
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!flags[i]) continue;
      ++dense_count;
      if (!contains(all[i], cherry)) e.fail({{"graph", to_json(all[i])}}, "dense graph without two edges sharing a pair");
      if (!covers_pairs(all[i])) e.fail({{"graph", to_json(all[i])}}, "dense graph does not cover pairs");
    }
  }
  e.parameters["dense_graphs"] = dense_count;
}

inline void structural_perfectness(const SuiteOptions&, LedgerEntry& e) {
  const auto c = perfectness_floor(linear_cycle(3));
  if (c.clique != complete(5, 3) || c.value != make_rational(12, 25)) e.fail({{"F", "C3_3"}, {"value", to_string(c.value)}}, "floor for C_3^3 is not (K_5^3, 12/25)");
  const auto f = perfectness_floor(f5());
  if (f.clique != complete(4, 3) || f.value != make_rational(3, 8) || !(f.value < make_rational(4, 9)))
    e.fail({{"F", "F5"}, {"value", to_string(f.value)}}, "floor for F5 is not (K_4^3, 3/8)");
  try {
    perfectness_floor(single_edge(3));
    e.fail({{"F", "E3"}}, "t <= r accepted");
  } catch (const std::domain_error&) {
  }
  // The freeness assertion holds for every gallery construction with t >= r+1.
  std::size_t checked = 0;
  for (const auto& g : extension_samples())
    if (g.vertex_count() > g.uniformity()) {
      perfectness_floor(g);
      ++checked;
    }
  for (const auto& g : {complete(6, 3), o_graph(4), linear_path(3), linear_cycle(4), s2t(4), star(6)}) {
    perfectness_floor(g);
    ++checked;
  }
  e.parameters = {{"constructions", checked}, {"C3_3", to_string(c.value)}, {"F5", to_string(f.value)}};
}

inline void structural_f_family(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"r", "3..6"}};
  if (f_family(3).members().size() != 1 || !are_isomorphic(f_family(3).members()[0], f5())) e.fail({{"r", 3}}, "F^3 is not {F5}");
  for (int r = 3; r <= 6; ++r) {
    const auto fam = f_family(r);
    const auto& ms = fam.members();
    if (static_cast<int>(ms.size()) != r - 2) e.fail({{"r", r}}, "wrong member count");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& m = ms[i];
      const auto edges = m.edges();
      const bool base = m.size() == 3 && m.uniformity() == r && m.vertex_count() == 2 * r - 1 - static_cast<int>(i) &&
                        (edges[0] & edges[1]).size() == r - 1 && remove_isolated(m).vertex_count() == m.vertex_count();
      if (!base) e.fail({{"r", r}, {"member", i}, {"graph", to_json(m)}}, "member structure is wrong");
      for (std::size_t j = 0; j < i; ++j)
        if (are_isomorphic(ms[i], ms[j])) e.fail({{"r", r}, {"members", {j, i}}}, "members are isomorphic");
    }
    // The core star (all r-sets through r-2 fixed vertices) avoids every member.
    for (int n = r + 1; n <= r + 4; ++n)
      if (!is_free(core_star(r, n), fam)) e.fail({{"r", r}, {"graph", to_json(core_star(r, n))}}, "core star contains a member");
    // Complete graphs on enough vertices do not.
    if (is_free(complete(2 * r - 1, r), fam)) e.fail({{"r", r}}, "complete graph is free");
  }
}

/// Good-pair predicates on constructed instances, and the resulting bound
/// λ(G) <= λ(K_{2t-1}^3) when λ(G[A]) is below it.
inline void structural_good_pairs(const SuiteOptions&, LedgerEntry& e) {
  e.parameters = {{"instances", {"t=3,s=2", "t=3,s=3", "t=4,s=2"}}};
  for (auto [t, s] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
    const Hypergraph g = good_pair_instance(t, s);
    const VertexSet a_set = VertexSet::range(2 * t - 2);
    const auto pairs = good_pairs(g, a_set);
    const auto part = good_pair_partition(g, a_set);
    std::vector<std::pair<Vertex, Vertex>> expected;
    for (int i = 1; i <= s; ++i) expected.emplace_back(2 * t - 2 + 2 * i - 1, 2 * t - 2 + 2 * i);
    if (pairs != expected || !part || *part != expected) e.fail({{"t", t}, {"s", s}, {"graph", to_json(g)}}, "good pairs not recovered");
    // Perturb: an extra edge through a_1 and a vertex of A breaks that pair.
    const Vertex a1 = 2 * t - 1;
    const Hypergraph broken = g.with_edge(VertexSet{1, 2, a1});
    const auto left = good_pairs(broken, a_set);
    if (std::find(left.begin(), left.end(), expected.front()) != left.end()) e.fail({{"t", t}, {"s", s}}, "broken pair still reported good");
    const double lambda = lagrangian(g, {.starts = 24, .support_enum_max = 12}).value;
    const Rational m = envelope::good_m(t);
    if (lambda > to_double(m) + 1e-9) e.fail({{"t", t}, {"s", s}, {"lambda", lambda}, {"m", to_string(m)}}, "lambda exceeds lambda(K_{2t-1}^3)");
    e.parameters["lambda_t" + std::to_string(t) + "_s" + std::to_string(s)] = lambda;
  }
  if (good_pair_partition(good_pair_instance(3, 2).with_edge(VertexSet{1, 2, 5}), VertexSet::range(4)) ||
      good_pairs(complete(5, 3), VertexSet{}).size() != 0)
    e.fail(nullptr, "degenerate inputs not rejected");
}

inline void skipped(const SuiteOptions&, LedgerEntry& e) { e.status = Status::skipped; }

inline const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"golden.K5_3", CheckKind::closed_form, "lambda(K_5^3) = 2/25", golden_k53},
      {"golden.K4_3-O_s", CheckKind::closed_form, "lambda(K_4^3) = lambda(O_s) = 1/16 for s = 2..5", golden_k43_os},
      {"golden.K2t-1_3", CheckKind::closed_form, "lambda(K_{2t-1}^3) = (2t-2)(2t-3)/(6(2t-1)^2) for t = 3, 4, 5", golden_odd_cliques},
      {"golden.Kt_2", CheckKind::closed_form, "lambda(K_t^2) = (1 - 1/t)/2 for t = 2..8", golden_graph_cliques},
      {"golden.star", CheckKind::closed_form, "the F5-free star S_n^3(1) has lambda = 2(n-2)/(27(n-1)), increasing to 2/27", golden_star},
      {"property.monotonicity", CheckKind::structural, "a subgraph never has larger lambda", prop_monotonicity},
      {"property.symmetrization", CheckKind::structural, "averaging the weights of twin vertices does not decrease lambda(G, x)", prop_symmetrization},
      {"property.ascent", CheckKind::structural, "the growth-transform ascent is monotone", prop_ascent},
      {"property.gradient", CheckKind::structural, "the analytic gradient matches central differences within 1e-6", prop_gradient},
      {"property.uniform-bound", CheckKind::structural, "lambda(G) >= |E| / n^r", prop_uniform_bound},
      {"property.stationarity", CheckKind::structural, "certified optima satisfy the first-order conditions", prop_stationarity},
      {"property.motzkin-straus", CheckKind::closed_form, "for 2-graphs lambda(G) = (1 - 1/omega)/2", prop_motzkin_straus},
      {"property.heavy-vertex", CheckKind::structural, "an optimum with some weight >= 1/3 has lambda <= 2/27", prop_heavy_vertex},
      {"property.extension", CheckKind::structural, "the extension covers pairs with the predicted vertex and edge counts", prop_extension},
      {"property.canonical", CheckKind::structural, "canonical forms are relabelling-invariant and idempotent", prop_canonical},
      {"property.round-trip", CheckKind::structural, "text and JSON serialization round-trip", prop_round_trip},
      {"property.determinism", CheckKind::structural, "results do not depend on the worker count", prop_determinism},
      {"envelope.f5-exact", CheckKind::closed_form, "f(2/3, 1/3) = 2k/(27(k+1)) < 2/27 for k >= 3, and f(0, 0) = 1/24 at k = 3", envelope_f5_exact},
      {"envelope.f5-grid", CheckKind::grid, "(c^2 + 2a^2 + 1 + 2kac - 2c - 2a)/(6(k+1)) <= 2/27 for c <= 1/3, maximal at (2/3, 1/3)", envelope_f5_grid},
      {"envelope.good-t3-identity", CheckKind::closed_form, "a^3/16 + a^2(1-a)/4 + (2/25)(1-a)^3 = (-107a^3 + 196a^2 - 96a + 32)/400", envelope_good_t3_identity},
      {"envelope.good-t3-grid", CheckKind::grid, "max over [0,1] of g is max{g(0), g(x2)} = 2/25", envelope_good_t3_grid},
      {"envelope.good-relaxed", CheckKind::grid, "for t >= 4, a^3/12 + a^2(1-a)/4 + m(1-a)^3 <= max{m, 1/12} = m", envelope_good_relaxed},
      {"envelope.s2t-grid", CheckKind::grid, "max of 2a^3 - 3a^2 + a + (1-2a)^3 m/6 on [0,1/2] is (s-1)/(6 sqrt(s^2+4s-9))", envelope_s2t_grid},
      {"envelope.s2t-target", CheckKind::closed_form, "(s-1)/(6 sqrt(s^2+4s-9)) < lambda(K_{s+4}^3) for 3 <= s <= 100", envelope_s2t_target},
      {"envelope.quartic", CheckKind::closed_form, "3s^4 + 38s^3 + 103s^2 - 140s - 580 > 0 for 3 <= s <= 100", envelope_quartic},
      {"search.F5", CheckKind::search, "F5-free 3-graphs have lambda <= 2/27; at n = 5 the maximum is 1/16 via K_4^3", search_f5},
      {"search.C3_3", CheckKind::search, "C_3^3-free 3-graphs have lambda <= 2/25 with equality only when containing K_5^3", search_c33},
      {"search.k43-lemma", CheckKind::search, "an F5-free 3-graph containing K_4^3 has lambda <= 1/16", nullptr},
      {"structural.fano", CheckKind::structural, "the Fano plane covers pairs but is not dense", structural_fano},
      {"structural.dense", CheckKind::structural, "dense 3-graphs cover pairs and contain {123, 124}", structural_dense},
      {"structural.perfectness-floor", CheckKind::structural, "K_{t-1}^r is F-free, giving pi_lambda(F) >= r! lambda(K_{t-1}^r)", structural_perfectness},
      {"structural.F-family", CheckKind::structural, "F^r has r-2 members sharing two base edges; the core star avoids them", structural_f_family},
      {"structural.good-pairs", CheckKind::structural, "good pairs to A are recovered and lambda stays below lambda(K_{2t-1}^3)", structural_good_pairs},
      {"asymptotic.Fr-bound", CheckKind::search, "F^r-free r-graphs containing e_1..e_{s-1} have lambda <= 2/r^r for r >= 4", skipped},
      {"asymptotic.pi-lambda", CheckKind::search, "pi_lambda(F5) = 4/9 and pi_lambda(C_3^3) = 12/25 as suprema over all n", skipped},
      {"asymptotic.S2t-perfect", CheckKind::search, "S_{2,t} disjoint-union H is perfect", skipped},
      {"asymptotic.Ct-given-K2t-2", CheckKind::search, "C_t^3-free graphs containing K_{2t-2}^{3-} have lambda <= lambda(K_{2t-1}^3)", skipped},
  };
  return all;
}

inline const char* skip_reason(const std::string& id) {
  if (id == "asymptotic.Fr-bound") return "not desk-verifiable: needs all n; covered by structural.F-family (construction and freeness)";
  if (id == "asymptotic.pi-lambda") return "supremum over all n; lower halves covered by golden.star and structural.perfectness-floor, desk-scale upper bounds by search.F5 and search.C3_3";
  if (id == "asymptotic.S2t-perfect") return "limit over all n; the proof inequalities are covered by envelope.s2t-grid, envelope.s2t-target and envelope.quartic";
  if (id == "asymptotic.Ct-given-K2t-2") return "enumeration at n >= 2t is past desk scale; covered by envelope.good-relaxed and structural.good-pairs";
  return "";
}

}  // namespace detail

namespace detail {

inline LedgerEntry run_check(const Check& c, const SuiteOptions& opt) {
  if (c.id == "search.k43-lemma") {
    auto e = k43_lemma_check(opt.level == Level::quick ? 5 : 6, opt.executor);
    e.claim = c.claim;
    return e;
  }
  LedgerEntry e{.id = c.id, .claim = c.claim, .kind = c.kind};
  try {
    c.run(opt, e);
  } catch (const std::exception& ex) {
    e.fail({{"exception", ex.what()}}, std::string("check threw: ") + ex.what());
  }
  if (e.status == Status::skipped) e.detail = skip_reason(c.id);
  return e;
}

}  // namespace detail

inline std::vector<std::string> entry_ids() {
  std::vector<std::string> ids;
  for (const auto& c : detail::checks()) ids.push_back(c.id);
  return ids;
}

/// A single ledger entry by id.
inline LedgerEntry run_entry(const std::string& id, const SuiteOptions& opt = {}) {
  for (const auto& c : detail::checks())
    if (c.id == id) return detail::run_check(c, opt);
  throw std::invalid_argument("no ledger entry '" + id + "'");
}

/// Runs every check (in parallel when an executor is given) and returns the
/// entries in their fixed order.
inline std::vector<LedgerEntry> run_suite(const SuiteOptions& opt = {}) {
  const auto& checks = detail::checks();
  const Executor serial;
  const Executor& exec = opt.executor ? *opt.executor : serial;
  // Entries run side by side; each runs its own work serially.
  SuiteOptions inner = opt;
  inner.executor = nullptr;
  return exec.map<LedgerEntry>(checks.size(), [&](std::size_t i) { return detail::run_check(checks[i], inner); });
}

inline bool all_pass(const std::vector<LedgerEntry>& entries) {
  return std::none_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.status == Status::fail; });
}

inline nlohmann::json to_json(const LedgerEntry& e) {
  nlohmann::json j = {{"id", e.id}, {"claim", e.claim}, {"kind", to_string(e.kind)}, {"parameters", e.parameters}, {"status", to_string(e.status)}};
  if (e.status == Status::fail) j["witness"] = e.witness;
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

inline nlohmann::json to_json(const std::vector<LedgerEntry>& entries, const SuiteOptions& opt) {
  std::size_t pass = 0, fail = 0, skip = 0;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : entries) {
    (e.status == Status::pass ? pass : e.status == Status::fail ? fail : skip)++;
    list.push_back(to_json(e));
  }
  return {{"schema", kLedgerSchema},
          {"suite", "paper"},
          {"level", to_string(opt.level)},
          {"seed", opt.seed},
          {"entries", std::move(list)},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skip}}}};
}

}  // namespace hyperlag

#endif  // HYPERLAG_LEDGER_HPP
