#ifndef HYPERLAG_CONSTRUCTIONS_HPP
#define HYPERLAG_CONSTRUCTIONS_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

/// All k-subsets of {1..t} in lexicographic order.
inline std::vector<VertexSet> k_subsets(int t, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > t) return out;
  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(VertexSet::from_vector(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == t - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace detail

/// K_t^r.
inline Hypergraph complete(int t, int r) {
  detail::require(t >= 0 && t <= kMaxVertices, "complete: t must lie in 0..64");
  detail::require(r >= 1, "complete: r must be at least 1");
  return Hypergraph(r, t, detail::k_subsets(t, r));
}

/// K_t^{r-}: K_t^r without its lexicographically last edge.
inline Hypergraph complete_minus(int t, int r) {
  detail::require(r >= 1 && t >= r && t <= kMaxVertices, "complete_minus: needs t >= r >= 1");
  auto es = detail::k_subsets(t, r);
  es.pop_back();
  return Hypergraph(r, t, std::move(es));
}

/// S_n^3(1): every triple through vertex 1.
inline Hypergraph star(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "star: n must lie in 1..64");
  std::vector<VertexSet> es;
  for (Vertex i = 2; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) es.push_back(VertexSet{1, i, j});
  return Hypergraph(3, n, std::move(es));
}

/// S_{2,t} = {12k : 3 <= k <= t+2}.
inline Hypergraph s2t(int t) {
  detail::require(t >= 1 && t + 2 <= kMaxVertices, "s2t: t must be at least 1");
  std::vector<VertexSet> es;
  for (Vertex k = 3; k <= t + 2; ++k) es.push_back(VertexSet{1, 2, k});
  return Hypergraph(3, t + 2, std::move(es));
}

/// P_t^3 = {123, 345, ..., (2t-1)(2t)(2t+1)}.
inline Hypergraph linear_path(int t) {
  detail::require(t >= 1 && 2 * t + 1 <= kMaxVertices, "linear_path: t must be at least 1");
  std::vector<VertexSet> es;
  for (int k = 1; k <= t; ++k) es.push_back(VertexSet{2 * k - 1, 2 * k, 2 * k + 1});
  return Hypergraph(3, 2 * t + 1, std::move(es));
}

/// C_t^3 = {123, 345, ..., (2t-1)(2t)1}.
inline Hypergraph linear_cycle(int t) {
  detail::require(t >= 2 && 2 * t <= kMaxVertices, "linear_cycle: t must be at least 2");
  std::vector<VertexSet> es;
  for (int k = 1; k < t; ++k) es.push_back(VertexSet{2 * k - 1, 2 * k, 2 * k + 1});
  es.push_back(VertexSet{2 * t - 1, 2 * t, 1});
  return Hypergraph(3, 2 * t, std::move(es));
}

/// Generalized triangle {123, 124, 345}.
inline Hypergraph f5() { return Hypergraph(3, 5, std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}); }

/// O_s on a_i = 2i-1, b_i = 2i with edges a_i b_i a_j and a_i b_i b_j for i != j.
inline Hypergraph o_graph(int s) {
  detail::require(s >= 2 && 2 * s <= kMaxVertices, "o_graph: s must be at least 2");
  std::vector<VertexSet> es;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) {
      if (i == j) continue;
      es.push_back(VertexSet{2 * i - 1, 2 * i, 2 * j - 1});
      es.push_back(VertexSet{2 * i - 1, 2 * i, 2 * j});
    }
  return Hypergraph(3, 2 * s, std::move(es));
}

/// Fano plane: lines {i, i+1, i+3} mod 7 on 1..7.
inline Hypergraph fano() {
  std::vector<VertexSet> es;
  for (int i = 0; i < 7; ++i) es.push_back(VertexSet{i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
  return Hypergraph(3, 7, std::move(es));
}

/// One r-edge on r vertices.
inline Hypergraph single_edge(int r) { return complete(r, r); }

/// Member F_i^r (0 <= i <= r-3) of the family generalizing F5. Vertex layout:
/// 1..r-2 the common core, then a1 = r-1, a2 = r, a3 = r+1, then m_1.. on
/// the highest labels. Edges: e1 = core ∪ {a1,a2}, e2 = core ∪ {a1,a3}, and
/// {a2,a3} ∪ {1..i} ∪ {m_1..m_{r-i-2}}.
inline Hypergraph f_member(int r, int i) {
  detail::require(r >= 3, "f_family: r must be at least 3");
  detail::require(i >= 0 && i <= r - 3, "f_family: member index must lie in 0..r-3");
  const int m_count = r - i - 2;
  const int n = r + 1 + m_count;
  detail::require(n <= kMaxVertices, "f_family: too many vertices");
  VertexSet core;
  for (Vertex v = 1; v <= r - 2; ++v) core.insert(v);
  const Vertex a1 = r - 1, a2 = r, a3 = r + 1;
  VertexSet third{a2, a3};
  for (Vertex v = 1; v <= i; ++v) third.insert(v);
  for (int k = 1; k <= m_count; ++k) third.insert(r + 1 + k);
  return Hypergraph(r, n, std::vector<VertexSet>{core.with(a1).with(a2), core.with(a1).with(a3), third});
}

/// {F_0^r, ..., F_{r-3}^r}; for r = 3 this is {F5}.
inline ForbiddenFamily f_family(int r) {
  detail::require(r >= 3, "f_family: r must be at least 3");
  std::vector<Hypergraph> members;
  for (int i = 0; i <= r - 3; ++i) members.push_back(f_member(r, i));
  return ForbiddenFamily(std::move(members), "Fr" + std::to_string(r));
}

// ---------------------------------------------------------------------------
// Gallery: named constructions addressable from the command line.
// ---------------------------------------------------------------------------

struct GalleryEntry {
  std::string name;
  std::string params;  // human-readable parameter list
  std::string ranges;
  std::string description;
  int arity;  // number of integer parameters
  std::function<Hypergraph(const std::vector<int>&)> build;
};

inline const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = {
      {"K", "t r", "0<=t<=64, r>=1", "complete r-graph K_t^r", 2, [](const auto& p) { return complete(p[0], p[1]); }},
      {"Kminus", "t r", "t>=r>=1", "K_t^r minus its last edge", 2, [](const auto& p) { return complete_minus(p[0], p[1]); }},
      {"Star", "n", "n>=1", "S_n^3(1): all triples through vertex 1", 1, [](const auto& p) { return star(p[0]); }},
      {"S2t", "t", "t>=1", "S_{2,t} = {12k : 3<=k<=t+2}", 1, [](const auto& p) { return s2t(p[0]); }},
      {"P", "t", "t>=1", "3-uniform linear path P_t^3", 1, [](const auto& p) { return linear_path(p[0]); }},
      {"C", "t", "t>=2", "3-uniform linear cycle C_t^3", 1, [](const auto& p) { return linear_cycle(p[0]); }},
      {"F5", "", "-", "generalized triangle {123,124,345}", 0, [](const auto&) { return f5(); }},
      {"O", "s", "s>=2", "O_s on pairs a_i b_i", 1, [](const auto& p) { return o_graph(p[0]); }},
      {"Fano", "", "-", "Fano plane", 0, [](const auto&) { return fano(); }},
      {"E", "r", "r>=1", "single r-edge", 1, [](const auto& p) { return single_edge(p[0]); }},
      {"Fr", "r i", "r>=3, 0<=i<=r-3", "member F_i^r of the F5 generalization", 2, [](const auto& p) { return f_member(p[0], p[1]); }},
  };
  return entries;
}

/// Parsed construction name: gallery base plus integer parameters.
struct NamedConstruction {
  std::string base;
  std::vector<int> params;
};

/// Accepts "NAME p1 p2" style (base + explicit params) or the compact forms
/// K5_3, K4_3- (= Kminus 4 3), C3_3, P2_3, Star6, S2t3, O3, E3, Fr4 (family),
/// Fr4.1 (member), F5, Fano.
inline NamedConstruction parse_construction_name(const std::string& text, std::vector<int> explicit_params = {}) {
  for (const auto& e : gallery())
    if (e.name == text) return {e.name, std::move(explicit_params)};
  if (!explicit_params.empty()) throw std::invalid_argument("unknown construction '" + text + "'");

  static const std::regex compact(R"(^([A-Za-z][A-Za-z0-9]*?)(\d+)(?:[_.](\d+))?(-?)$)");
  std::smatch m;
  if (!std::regex_match(text, m, compact)) throw std::invalid_argument("unknown construction '" + text + "'");
  std::string base = m[1];
  std::vector<int> params{std::stoi(m[2])};
  if (m[3].matched) params.push_back(std::stoi(m[3]));
  const bool minus = m[4].length() > 0;
  if (base == "K" && minus) base = "Kminus";
  else if (minus) throw std::invalid_argument("'-' suffix only applies to K");
  if ((base == "C" || base == "P") && params.size() == 2) {
    if (params[1] != 3) throw std::invalid_argument("linear paths and cycles are 3-uniform only");
    params.pop_back();
  }
  for (const auto& e : gallery())
    if (e.name == base) return {base, params};
  throw std::invalid_argument("unknown construction '" + text + "'");
}

inline Hypergraph build_construction(const NamedConstruction& c) {
  for (const auto& e : gallery()) {
    if (e.name != c.base) continue;
    if (static_cast<int>(c.params.size()) != e.arity)
      throw std::invalid_argument(c.base + " takes " + std::to_string(e.arity) + " parameter(s): " + e.params);
    return e.build(c.params);
  }
  throw std::invalid_argument("unknown construction '" + c.base + "'");
}

/// Resolves a family token: "Fr<r>" gives all of F^r, anything else a
/// singleton family of the named construction.
inline ForbiddenFamily family_by_name(const std::string& text) {
  static const std::regex fr(R"(^Fr(\d+)$)");
  std::smatch m;
  if (std::regex_match(text, m, fr)) return f_family(std::stoi(m[1]));
  return ForbiddenFamily({build_construction(parse_construction_name(text))}, text);
}

// ---------------------------------------------------------------------------
// Known exact Lagrangians.
// ---------------------------------------------------------------------------

struct KnownValue {
  std::string name;
  std::vector<int> params;
  Rational value;
  std::string citation;
};

/// Exact λ for constructions whose value is established in closed form:
/// K_t^2 (clique formula), K_4^3, K_5^3, K_{2t-1}^3 for t >= 3, and O_s.
inline std::optional<KnownValue> known_lambda(const std::string& name, const std::vector<int>& params) {
  if (name == "K" && params.size() == 2) {
    const int t = params[0], r = params[1];
    if (r == 2 && t >= 1)
      return KnownValue{name, params, make_rational(t - 1, 2LL * t), "Motzkin-Straus: (1/2)(1 - 1/t) for K_t^2"};
    if (r == 3 && t == 4) return KnownValue{name, params, make_rational(1, 16), "lambda(K_4^3) = lambda(O_2) = 1/16"};
    if (r == 3 && t == 5) return KnownValue{name, params, make_rational(2, 25), "lambda(K_5^3) = 2/25"};
    if (r == 3 && t >= 5 && t % 2 == 1) {
      const long long tt = (t + 1) / 2;  // t = 2tt - 1
      return KnownValue{name, params, make_rational((2 * tt - 2) * (2 * tt - 3), 6 * (2 * tt - 1) * (2 * tt - 1)),
                        "lambda(K_{2t-1}^3) = (2t-2)(2t-3)/(6(2t-1)^2)"};
    }
    return std::nullopt;
  }
  if (name == "O" && params.size() == 1 && params[0] >= 2)
    return KnownValue{name, params, make_rational(1, 16), "lambda(O_s) = 1/16 for every s >= 2"};
  return std::nullopt;
}

}  // namespace hyperlag

#endif  // HYPERLAG_CONSTRUCTIONS_HPP
