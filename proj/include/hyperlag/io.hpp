#ifndef HYPERLAG_IO_HPP
#define HYPERLAG_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

/// Malformed hypergraph text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the ".hg" text format:
///   # comment lines
///   r n
///   v1 v2 ... vr      (one edge per line, labels in 1..n)
inline Hypergraph parse_hg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int r = 0, n = 0;
  std::vector<VertexSet> edges;
  auto fail = [&](const std::string& why) { throw ParseError("line " + std::to_string(line_no) + ": " + why); };

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<long> nums;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        fail("expected an integer, got '" + tok + "'");
      }
      if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
      nums.push_back(value);
    }
    if (!have_header) {
      if (nums.size() != 2) fail("header must be 'r n'");
      if (nums[0] < 0 || nums[1] < 0 || nums[1] > kMaxVertices) fail("header values out of range");
      r = static_cast<int>(nums[0]);
      n = static_cast<int>(nums[1]);
      have_header = true;
      continue;
    }
    if (static_cast<int>(nums.size()) != r) fail("edge must list exactly " + std::to_string(r) + " vertices");
    VertexSet e;
    for (long v : nums) {
      if (v < 1 || v > n) fail("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (e.contains(static_cast<Vertex>(v))) fail("edge repeats vertex " + std::to_string(v));
      e.insert(static_cast<Vertex>(v));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing 'r n' header");
  try {
    return Hypergraph(r, n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

/// Canonical-sorted text; `comment` lines (if any) are emitted first with '#'.
inline std::string to_hg(const Hypergraph& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  out << g.uniformity() << ' ' << g.vertex_count() << '\n';
  for (VertexSet e : g.edges()) {
    bool first = true;
    e.for_each([&](Vertex v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const Hypergraph& g) {
  return nlohmann::json{{"r", g.uniformity()}, {"n", g.vertex_count()}, {"edges", g.edge_lists()}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    const int r = j.at("r").get<int>();
    const int n = j.at("n").get<int>();
    auto edges = j.at("edges").get<std::vector<std::vector<Vertex>>>();
    for (const auto& e : edges)
      for (Vertex v : e)
        if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return Hypergraph(r, n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad hypergraph JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

/// Text or JSON, decided by the first non-blank character.
inline Hypergraph parse_hypergraph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(std::string("bad JSON: ") + ex.what());
    }
    return hypergraph_from_json(j);
  }
  return parse_hg(text);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Hypergraph read_hypergraph(const std::string& path) { return parse_hypergraph(read_text_file(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace hyperlag

#endif  // HYPERLAG_IO_HPP
