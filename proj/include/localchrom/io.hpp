#pragma once

#include "localchrom/graph.hpp"
#include "localchrom/rational.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace localchrom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct LineReader {
  std::vector<std::string> lines;
  std::vector<int> numbers;  // 1-based source line of each entry
  std::size_t pos = 0;

  explicit LineReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines.push_back(line);
      numbers.push_back(lineno);
    }
  }

  bool done() const { return pos >= lines.size(); }

  std::vector<std::string> next_tokens(std::size_t expected, const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of input: expected ") + what);
    std::istringstream in(lines[pos]);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() != expected)
      throw ParseError("line " + std::to_string(numbers[pos]) + ": expected " + what);
    ++pos;
    return tokens;
  }

  int line() const { return numbers[pos - 1]; }

  int to_int(const std::string& tok, const char* what) const {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
      throw ParseError("line " + std::to_string(line()) + ": malformed " + what + " '" + tok + "'");
    return std::stoi(tok);
  }
};

inline Graph parse_graph_body(LineReader& in) {
  auto header = in.next_tokens(2, "header 'n m'");
  int n = in.to_int(header[0], "vertex count");
  int m = in.to_int(header[1], "edge count");
  if (n > kMaxVertices)
    throw ParseError("vertex count " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(kMaxVertices));
  Graph g(n);
  for (int e = 0; e < m; ++e) {
    auto tok = in.next_tokens(2, "edge 'u v'");
    int u = in.to_int(tok[0], "vertex");
    int v = in.to_int(tok[1], "vertex");
    std::string where = "line " + std::to_string(in.line()) + ": ";
    if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(where + "edge must be written with u < v");
    if (v >= n) throw ParseError(where + "vertex index " + std::to_string(v) + " out of range");
    if (g.has_edge(u, v)) throw ParseError(where + "duplicate edge " + tok[0] + " " + tok[1]);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace detail

/// Format: "n m", then m lines "u v" with 0 <= u < v < n.
inline Graph parse_graph(std::string_view text) {
  detail::LineReader in(text);
  Graph g = detail::parse_graph_body(in);
  if (!in.done()) throw ParseError("line " + std::to_string(in.numbers[in.pos]) + ": trailing content");
  return g;
}

/// The graph format followed by n lines "v p/q" listing vertices in order.
inline WeightedGraph parse_weighted_graph(std::string_view text) {
  detail::LineReader in(text);
  Graph g = detail::parse_graph_body(in);
  std::vector<Rational> w(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto tok = in.next_tokens(2, "weight 'v p/q'");
    if (in.to_int(tok[0], "vertex") != v)
      throw ParseError("line " + std::to_string(in.line()) + ": weights must list vertices 0..n-1 in order");
    try {
      w[v] = parse_rational(tok[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(in.line()) + ": " + e.what());
    }
    if (w[v] < 0) throw ParseError("line " + std::to_string(in.line()) + ": negative weight");
  }
  if (!in.done()) throw ParseError("line " + std::to_string(in.numbers[in.pos]) + ": trailing content");
  return WeightedGraph(std::move(g), std::move(w));
}

inline std::string emit_graph(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string emit_weighted_graph(const WeightedGraph& wg) {
  std::string out = emit_graph(wg.graph());
  for (int v = 0; v < wg.graph().order(); ++v) out += std::to_string(v) + " " + format_rational(wg.weight(v)) + "\n";
  return out;
}

/// Single-line form "n m u1 v1 u2 v2 ...".
inline std::string emit_graph_compact(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size());
  for (auto [u, v] : edges) out += " " + std::to_string(u) + " " + std::to_string(v);
  return out;
}

inline Graph parse_graph_compact(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string text, tok;
  int count = 0;
  while (in >> tok) {
    if (tok.find('=') != std::string::npos) break;
    text += tok;
    text += (count == 1 || (count > 1 && count % 2 == 1)) ? '\n' : ' ';
    ++count;
  }
  return parse_graph(text);
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace localchrom
