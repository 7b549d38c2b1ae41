#include "rgl/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "rgl/errors.hpp"

namespace rgl {
namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == ';') throw ParseError("graph6: sparse6/digraph6 not supported");
  for (char ch : text) {
    if (ch < kBias || ch > 126) throw ParseError("graph6: byte outside 63..126");
  }
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw CapacityError("graph6: order beyond 64 vertices");
    if (text.size() < 4) throw ParseError("graph6: truncated size field");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices) throw CapacityError("graph6: order " + std::to_string(n) + " beyond 64 vertices");
  const long long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + static_cast<std::size_t>(k / 6)] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = text.back() - kBias;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: non-zero padding bits");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::string body;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    body.append(t).push_back('\n');
  }
  auto toks = tokens(body);
  if (toks.size() < 2) throw ParseError("edge list: missing \"n m\" header");
  long long n = 0, m = 0;
  if (!parse_int(toks[0], n) || !parse_int(toks[1], m) || n < 0 || m < 0)
    throw ParseError("edge list: malformed header");
  if (n > kMaxVertices) throw CapacityError("edge list: order " + std::to_string(n) + " beyond 64 vertices");
  if (toks.size() != static_cast<std::size_t>(2 + 2 * m))
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, body has " +
                     std::to_string((toks.size() - 2) / 2));
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!parse_int(toks[2 + 2 * i], u) || !parse_int(toks[3 + 2 * i], v))
      throw ParseError("edge list: malformed edge line " + std::to_string(i + 1));
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
    if (u == v) throw ParseError("edge list: self-loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw ParseError("edge list: duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty graph input");
  std::string_view first = t.substr(0, t.find('\n'));
  auto toks = tokens(first);
  long long a = 0, b = 0;
  if (toks.size() == 2 && parse_int(toks[0], a) && parse_int(toks[1], b)) return from_edge_list(t);
  if (t.find('\n') != std::string_view::npos) throw ParseError("graph6: expected a single graph");
  return from_graph6(t);
}

}  // namespace rgl
