#include "penta/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <vector>

#include "penta/errors.hpp"

namespace penta {

namespace {

constexpr char kBias = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  if (c < 63 || c > 126) throw ParseError(std::string("graph6: invalid byte '") + c + "'");
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 8;
  }
  if (n > 100000) throw ParseError("graph6: graph too large");
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (pairs + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.push_back({i, j});
    }
  }
  for (; k < need * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - static_cast<int>(k % 6))) & 1) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: missing or invalid \"n m\" header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(is >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string rest;
  if (is >> rest) throw ParseError("edge list: trailing data after " + std::to_string(m) + " edges");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const UsageError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

GraphFormat detect_format(std::string_view text) {
  text = trim(text);
  auto eol = text.find('\n');
  auto first = trim(text.substr(0, eol));
  std::istringstream is{std::string(first)};
  long long a = 0;
  long long b = 0;
  std::string extra;
  if (is >> a >> b && !(is >> extra)) return GraphFormat::edgelist;
  return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edgelist ? from_edge_list(text) : from_graph6(text);
}

Graph parse_graph(std::string_view text) { return parse_graph(text, detect_format(text)); }

}  // namespace penta
