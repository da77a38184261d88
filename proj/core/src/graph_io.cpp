#include "chromcon/graph_io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace chromcon {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int group = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      group <<= 1;
      if (i + j < bits.size() && bits[i + j]) group |= 1;
    }
    out.push_back(static_cast<char>(group + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 63 <= n <= 64 here; the three-byte order header covers it.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v));
  append_bits(out, bits);
  return out;
}

Graph from_graph6(const std::string& line) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated input");
    const unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };

  long long n;
  if (!line.empty() && line[0] == '~') {
    ++pos;
    if (pos < line.size() && line[pos] == '~')
      throw std::invalid_argument("graph6: eight-byte order header not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  } else {
    n = next();
  }
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6: order exceeds supported maximum");

  Graph g(static_cast<int>(n));
  const long long bit_count = n * (n - 1) / 2;
  long long bit = 0;
  int buffer = 0, buffered = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (buffered == 0) {
        buffer = next();
        buffered = 6;
      }
      if ((buffer >> (buffered - 1)) & 1) g.add_edge(u, v);
      --buffered;
      ++bit;
    }
  }
  (void)bit_count;
  // Padding bits must be zero and nothing may trail the encoding.
  if (buffered > 0 && (buffer & ((1 << buffered) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
  Graph g(n);
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
    g.add_edge(u, v);
  }
  std::string leftover;
  if (in >> leftover) throw std::invalid_argument("edge list: trailing tokens");
  return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace chromcon
