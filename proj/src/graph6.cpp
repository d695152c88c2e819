#include "tridecomp/error.hpp"
#include "tridecomp/graph.hpp"

namespace tridecomp {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

int sextet(char c) {
  int value = static_cast<unsigned char>(c);
  if (value < kOffset || value > kMaxByte)
    throw Error(ErrorKind::Parse, "graph6: character " + std::to_string(value) +
                                      " outside 63..126");
  return value - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::Parse, "graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~')
      throw Error(ErrorKind::Parse, "graph6: malformed header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw Error(ErrorKind::Parse, "graph6: malformed header");
    pos = 4;
  }
  if (n > Graph::kMaxVertices)
    throw Error(ErrorKind::SizeExceeded, "graph6: order " + std::to_string(n) + " exceeds 64");

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - pos < groups) throw Error(ErrorKind::Parse, "graph6: truncated bit field");
  if (text.size() - pos > groups) throw Error(ErrorKind::Parse, "graph6: trailing characters");

  Graph g(order);
  std::size_t bit = 0;
  for (int v = 1; v < order; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int group = sextet(text[pos + bit / 6]);
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kOffset + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  }
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + group));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - filled))));
  return out;
}

}  // namespace tridecomp
