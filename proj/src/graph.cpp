#include "tridecomp/graph.hpp"

#include "tridecomp/error.hpp"

#include <bit>
#include <fstream>

namespace tridecomp {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorKind::SizeExceeded,
                "graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

int Graph::degree(int v) const noexcept { return std::popcount(adj_[v]); }

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
  if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loops are not allowed");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

bool Graph::operator==(const Graph& other) const noexcept {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != other.adj_[v]) return false;
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  Graph g(n);
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw Error(ErrorKind::InvalidArgument, "permutation size does not match graph order");
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<Edge> list_edges(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) edges.push_back({u, v});
  return edges;
}

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> triangles;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < g.order(); ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) triangles.push_back({a, b, c});
    }
  return triangles;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.order())
      throw Error(ErrorKind::InvalidArgument,
                  "induced_subgraph: vertex " + std::to_string(v) + " out of range");
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j])
        throw Error(ErrorKind::InvalidArgument, "induced_subgraph: repeated vertex");
      if (g.adjacent(vertices[i], vertices[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return h;
}

void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    if (s.empty()) continue;
    try {
      graphs.push_back(parse_graph6(s));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace tridecomp
