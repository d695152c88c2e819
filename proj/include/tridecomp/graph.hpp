#ifndef TRIDECOMP_GRAPH_HPP
#define TRIDECOMP_GRAPH_HPP

#include "tridecomp/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tridecomp {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;
  auto operator<=>(const Triangle&) const = default;
};

/// Simple undirected graph on at most 64 vertices stored as neighbor bitsets.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  std::uint64_t neighbors(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept;
  int edge_count() const noexcept;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph& other) const noexcept;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph complement(const Graph& g);

/// Relabels so that vertex v of `g` becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Lexicographic by (u, v) with u < v.
std::vector<Edge> list_edges(const Graph& g);
/// Lexicographic by (a, b, c) with a < b < c.
std::vector<Triangle> list_triangles(const Graph& g);
/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Calls `fn` with every k-element subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn);

// graph6 ------------------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
/// Reads one graph per non-empty line; a leading ">>graph6<<" marker is skipped.
std::vector<Graph> read_graph6_file(const std::string& path);

// Canonical forms -----------------------------------------------------------

inline constexpr int kMaxCanonicalOrder = 12;

struct CanonicalGraph {
  Graph graph;
  /// graph6 encoding of `graph`; equal iff the inputs are isomorphic.
  std::string cert;
  /// labeling[i] is the input vertex placed at canonical position i.
  std::vector<int> labeling;
};

/// Isomorph whose upper-triangle bit string, read in graph6 column order, is
/// lexicographically smallest over all vertex permutations.
CanonicalGraph canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

inline constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class, sorted by cert.
std::vector<CanonicalGraph> enumerate_graphs(int n);

// Densities -----------------------------------------------------------------

/// Number of k-subsets of g inducing each isomorphism class, keyed by cert.
std::map<std::string, std::uint64_t> subgraph_census(const Graph& g, int k);

/// Probability that a uniform |f|-subset of g induces a copy of f.
Rational density(const Graph& f, const Graph& g);

}  // namespace tridecomp

#endif
