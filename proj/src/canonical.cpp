#include "tridecomp/error.hpp"
#include "tridecomp/graph.hpp"

#include <algorithm>
#include <limits>

namespace tridecomp {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

// Depth-first search over vertex orders. Column j of the bit string holds
// adj(p[0], p[j]) .. adj(p[j-1], p[j]), most significant bit first, so the
// string is a concatenation of columns of increasing length and comparing
// strings lexicographically is comparing the column sequences. Only branches
// whose prefix equals the best prefix seen so far are explored.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      twins_[v] = 0;
      for (int w = 0; w < n_; ++w) {
        if (w == v) continue;
        std::uint64_t mask = ~((std::uint64_t{1} << v) | (std::uint64_t{1} << w));
        if ((g.neighbors(v) & mask) == (g.neighbors(w) & mask)) twins_[v] |= std::uint64_t{1} << w;
      }
    }
    best_.fill(kUnset);
  }

  std::vector<int> run() {
    search(0, 0);
    return {best_perm_.begin(), best_perm_.begin() + n_};
  }

 private:
  void search(int depth, std::uint64_t used) {
    if (depth == n_) {
      if (dirty_) {
        std::copy(perm_.begin(), perm_.begin() + n_, best_perm_.begin());
        dirty_ = false;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (used & bit) continue;
      // A smaller unused twin w gives the same strings: (v w) is an
      // automorphism fixing every placed vertex.
      std::uint64_t lower_unused_twins = twins_[v] & ~used & (bit - 1);
      if (lower_unused_twins) continue;

      std::uint32_t column = 0;
      for (int i = 0; i < depth; ++i) column = (column << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
      if (column > best_[depth]) continue;
      if (column < best_[depth]) {
        best_[depth] = column;
        std::fill(best_.begin() + depth + 1, best_.end(), kUnset);
        dirty_ = true;
      }
      perm_[depth] = v;
      search(depth + 1, used | bit);
    }
  }

  const Graph& g_;
  int n_;
  std::array<std::uint64_t, kMaxCanonicalOrder> twins_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_{};
  std::array<int, kMaxCanonicalOrder> perm_{};
  std::array<int, kMaxCanonicalOrder> best_perm_{};
  bool dirty_ = false;
};

}  // namespace

CanonicalGraph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error(ErrorKind::SizeExceeded, "canonical_form supports at most " +
                                             std::to_string(kMaxCanonicalOrder) + " vertices");
  CanonicalGraph result;
  result.labeling = CanonicalSearch(g).run();
  std::vector<int> position(g.order());
  for (int i = 0; i < g.order(); ++i) position[result.labeling[i]] = i;
  result.graph = relabel(g, position);
  result.cert = write_graph6(result.graph);
  return result;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    // Still enforce the size precondition.
    if (a.order() > kMaxCanonicalOrder || b.order() > kMaxCanonicalOrder)
      throw Error(ErrorKind::SizeExceeded, "are_isomorphic supports at most " +
                                               std::to_string(kMaxCanonicalOrder) + " vertices");
    return false;
  }
  return canonical_form(a).cert == canonical_form(b).cert;
}

std::vector<CanonicalGraph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw Error(ErrorKind::InvalidArgument,
                "enumerate_graphs: n must be in 1.." + std::to_string(kMaxEnumerationOrder));

  // Orderly generation: the first k-1 columns of a canonical k-vertex graph
  // form a canonical (k-1)-vertex graph, so every canonical graph arises
  // exactly once by appending a vertex to a canonical parent.
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Graph child(k);
        for (int u = 0; u < k - 1; ++u)
          for (int v = u + 1; v < k - 1; ++v)
            if (parent.adjacent(u, v)) child.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u)
          if ((mask >> u) & 1) child.add_edge(u, k - 1);
        if (canonical_form(child).graph == child) next.push_back(child);
      }
    }
    level = std::move(next);
  }

  std::vector<CanonicalGraph> result;
  result.reserve(level.size());
  for (Graph& g : level) {
    std::vector<int> identity(g.order());
    for (int i = 0; i < g.order(); ++i) identity[i] = i;
    std::string cert = write_graph6(g);
    result.push_back({std::move(g), std::move(cert), std::move(identity)});
  }
  std::sort(result.begin(), result.end(),
            [](const CanonicalGraph& a, const CanonicalGraph& b) { return a.cert < b.cert; });
  return result;
}

std::map<std::string, std::uint64_t> subgraph_census(const Graph& g, int k) {
  std::map<std::string, std::uint64_t> census;
  for_each_subset(g.order(), k, [&](std::span<const int> subset) {
    ++census[canonical_form(induced_subgraph(g, subset)).cert];
  });
  return census;
}

Rational density(const Graph& f, const Graph& g) {
  const int k = f.order();
  if (k > g.order()) return Rational(0);
  const std::string target = canonical_form(f).cert;
  const int target_edges = f.edge_count();
  std::uint64_t hits = 0;
  for_each_subset(g.order(), k, [&](std::span<const int> subset) {
    Graph h = induced_subgraph(g, subset);
    if (h.edge_count() == target_edges && canonical_form(h).cert == target) ++hits;
  });
  return make_rational(static_cast<unsigned long>(hits), binomial(g.order(), k));
}

}  // namespace tridecomp
