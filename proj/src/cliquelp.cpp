#include "tridecomp/cliquelp.hpp"

#include "tridecomp/error.hpp"
#include "tridecomp/simplex.hpp"

#include <algorithm>
#include <bit>

namespace tridecomp {

Rational Decomposition::total_weight() const {
  Rational total;
  for (const auto& [e, w] : edge_weights) total += 2 * w;
  for (const auto& [t, w] : triangle_weights) total += 3 * w;
  return total;
}

std::map<Edge, Rational> coverage(const Graph& g, const Decomposition& d) {
  std::map<Edge, Rational> cov;
  for (const Edge& e : list_edges(g)) cov[e] = 0;
  auto add = [&](Edge e, const Rational& w) {
    auto it = cov.find(e);
    if (it == cov.end()) throw Error(ErrorKind::InvalidArgument, "decomposition uses a non-edge");
    it->second += w;
  };
  for (const auto& [e, w] : d.edge_weights) add(e, w);
  for (const auto& [t, w] : d.triangle_weights) {
    add({t.a, t.b}, w);
    add({t.a, t.c}, w);
    add({t.b, t.c}, w);
  }
  return cov;
}

bool is_exact_decomposition(const Graph& g, const Decomposition& d) {
  for (const auto& [e, w] : d.edge_weights)
    if (sgn(w) < 0) return false;
  for (const auto& [t, w] : d.triangle_weights) {
    if (sgn(w) < 0) return false;
    if (!g.adjacent(t.a, t.b) || !g.adjacent(t.a, t.c) || !g.adjacent(t.b, t.c)) return false;
  }
  try {
    for (const auto& [e, c] : coverage(g, d))
      if (c != 1) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

namespace {

void require_lp_size(const Graph& g) {
  if (g.order() > kMaxLpOrder)
    throw Error(ErrorKind::SizeExceeded, "triangle LPs support at most " +
                                             std::to_string(kMaxLpOrder) + " vertices");
}

std::map<Edge, int> edge_index(const std::vector<Edge>& edges) {
  std::map<Edge, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  return index;
}

std::array<int, 3> triangle_edges(const Triangle& t, const std::map<Edge, int>& index) {
  return {index.at({t.a, t.b}), index.at({t.a, t.c}), index.at({t.b, t.c})};
}

}  // namespace

FractionalPacking max_fractional_triangle_packing(const Graph& g) {
  require_lp_size(g);
  const auto edges = list_edges(g);
  const auto triangles = list_triangles(g);
  FractionalPacking out;
  if (triangles.empty()) return out;

  // Variables: one per triangle, then one slack per edge.
  const auto index = edge_index(edges);
  const int m = static_cast<int>(edges.size());
  const int t = static_cast<int>(triangles.size());
  LinearProgram lp;
  lp.a.assign(m, RationalVector(t + m));
  lp.b.assign(m, Rational(1));
  lp.c.assign(t + m, Rational(0));
  for (int k = 0; k < t; ++k) {
    lp.c[k] = -1;
    for (int e : triangle_edges(triangles[k], index)) lp.a[e][k] = 1;
  }
  for (int e = 0; e < m; ++e) lp.a[e][t + e] = 1;

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw Error(ErrorKind::Internal, "packing LP not optimal for " + write_graph6(g));
  out.value = -sol.objective;
  for (int k = 0; k < t; ++k)
    if (sgn(sol.x[k]) != 0) out.weights[triangles[k]] = sol.x[k];
  return out;
}

DecompositionLpResult decomposition_lp(const Graph& g) {
  require_lp_size(g);
  const auto edges = list_edges(g);
  const auto triangles = list_triangles(g);
  const auto index = edge_index(edges);
  const int m = static_cast<int>(edges.size());
  const int t = static_cast<int>(triangles.size());

  // Variables: one per edge, then one per triangle.
  LinearProgram lp;
  lp.a.assign(m, RationalVector(m + t));
  lp.b.assign(m, Rational(1));
  lp.c.assign(m + t, Rational(0));
  for (int e = 0; e < m; ++e) {
    lp.a[e][e] = 1;
    lp.c[e] = 2;
  }
  for (int k = 0; k < t; ++k) {
    lp.c[m + k] = 3;
    for (int e : triangle_edges(triangles[k], index)) lp.a[e][m + k] = 1;
  }

  DecompositionLpResult out;
  out.decomposition.order = g.order();
  if (m == 0) return out;
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw Error(ErrorKind::Internal, "decomposition LP not optimal for " + write_graph6(g));
  out.value = sol.objective;
  for (int e = 0; e < m; ++e)
    if (sgn(sol.x[e]) != 0) out.decomposition.edge_weights[edges[e]] = sol.x[e];
  for (int k = 0; k < t; ++k)
    if (sgn(sol.x[m + k]) != 0) out.decomposition.triangle_weights[triangles[k]] = sol.x[m + k];
  return out;
}

FractionalResult pi3f(const Graph& g) {
  FractionalPacking packing = max_fractional_triangle_packing(g);
  FractionalResult out;
  out.packing_value = packing.value;
  out.value = 2 * g.edge_count() - 3 * packing.value;

  out.decomposition.order = g.order();
  out.decomposition.triangle_weights = packing.weights;
  std::map<Edge, Rational> covered = coverage(g, out.decomposition);
  for (const auto& [e, c] : covered) {
    Rational rest = 1 - c;
    if (sgn(rest) != 0) out.decomposition.edge_weights[e] = rest;
  }

  DecompositionLpResult direct = decomposition_lp(g);
  if (direct.value != out.value)
    throw Error(ErrorKind::Internal, "decomposition LP (" + to_string(direct.value) +
                                         ") and packing LP (" + to_string(out.value) +
                                         ") disagree on " + write_graph6(g));
  return out;
}

namespace {

class PackingSearch {
 public:
  explicit PackingSearch(const Graph& g) : rest_(g) {}

  std::vector<Triangle> run() {
    seed_with_greedy();
    search();
    return best_;
  }

 private:
  void seed_with_greedy() {
    Graph rest = rest_;
    for (const Triangle& t : list_triangles(rest_))
      if (rest.adjacent(t.a, t.b) && rest.adjacent(t.a, t.c) && rest.adjacent(t.b, t.c)) {
        best_.push_back(t);
        rest.remove_edge(t.a, t.b);
        rest.remove_edge(t.a, t.c);
        rest.remove_edge(t.b, t.c);
      }
  }

  // First edge, in lexicographic order, that still lies in a triangle.
  bool branch_edge(int& u, int& v) const {
    for (u = 0; u < rest_.order(); ++u)
      for (v = u + 1; v < rest_.order(); ++v)
        if (rest_.adjacent(u, v) && (rest_.neighbors(u) & rest_.neighbors(v))) return true;
    return false;
  }

  int cheap_bound() const {
    int live_edges = 0;
    int pair_slots = 0;
    for (int u = 0; u < rest_.order(); ++u) {
      int live_degree = 0;
      for (int v = 0; v < rest_.order(); ++v)
        if (v != u && rest_.adjacent(u, v) && (rest_.neighbors(u) & rest_.neighbors(v))) {
          ++live_degree;
          if (u < v) ++live_edges;
        }
      pair_slots += live_degree / 2;
    }
    return std::min(live_edges / 3, pair_slots / 3);
  }

  bool can_improve() const {
    const int need = static_cast<int>(best_.size()) - static_cast<int>(current_.size());
    if (cheap_bound() <= need) return false;
    Rational lp = max_fractional_triangle_packing(rest_).value;
    mpz_class floor_lp;
    mpz_fdiv_q(floor_lp.get_mpz_t(), lp.get_num_mpz_t(), lp.get_den_mpz_t());
    return floor_lp > need;
  }

  void search() {
    int u = 0, v = 0;
    if (!branch_edge(u, v)) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (!can_improve()) return;

    std::uint64_t common = rest_.neighbors(u) & rest_.neighbors(v);
    while (common) {
      int w = std::countr_zero(common);
      common &= common - 1;
      std::array<int, 3> t{u, v, w};
      std::sort(t.begin(), t.end());
      rest_.remove_edge(u, v);
      rest_.remove_edge(u, w);
      rest_.remove_edge(v, w);
      current_.push_back({t[0], t[1], t[2]});
      search();
      current_.pop_back();
      rest_.add_edge(u, v);
      rest_.add_edge(u, w);
      rest_.add_edge(v, w);
    }
    rest_.remove_edge(u, v);
    search();
    rest_.add_edge(u, v);
  }

  Graph rest_;
  std::vector<Triangle> current_;
  std::vector<Triangle> best_;
};

}  // namespace

IntegerPacking max_integer_triangle_packing(const Graph& g) {
  if (g.order() > kMaxExactPackingOrder)
    throw Error(ErrorKind::SizeExceeded, "exact triangle packing supports at most " +
                                             std::to_string(kMaxExactPackingOrder) + " vertices");
  IntegerPacking out;
  out.triangles = PackingSearch(g).run();
  std::sort(out.triangles.begin(), out.triangles.end());
  out.value = static_cast<int>(out.triangles.size());
  return out;
}

Decomposition decomposition_from_triangles(const Graph& g, const std::vector<Triangle>& triangles) {
  Decomposition d;
  d.order = g.order();
  Graph rest = g;
  for (const Triangle& t : triangles) {
    if (!rest.adjacent(t.a, t.b) || !rest.adjacent(t.a, t.c) || !rest.adjacent(t.b, t.c))
      throw Error(ErrorKind::InvalidArgument, "triangles are not edge-disjoint in the graph");
    rest.remove_edge(t.a, t.b);
    rest.remove_edge(t.a, t.c);
    rest.remove_edge(t.b, t.c);
    d.triangle_weights[t] = 1;
  }
  for (const Edge& e : list_edges(rest)) d.edge_weights[e] = 1;
  return d;
}

IntegerResult pi3(const Graph& g) {
  IntegerResult out;
  out.packing = max_integer_triangle_packing(g);
  out.value = 2 * g.edge_count() - 3 * out.packing.value;
  out.decomposition = decomposition_from_triangles(g, out.packing.triangles);
  return out;
}

}  // namespace tridecomp
