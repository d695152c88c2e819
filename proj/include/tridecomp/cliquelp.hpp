#ifndef TRIDECOMP_CLIQUELP_HPP
#define TRIDECOMP_CLIQUELP_HPP

#include "tridecomp/graph.hpp"

#include <map>
#include <vector>

namespace tridecomp {

/// Nonnegative weights on edges and triangles. A valid 3-decomposition covers
/// every edge of the graph with total weight exactly 1.
struct Decomposition {
  int order = 0;
  std::map<Edge, Rational> edge_weights;
  std::map<Triangle, Rational> triangle_weights;

  /// Σ 2·w(e) + Σ 3·w(t)
  Rational total_weight() const;
};

/// Per-edge coverage w(e) + Σ_{t ∋ e} w(t) for every edge of g.
std::map<Edge, Rational> coverage(const Graph& g, const Decomposition& d);

/// Nonnegative weights, supported on edges/triangles of g, covering each edge exactly once.
bool is_exact_decomposition(const Graph& g, const Decomposition& d);

struct FractionalPacking {
  Rational value;
  std::map<Triangle, Rational> weights;
};

struct IntegerPacking {
  int value = 0;
  std::vector<Triangle> triangles;
};

inline constexpr int kMaxLpOrder = 16;
inline constexpr int kMaxExactPackingOrder = 10;

/// max Σ w(t) s.t. Σ_{t ∋ e} w(t) <= 1, w >= 0.
FractionalPacking max_fractional_triangle_packing(const Graph& g);

struct DecompositionLpResult {
  Rational value;
  Decomposition decomposition;
};

/// min Σ 2 x_e + 3 y_t s.t. x_e + Σ_{t ∋ e} y_t = 1, solved directly.
DecompositionLpResult decomposition_lp(const Graph& g);

struct FractionalResult {
  Rational value;
  Rational packing_value;
  Decomposition decomposition;
};

/// π₃,f(g) = 2e − 3ν_f(g). The reduced packing LP supplies the value and the
/// witness; the direct decomposition LP must agree, or Error(Internal) is thrown.
FractionalResult pi3f(const Graph& g);

/// Maximum set of pairwise edge-disjoint triangles (branch and bound).
IntegerPacking max_integer_triangle_packing(const Graph& g);

struct IntegerResult {
  int value = 0;
  IntegerPacking packing;
  Decomposition decomposition;
};

/// π₃(g) = 2e − 3ν(g), witnessed by the packing plus the leftover edges.
IntegerResult pi3(const Graph& g);

/// Decomposition using the given disjoint triangles at weight 1 and every
/// other edge at weight 1.
Decomposition decomposition_from_triangles(const Graph& g, const std::vector<Triangle>& triangles);

}  // namespace tridecomp

#endif
