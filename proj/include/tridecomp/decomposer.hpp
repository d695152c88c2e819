#ifndef TRIDECOMP_DECOMPOSER_HPP
#define TRIDECOMP_DECOMPOSER_HPP

#include "tridecomp/cliquelp.hpp"

#include <cstdint>
#include <map>

namespace tridecomp {

inline constexpr int kSubsetOrder = 7;

/// How averaging_decomposition chooses the 7-vertex subsets it solves.
struct AveragingPlan {
  enum class Mode { Exhaustive, Sampled };

  Mode mode = Mode::Exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t rng_seed = 0;
  /// Exhaustive mode refuses graphs with more than this many 7-subsets.
  std::uint64_t budget = 10'000'000;
  unsigned jobs = 1;
};

struct AveragingResult {
  Decomposition decomposition;
  /// Sampled mode only: coverage is then approximate, not exactly 1.
  bool approximate = false;
  std::map<Edge, Rational> coverage_residuals;
  Rational max_abs_residual;
  std::uint64_t subsets = 0;
  /// Σ over solved subsets W of π₃,f(g[W]) (counted with multiplicity).
  Rational subset_value_sum;
  /// Number of distinct isomorphism classes solved.
  std::size_t classes = 0;
};

/// Superposes optimal fractional decompositions of the 7-vertex induced
/// subgraphs, each scaled by 1/C(n−2,5). For n < 7 solves the LP on g.
AveragingResult averaging_decomposition(const Graph& g, const AveragingPlan& plan);

struct GreedyResult {
  Decomposition decomposition;
  int triangles = 0;
  int value = 0;
};

/// Removes triangles one at a time, each time picking the lexicographically
/// first triangle whose removal strands the fewest further edges (edges left
/// in no triangle); the remaining edges become K₂ parts.
GreedyResult greedy_decomposition(const Graph& g);

struct CorollaryRecord {
  Rational k;
  int packed = 0;
  bool exact = false;
  Rational bound;
};

/// k = e − n²/4, packed = ν(g) (greedy count above 10 vertices), bound = 2k/3.
CorollaryRecord corollary_check(const Graph& g);

}  // namespace tridecomp

#endif
