#ifndef TRIDECOMP_SIMPLEX_HPP
#define TRIDECOMP_SIMPLEX_HPP

#include "tridecomp/exactlin.hpp"

#include <vector>

namespace tridecomp {

/// minimize cᵀx subject to A x = b, x >= 0.
struct LinearProgram {
  std::vector<RationalVector> a;
  RationalVector b;
  RationalVector c;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return static_cast<int>(c.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  RationalVector x;
  int pivots = 0;
};

/// Dense two-phase tableau simplex over exact rationals with Bland's rule.
/// Rows that already own a unit column with nonnegative right-hand side use
/// it as their starting basic variable; the rest get an artificial.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace tridecomp

#endif
