#include "tridecomp/simplex.hpp"

#include <doctest.h>

#include <random>

using namespace tridecomp;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

bool feasible(const LinearProgram& lp, const RationalVector& x) {
  for (const Rational& v : x)
    if (v < 0) return false;
  for (int r = 0; r < lp.rows(); ++r) {
    Rational lhs = 0;
    for (int c = 0; c < lp.cols(); ++c) lhs += lp.a[r][c] * x[c];
    if (lhs != lp.b[r]) return false;
  }
  return true;
}

Rational objective(const LinearProgram& lp, const RationalVector& x) {
  Rational z = 0;
  for (int c = 0; c < lp.cols(); ++c) z += lp.c[c] * x[c];
  return z;
}

}  // namespace

TEST_CASE("small LP with slack columns") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3  ->  x=3, y=1, value 11
  LinearProgram lp;
  lp.a = {{1, 1, 1, 0, 0}, {1, 3, 0, 1, 0}, {1, 0, 0, 0, 1}};
  lp.b = {4, 6, 3};
  lp.c = {-3, -2, 0, 0, 0};
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == -11);
  CHECK(s.x[0] == 3);
  CHECK(s.x[1] == 1);
  CHECK(feasible(lp, s.x));
}

TEST_CASE("equality constraints need phase one") {
  // min x + y s.t. x + 2y = 3, 2x + y = 3  ->  x = y = 1
  LinearProgram lp;
  lp.a = {{1, 2}, {2, 1}};
  lp.b = {3, 3};
  lp.c = {1, 1};
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == 2);
  CHECK(s.x == RationalVector{1, 1});
}

TEST_CASE("fractional optimum") {
  // min -x - y s.t. 2x + y + s1 = 2, x + 2y + s2 = 2  ->  x = y = 2/3
  LinearProgram lp;
  lp.a = {{2, 1, 1, 0}, {1, 2, 0, 1}};
  lp.b = {2, 2};
  lp.c = {-1, -1, 0, 0};
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == q(-4, 3));
  CHECK(s.x[0] == q(2, 3));
  CHECK(s.x[1] == q(2, 3));
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram infeasible;
  infeasible.a = {{1, 1}};
  infeasible.b = {-1};
  infeasible.c = {0, 0};
  CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

  LinearProgram conflicting;
  conflicting.a = {{1, 0}, {1, 0}};
  conflicting.b = {1, 2};
  conflicting.c = {0, 0};
  CHECK(solve_lp(conflicting).status == LpStatus::Infeasible);

  LinearProgram unbounded;  // min -x s.t. x - y = 0
  unbounded.a = {{1, -1}};
  unbounded.b = {0};
  unbounded.c = {-1, 0};
  CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("redundant equality rows") {
  LinearProgram lp;
  lp.a = {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
  lp.b = {2, 4, 1};
  lp.c = {1, 2, 0};
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == 2);
  CHECK(feasible(lp, s.x));
}

TEST_CASE("degenerate cycling example terminates at the optimum") {
  // Beale's example; Dantzig's rule cycles on it, Bland's rule does not.
  LinearProgram lp;
  lp.a = {
      {1, 0, 0, q(1, 4), -8, -1, 9},
      {0, 1, 0, q(1, 2), -12, q(-1, 2), 3},
      {0, 0, 1, 0, 0, 1, 0},
  };
  lp.b = {0, 0, 1};
  lp.c = {0, 0, 0, q(-3, 4), 20, q(-1, 2), 6};
  const LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective == q(-5, 4));
  CHECK(feasible(lp, s.x));
  CHECK(objective(lp, s.x) == s.objective);
}

TEST_CASE("random bounded LPs: feasible optimum no worse than any sampled vertex") {
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> coef(0, 4);
  std::uniform_int_distribution<int> cost(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 4, n = 2 + trial % 5;
    // Packing rows Ax + s = b with A >= 0 and b > 0 keep the region bounded
    // once every column has a positive entry.
    LinearProgram lp;
    lp.a.assign(m, RationalVector(n + m));
    lp.b.assign(m, 0);
    lp.c.assign(n + m, 0);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) lp.a[r][c] = coef(rng);
      lp.a[r][n + r] = 1;
      lp.b[r] = 1 + coef(rng);
    }
    for (int c = 0; c < n; ++c) {
      lp.a[c % m][c] += 1;
      lp.c[c] = cost(rng);
    }
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(feasible(lp, s.x));
    CHECK(objective(lp, s.x) == s.objective);
    // x = 0 (all slack) is feasible, so the optimum cannot be positive.
    CHECK(s.objective <= 0);
    // Single-coordinate vertices: push one variable to its bound.
    for (int c = 0; c < n; ++c) {
      Rational t = -1;
      for (int r = 0; r < m; ++r)
        if (lp.a[r][c] > 0) {
          Rational lim = lp.b[r] / lp.a[r][c];
          if (t < 0 || lim < t) t = lim;
        }
      CHECK(s.objective <= lp.c[c] * t);
    }
  }
}
