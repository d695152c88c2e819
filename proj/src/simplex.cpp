#include "tridecomp/simplex.hpp"

#include "tridecomp/error.hpp"

namespace tridecomp {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : m_(lp.rows()), n_(lp.cols()) {
    for (const auto& row : lp.a)
      if (static_cast<int>(row.size()) != n_)
        throw Error(ErrorKind::InvalidArgument, "LP row width does not match cost vector");
    if (static_cast<int>(lp.b.size()) != m_)
      throw Error(ErrorKind::InvalidArgument, "LP right-hand side has wrong length");

    std::vector<RationalVector> a = lp.a;
    RationalVector b = lp.b;
    for (int r = 0; r < m_; ++r)
      if (sgn(b[r]) < 0) {
        for (auto& v : a[r]) v = -v;
        b[r] = -b[r];
      }

    // Reuse unit columns as the starting basis where possible.
    basis_.assign(m_, -1);
    for (int j = 0; j < n_; ++j) {
      int unit_row = -1;
      bool unit = true;
      for (int r = 0; r < m_ && unit; ++r) {
        int s = sgn(a[r][j]);
        if (s == 0) continue;
        if (a[r][j] == 1 && unit_row < 0)
          unit_row = r;
        else
          unit = false;
      }
      if (unit && unit_row >= 0 && basis_[unit_row] < 0) {
        basis_[unit_row] = j;
      }
    }
    int artificials = 0;
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < 0) basis_[r] = n_ + artificials++;
    width_ = n_ + artificials;

    rows_.assign(m_, RationalVector(width_ + 1));
    for (int r = 0; r < m_; ++r) {
      for (int j = 0; j < n_; ++j) rows_[r][j] = a[r][j];
      if (basis_[r] >= n_) rows_[r][basis_[r]] = 1;
      rows_[r][width_] = b[r];
    }
    allowed_.assign(width_, true);
  }

  int artificial_count() const { return width_ - n_; }

  // Loads reduced costs for `costs` (length width_) against the current basis.
  void price(const RationalVector& costs) {
    objective_.assign(width_ + 1, Rational(0));
    for (int j = 0; j < width_; ++j) objective_[j] = costs[j];
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = costs[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= width_; ++j)
        if (sgn(rows_[r][j]) != 0) objective_[j] -= cb * rows_[r][j];
    }
  }

  // Runs Bland's rule to optimality. Returns false when unbounded.
  bool optimize(int& pivots) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < width_; ++j)
        if (allowed_[j] && sgn(objective_[j]) < 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;

      int leaving = -1;
      Rational best_ratio;
      for (int r = 0; r < m_; ++r) {
        if (sgn(rows_[r][entering]) <= 0) continue;
        Rational ratio = rows_[r][width_] / rows_[r][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
      ++pivots;
    }
  }

  void pivot(int p, int q) {
    RationalVector& prow = rows_[p];
    const Rational inv = 1 / prow[q];
    std::vector<int> support;
    for (int j = 0; j <= width_; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        support.push_back(j);
      }
    auto eliminate = [&](RationalVector& row) {
      if (sgn(row[q]) == 0) return;
      const Rational factor = row[q];
      for (int j : support) row[j] -= factor * prow[j];
    };
    for (int r = 0; r < m_; ++r)
      if (r != p) eliminate(rows_[r]);
    eliminate(objective_);
    basis_[p] = q;
  }

  // After phase one: pivot zero-level artificials out where a structural
  // column allows it, then forbid artificials from re-entering.
  void retire_artificials(int& pivots) {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (int j = 0; j < n_; ++j)
        if (sgn(rows_[r][j]) != 0) {
          pivot(r, j);
          ++pivots;
          break;
        }
    }
    for (int j = n_; j < width_; ++j) allowed_[j] = false;
  }

  Rational objective_value() const { return -objective_[width_]; }

  RationalVector solution() const {
    RationalVector x(n_);
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][width_];
    return x;
  }

  int width() const { return width_; }
  int structural() const { return n_; }

 private:
  int m_;
  int n_;
  int width_ = 0;
  std::vector<RationalVector> rows_;
  RationalVector objective_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  Tableau t(lp);
  LpSolution out;

  if (t.artificial_count() > 0) {
    RationalVector phase_one(t.width(), Rational(0));
    for (int j = t.structural(); j < t.width(); ++j) phase_one[j] = 1;
    t.price(phase_one);
    t.optimize(out.pivots);
    if (sgn(t.objective_value()) > 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    t.retire_artificials(out.pivots);
  }

  RationalVector costs(t.width(), Rational(0));
  for (int j = 0; j < t.structural(); ++j) costs[j] = lp.c[j];
  t.price(costs);
  if (!t.optimize(out.pivots)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.objective = t.objective_value();
  out.x = t.solution();
  return out;
}

}  // namespace tridecomp
