#ifndef TRIDECOMP_EXACTLIN_HPP
#define TRIDECOMP_EXACTLIN_HPP

#include "tridecomp/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tridecomp {

using RationalVector = std::vector<Rational>;

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  static RationalMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }

  bool is_symmetric() const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  int dim_ = 0;
  std::vector<Rational> entries_;
};

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> x);
/// xᵀ M x
Rational quadratic_form(const RationalMatrix& m, std::span<const Rational> x);

/// Pᵀ M P = L D Lᵀ with P given by `permutation` (row i of the permuted
/// matrix is row permutation[i] of M).
///
/// Pivots on the largest remaining diagonal entry, lowest index on ties, and
/// keeps going through negative pivots. If the largest remaining diagonal is
/// zero while the remaining block still has a nonzero entry the matrix cannot
/// be PSD and the factorization stops with `breakdown` set; L and D then only
/// cover the first `steps` columns and `schur` holds the trailing block.
struct LdltResult {
  std::vector<int> permutation;
  RationalMatrix lower;
  RationalVector diagonal;
  int rank = 0;
  int steps = 0;
  bool breakdown = false;
  RationalMatrix schur;
};

LdltResult ldlt(const RationalMatrix& m);

struct PsdVerdict {
  bool psd = false;
  int rank = 0;
  /// When not PSD: a vector x with xᵀ M x < 0.
  std::optional<RationalVector> witness;
};

PsdVerdict is_psd(const RationalMatrix& m);

/// True iff M v = 0 exactly.
bool kernel_check(const RationalMatrix& m, std::span<const Rational> v);

}  // namespace tridecomp

#endif
