#include "tridecomp/exactlin.hpp"

#include "tridecomp/error.hpp"

#include <utility>

namespace tridecomp {

RationalMatrix RationalMatrix::identity(int dim) {
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != m.dim())
    throw Error(ErrorKind::InvalidArgument, "dimension mismatch in matrix-vector product");
  RationalVector y(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (sgn(x[j]) != 0) y[i] += m(i, j) * x[j];
  return y;
}

Rational quadratic_form(const RationalMatrix& m, std::span<const Rational> x) {
  RationalVector y = multiply(m, x);
  Rational total;
  for (int i = 0; i < m.dim(); ++i) total += x[i] * y[i];
  return total;
}

namespace {

void require_symmetric(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "matrix is not symmetric");
}

}  // namespace

LdltResult ldlt(const RationalMatrix& m) {
  require_symmetric(m);
  const int n = m.dim();
  RationalMatrix work = m;
  LdltResult out;
  out.permutation.resize(n);
  for (int i = 0; i < n; ++i) out.permutation[i] = i;
  out.lower = RationalMatrix::identity(n);
  out.diagonal.assign(n, Rational(0));

  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i)
      if (work(i, i) > work(pivot, pivot)) pivot = i;

    if (sgn(work(pivot, pivot)) == 0) {
      bool block_is_zero = true;
      for (int i = k; i < n && block_is_zero; ++i)
        for (int j = k; j < n; ++j)
          if (sgn(work(i, j)) != 0) {
            block_is_zero = false;
            break;
          }
      if (!block_is_zero) {
        out.breakdown = true;
        out.steps = k;
        out.schur = RationalMatrix(n - k);
        for (int i = k; i < n; ++i)
          for (int j = k; j < n; ++j) out.schur(i - k, j - k) = work(i, j);
        return out;
      }
      out.steps = n;
      return out;
    }

    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(work(k, j), work(pivot, j));
      for (int i = 0; i < n; ++i) std::swap(work(i, k), work(i, pivot));
      for (int j = 0; j < k; ++j) std::swap(out.lower(k, j), out.lower(pivot, j));
      std::swap(out.permutation[k], out.permutation[pivot]);
    }

    const Rational d = work(k, k);
    out.diagonal[k] = d;
    ++out.rank;
    for (int i = k + 1; i < n; ++i) out.lower(i, k) = work(i, k) / d;
    for (int i = k + 1; i < n; ++i) {
      if (sgn(work(i, k)) == 0) continue;
      for (int j = k + 1; j < n; ++j) work(i, j) -= out.lower(i, k) * work(k, j);
    }
    for (int i = k + 1; i < n; ++i) {
      work(i, k) = 0;
      work(k, i) = 0;
    }
  }
  out.steps = n;
  return out;
}

namespace {

// Solves Lᵀ y = z for unit lower-triangular L, then undoes the permutation so
// that xᵀ M x = zᵀ diag(D, S) z.
RationalVector pull_back(const LdltResult& f, const RationalVector& z) {
  const int n = f.lower.dim();
  RationalVector y = z;
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j) y[i] -= f.lower(j, i) * y[j];
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x[f.permutation[i]] = y[i];
  return x;
}

}  // namespace

PsdVerdict is_psd(const RationalMatrix& m) {
  LdltResult f = ldlt(m);
  PsdVerdict verdict;
  verdict.rank = f.rank;
  const int n = m.dim();

  RationalVector z(n);
  if (f.breakdown) {
    const RationalMatrix& s = f.schur;
    bool found = false;
    for (int i = 0; i < s.dim() && !found; ++i)
      if (sgn(s(i, i)) < 0) {
        z[f.steps + i] = 1;
        found = true;
      }
    for (int i = 0; i < s.dim() && !found; ++i)
      for (int j = 0; j < s.dim(); ++j)
        if (i != j && sgn(s(i, j)) != 0) {
          z[f.steps + i] = 1;
          z[f.steps + j] = -s(i, j);
          found = true;
          break;
        }
    if (!found) throw Error(ErrorKind::Internal, "ldlt breakdown without a nonzero entry");
  } else {
    int negative = -1;
    for (int k = 0; k < n; ++k)
      if (sgn(f.diagonal[k]) < 0) {
        negative = k;
        break;
      }
    if (negative < 0) {
      verdict.psd = true;
      return verdict;
    }
    z[negative] = 1;
  }

  RationalVector x = pull_back(f, z);
  if (sgn(quadratic_form(m, x)) >= 0)
    throw Error(ErrorKind::Internal, "constructed witness is not a negative direction");
  verdict.witness = std::move(x);
  return verdict;
}

bool kernel_check(const RationalMatrix& m, std::span<const Rational> v) {
  for (const Rational& entry : multiply(m, v))
    if (sgn(entry) != 0) return false;
  return true;
}

}  // namespace tridecomp
