#ifndef TRIDECOMP_CERTIFICATE_HPP
#define TRIDECOMP_CERTIFICATE_HPP

#include "tridecomp/flags.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tridecomp {

struct CertificateRow {
  std::string g6;
  int edges = 0;
  Rational nu_f;
  Rational pi3f;
  int pi3 = 0;
  Rational c_u;
  /// threshold − π₃,f − c_U
  Rational slack;
};

struct CertificateReport {
  bool psd_ok = false;
  int rank = 0;
  bool kernel_ok = false;
  std::string matrix_hash;
  Rational threshold;
  /// Empty when the PSD check failed: per-graph work is skipped.
  std::vector<CertificateRow> rows;
  std::optional<Rational> min_slack;
  /// g6 of every U with slack exactly 0.
  std::vector<std::string> tight_set;
  /// max over U of π₃(U) + c_U; informational only.
  std::optional<Rational> max_nonfractional;
  /// g6 of every U with negative slack.
  std::vector<std::string> violations;
  std::optional<RationalVector> psd_witness;
  /// Range of λ > 0 for which threshold − π₃,f(U) − λ·c_U ≥ 0 holds for every
  /// U. A nullopt bound is unbounded; low > high means no λ works.
  Rational scale_low;
  std::optional<Rational> scale_high;

  bool verified() const;
};

struct VerifyOptions {
  Rational threshold = 21;
  unsigned jobs = 0;
};

/// Checks the matrix (PSD, rank, kernel vector), then evaluates c_U, π₃,f(U)
/// and π₃(U) for every 7-vertex graph U. Rows come out in cert order.
CertificateReport verify_lemma(const CertificateMatrix& matrix, const VerifyOptions& options = {});

/// min over labeled vertices v of dᵀ M d with d the flag densities of (g, v).
Rational quadratic_form_sweep(const Graph& g, const RationalMatrix& m);

/// FNV-1a (64-bit, hex) of "denominator:n00,n01,...".
std::string matrix_hash(const CertificateMatrix& matrix);

}  // namespace tridecomp

#endif
