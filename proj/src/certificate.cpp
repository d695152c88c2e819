#include "tridecomp/certificate.hpp"

#include "tridecomp/cliquelp.hpp"
#include "tridecomp/error.hpp"
#include "tridecomp/parallel.hpp"

#include <cstdio>

namespace tridecomp {

bool CertificateReport::verified() const {
  return psd_ok && kernel_ok && !rows.empty() && violations.empty();
}

std::string matrix_hash(const CertificateMatrix& matrix) {
  std::string text = matrix.denominator.get_str() + ":";
  for (int i = 0; i < kFlagCount; ++i)
    for (int j = 0; j < kFlagCount; ++j) {
      if (i || j) text += ",";
      text += matrix.numerators[i][j].get_str();
    }
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CertificateReport verify_lemma(const CertificateMatrix& matrix, const VerifyOptions& options) {
  const RationalMatrix m = matrix.to_rational();
  if (!m.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "certificate matrix is not symmetric");

  CertificateReport report;
  report.threshold = options.threshold;
  report.matrix_hash = matrix_hash(matrix);
  PsdVerdict psd = is_psd(m);
  report.psd_ok = psd.psd;
  report.rank = psd.rank;
  report.psd_witness = psd.witness;
  report.kernel_ok = kernel_check(m, certificate_kernel_vector());
  if (!report.psd_ok) return report;

  const std::vector<CanonicalGraph> graphs = enumerate_graphs(7);
  report.rows.resize(graphs.size());
  std::vector<Rational> nonfractional(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](unsigned, std::size_t i) {
    const Graph& u = graphs[i].graph;
    CertificateRow& row = report.rows[i];
    FractionalResult fractional = pi3f(u);
    row.g6 = graphs[i].cert;
    row.edges = u.edge_count();
    row.nu_f = fractional.packing_value;
    row.pi3f = fractional.value;
    row.pi3 = pi3(u).value;
    row.c_u = coefficient_cu(u, m);
    row.slack = options.threshold - row.pi3f - row.c_u;
    nonfractional[i] = row.pi3 + row.c_u;
  });

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const CertificateRow& row = report.rows[i];
    if (!report.min_slack || row.slack < *report.min_slack) report.min_slack = row.slack;
    if (!report.max_nonfractional || nonfractional[i] > *report.max_nonfractional)
      report.max_nonfractional = nonfractional[i];
    if (sgn(row.slack) < 0) report.violations.push_back(row.g6);
  }
  for (const CertificateRow& row : report.rows)
    if (sgn(row.slack) == 0) report.tight_set.push_back(row.g6);

  for (const CertificateRow& row : report.rows) {
    const Rational room = options.threshold - row.pi3f;
    const int sign = sgn(row.c_u);
    if (sign > 0) {
      Rational limit = room / row.c_u;
      if (!report.scale_high || limit < *report.scale_high) report.scale_high = limit;
    } else if (sign < 0) {
      Rational limit = room / row.c_u;
      if (limit > report.scale_low) report.scale_low = limit;
    } else if (sgn(room) < 0) {
      report.scale_high = Rational(-1);
    }
  }
  return report;
}

Rational quadratic_form_sweep(const Graph& g, const RationalMatrix& m) {
  if (g.order() < 4) throw Error(ErrorKind::InvalidArgument, "quadratic form sweep needs at least 4 vertices");
  Rational best = quadratic_form_density(g, 0, m);
  for (int v = 1; v < g.order(); ++v) {
    Rational q = quadratic_form_density(g, v, m);
    if (q < best) best = q;
  }
  return best;
}

}  // namespace tridecomp
