#ifndef TRIDECOMP_IO_HPP
#define TRIDECOMP_IO_HPP

#include "tridecomp/certificate.hpp"
#include "tridecomp/cliquelp.hpp"
#include "tridecomp/decomposer.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace tridecomp {

// All rationals are written as "p/q" strings.

/// {"vertices", "edges": [{"edge": [u,v], "weight"}], "triangles": [{"triangle": [a,b,c], "weight"}], "total_weight"}
std::string decomposition_json(const Decomposition& d);

/// {"n", "edges", "total_weight", "half_n_squared", "mode", ...}; sampled runs add
/// "approximate" and "max_coverage_residual".
std::string averaging_summary_json(const Graph& g, const AveragingResult& r, std::string_view mode);
std::string greedy_summary_json(const Graph& g, const GreedyResult& r);

/// One line: {"g6", "e", "nu", "nu_f", "pi3", "pi3f"}. nu and pi3 are null
/// above the exact-packing size limit.
std::string values_json(const Graph& g);

/// One line: {"g6", "n", "edges", "k", "packed", "exact", "bound"}.
std::string corollary_json(const Graph& g, const CorollaryRecord& r);

/// Header object, one object per row, then a summary object; one per line.
void write_report_jsonl(const CertificateReport& report, std::ostream& out);
std::string report_summary_json(const CertificateReport& report);

/// {"denominator": int|string, "numerators": 7x7 of int|string}
CertificateMatrix parse_matrix_json(std::string_view text);
CertificateMatrix load_matrix_file(const std::string& path);

}  // namespace tridecomp

#endif
