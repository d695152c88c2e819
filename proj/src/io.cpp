#include "tridecomp/io.hpp"

#include "tridecomp/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tridecomp {

using Json = nlohmann::ordered_json;

namespace {

Json rational(const Rational& q) { return to_string(q); }

Json optional_rational(const std::optional<Rational>& q) {
  return q ? Json(to_string(*q)) : Json(nullptr);
}

}  // namespace

std::string decomposition_json(const Decomposition& d) {
  Json edges = Json::array();
  for (const auto& [e, w] : d.edge_weights)
    edges.push_back({{"edge", {e.u, e.v}}, {"weight", rational(w)}});
  Json triangles = Json::array();
  for (const auto& [t, w] : d.triangle_weights)
    triangles.push_back({{"triangle", {t.a, t.b, t.c}}, {"weight", rational(w)}});
  Json j;
  j["vertices"] = d.order;
  j["edges"] = std::move(edges);
  j["triangles"] = std::move(triangles);
  j["total_weight"] = rational(d.total_weight());
  return j.dump();
}

std::string averaging_summary_json(const Graph& g, const AveragingResult& r, std::string_view mode) {
  const int n = g.order();
  Json j;
  j["n"] = n;
  j["edges"] = g.edge_count();
  j["total_weight"] = rational(r.decomposition.total_weight());
  j["half_n_squared"] = rational(make_rational(n * n, 2));
  j["mode"] = std::string(mode);
  j["subsets"] = r.subsets;
  j["classes"] = r.classes;
  if (r.approximate) {
    j["approximate"] = true;
    j["max_coverage_residual"] = rational(r.max_abs_residual);
  }
  return j.dump();
}

std::string greedy_summary_json(const Graph& g, const GreedyResult& r) {
  const int n = g.order();
  Json j;
  j["n"] = n;
  j["edges"] = g.edge_count();
  j["total_weight"] = rational(Rational(r.value));
  j["half_n_squared"] = rational(make_rational(n * n, 2));
  j["mode"] = "greedy";
  j["triangles"] = r.triangles;
  return j.dump();
}

std::string values_json(const Graph& g) {
  FractionalResult fractional = pi3f(g);
  Json j;
  j["g6"] = write_graph6(g);
  j["e"] = g.edge_count();
  if (g.order() <= kMaxExactPackingOrder) {
    IntegerResult integer = pi3(g);
    j["nu"] = integer.packing.value;
    j["nu_f"] = rational(fractional.packing_value);
    j["pi3"] = integer.value;
  } else {
    j["nu"] = nullptr;
    j["nu_f"] = rational(fractional.packing_value);
    j["pi3"] = nullptr;
  }
  j["pi3f"] = rational(fractional.value);
  return j.dump();
}

std::string corollary_json(const Graph& g, const CorollaryRecord& r) {
  Json j;
  j["g6"] = write_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["k"] = rational(r.k);
  j["packed"] = r.packed;
  j["exact"] = r.exact;
  j["bound"] = rational(r.bound);
  return j.dump();
}

namespace {

Json witness_json(const RationalVector& x) {
  Json out = Json::array();
  for (const Rational& v : x) out.push_back(rational(v));
  return out;
}

}  // namespace

void write_report_jsonl(const CertificateReport& report, std::ostream& out) {
  Json header;
  header["psd"] = report.psd_ok;
  header["rank"] = report.rank;
  header["kernel"] = report.kernel_ok;
  header["matrix_hash"] = report.matrix_hash;
  header["threshold"] = rational(report.threshold);
  if (report.psd_witness) header["psd_witness"] = witness_json(*report.psd_witness);
  out << header.dump() << '\n';

  for (const CertificateRow& row : report.rows) {
    Json j;
    j["g6"] = row.g6;
    j["edges"] = row.edges;
    j["nu_f"] = rational(row.nu_f);
    j["pi3f"] = rational(row.pi3f);
    j["pi3"] = row.pi3;
    j["c_u"] = rational(row.c_u);
    j["slack"] = rational(row.slack);
    out << j.dump() << '\n';
  }
  out << report_summary_json(report) << '\n';
}

std::string report_summary_json(const CertificateReport& report) {
  Json j;
  j["psd"] = report.psd_ok;
  j["rank"] = report.rank;
  j["kernel"] = report.kernel_ok;
  if (report.psd_witness) j["psd_witness"] = witness_json(*report.psd_witness);
  j["min_slack"] = optional_rational(report.min_slack);
  j["tight"] = report.tight_set;
  j["max_nonfractional"] = optional_rational(report.max_nonfractional);
  if (report.max_nonfractional)
    j["max_nonfractional_approx"] = approx(*report.max_nonfractional);
  j["violations"] = report.violations;
  if (!report.rows.empty())
    j["c_scale_range"] = {rational(report.scale_low), optional_rational(report.scale_high)};
  j["graphs"] = report.rows.size();
  j["verified"] = report.verified();
  return j.dump();
}

namespace {

mpz_class integer_field(const Json& value, const char* what) {
  if (value.is_number_integer()) return mpz_class(value.dump());
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0)
      throw Error(ErrorKind::Parse, std::string("matrix file: bad integer in ") + what);
    return z;
  }
  throw Error(ErrorKind::Parse, std::string("matrix file: ") + what + " must be an integer");
}

}  // namespace

CertificateMatrix parse_matrix_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("denominator") || !j.contains("numerators"))
    throw Error(ErrorKind::Parse, "matrix file: expected {denominator, numerators}");
  CertificateMatrix m;
  m.denominator = integer_field(j["denominator"], "denominator");
  if (sgn(m.denominator) <= 0) throw Error(ErrorKind::Parse, "matrix file: denominator must be positive");
  const Json& rows = j["numerators"];
  if (!rows.is_array() || rows.size() != kFlagCount)
    throw Error(ErrorKind::Parse, "matrix file: numerators must be a 7x7 array");
  for (int i = 0; i < kFlagCount; ++i) {
    if (!rows[i].is_array() || rows[i].size() != kFlagCount)
      throw Error(ErrorKind::Parse, "matrix file: numerators must be a 7x7 array");
    for (int k = 0; k < kFlagCount; ++k) m.numerators[i][k] = integer_field(rows[i][k], "numerators");
  }
  return m;
}

CertificateMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_json(buffer.str());
}

}  // namespace tridecomp
