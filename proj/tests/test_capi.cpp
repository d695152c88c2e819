// Exercises the shared library through its C header only.
#include "tridecomp/tridecomp.h"

#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  td_string_free(s);
  return out;
}

td_graph* graph(const char* g6) {
  td_graph* g = nullptr;
  REQUIRE(td_graph_from_graph6(g6, &g) == TD_OK);
  return g;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::strcmp(td_version(), "1.0.0") == 0);
  CHECK(std::strcmp(td_status_name(TD_OK), "ok") == 0);
  CHECK(std::strcmp(td_status_name(TD_ERR_PARSE), "parse error") == 0);
  td_string_free(nullptr);
}

TEST_CASE("graph handles") {
  td_graph* g = graph("F~~~w");
  int n = 0, e = 0;
  CHECK(td_graph_order(g, &n) == TD_OK);
  CHECK(td_graph_edge_count(g, &e) == TD_OK);
  CHECK(n == 7);
  CHECK(e == 21);
  char* text = nullptr;
  CHECK(td_graph_to_graph6(g, &text) == TD_OK);
  CHECK(take(text) == "F~~~w");
  td_graph_free(g);

  // Path 0-1-2 written with the middle vertex first and last agree canonically.
  td_graph* a = graph("Bo");
  td_graph* b = graph("BW");
  char* ca = nullptr;
  char* cb = nullptr;
  CHECK(td_graph_canonical(a, &ca) == TD_OK);
  CHECK(td_graph_canonical(b, &cb) == TD_OK);
  CHECK(take(ca) == take(cb));
  td_graph_free(a);
  td_graph_free(b);
  td_graph_free(nullptr);
}

TEST_CASE("errors map to codes and messages") {
  td_graph* g = nullptr;
  CHECK(td_graph_from_graph6("F~~", &g) == TD_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strlen(td_last_error()) > 0);
  CHECK(td_graph_from_graph6(nullptr, &g) == TD_ERR_NULL_POINTER);
  CHECK(td_graph_from_graph6("@", nullptr) == TD_ERR_NULL_POINTER);
  td_graph_list* list = nullptr;
  CHECK(td_enumerate(9, &list) == TD_ERR_INVALID_ARGUMENT);
  CHECK(td_graph_list_read_file("no/such/file.g6", &list) == TD_ERR_IO);
  td_graph* big = graph("L~~~~~~~~~~~~~");  // K13
  char* cert = nullptr;
  CHECK(td_graph_canonical(big, &cert) == TD_ERR_SIZE_EXCEEDED);
  td_graph_free(big);
  // A successful call clears the message.
  td_graph* ok = graph("@");
  CHECK(std::strlen(td_last_error()) == 0);
  td_graph_free(ok);
}

TEST_CASE("enumeration and lists") {
  td_graph_list* list = nullptr;
  REQUIRE(td_enumerate(7, &list) == TD_OK);
  CHECK(td_graph_list_size(list) == 1044);
  const td_graph* first = nullptr;
  REQUIRE(td_graph_list_at(list, 0, &first) == TD_OK);
  char* text = nullptr;
  CHECK(td_graph_to_graph6(first, &text) == TD_OK);
  CHECK(take(text) == "F????");
  CHECK(td_graph_list_at(list, 1044, &first) == TD_ERR_INVALID_ARGUMENT);
  td_graph_list_free(list);
  CHECK(td_graph_list_size(nullptr) == 0);

  const char* path = "capi_list.g6";
  {
    std::ofstream out(path);
    out << "C~\nDQo\n";
  }
  REQUIRE(td_graph_list_read_file(path, &list) == TD_OK);
  CHECK(td_graph_list_size(list) == 2);
  td_graph_list_free(list);
  std::remove(path);
}

TEST_CASE("matrix checks and verification") {
  td_matrix* m = nullptr;
  REQUIRE(td_matrix_builtin(&m) == TD_OK);
  int psd = 0, rank = 0, kernel = 0;
  CHECK(td_matrix_check(m, &psd, &rank, &kernel) == TD_OK);
  CHECK(psd == 1);
  CHECK(rank == 6);
  CHECK(kernel == 1);

  td_report* r = nullptr;
  REQUIRE(td_verify(m, nullptr, 1, &r) == TD_OK);
  int verified = 0;
  CHECK(td_report_verified(r, &verified) == TD_OK);
  CHECK(verified == 1);
  char* summary = nullptr;
  CHECK(td_report_summary_json(r, &summary) == TD_OK);
  const std::string s = take(summary);
  CHECK(s.find("\"min_slack\":\"0/1\"") != std::string::npos);
  CHECK(s.find("F~~~w") != std::string::npos);
  CHECK(td_report_write_jsonl(r, "capi_report.jsonl") == TD_OK);
  std::ifstream in("capi_report.jsonl");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 1046);
  std::remove("capi_report.jsonl");
  CHECK(td_report_write_jsonl(r, "no/such/dir/report.jsonl") == TD_ERR_IO);
  td_report_free(r);

  REQUIRE(td_verify(m, "20", 1, &r) == TD_OK);
  CHECK(td_report_verified(r, &verified) == TD_OK);
  CHECK(verified == 0);
  td_report_free(r);

  r = nullptr;
  CHECK(td_verify(m, "2/0", 1, &r) == TD_ERR_PARSE);
  CHECK(td_verify(m, "abc", 1, &r) == TD_ERR_PARSE);
  CHECK(r == nullptr);
  td_matrix_free(m);

  CHECK(td_matrix_load("no/such/matrix.json", &m) == TD_ERR_IO);
  {
    std::ofstream out("capi_bad_matrix.json");
    out << "{\"denominator\": 1}";
  }
  CHECK(td_matrix_load("capi_bad_matrix.json", &m) == TD_ERR_PARSE);
  std::remove("capi_bad_matrix.json");
}

TEST_CASE("values and corollary records") {
  td_graph* k4 = graph("C~");
  char* values = nullptr;
  REQUIRE(td_values_json(k4, &values) == TD_OK);
  CHECK(take(values) == R"({"g6":"C~","e":6,"nu":1,"nu_f":"2/1","pi3":9,"pi3f":"6/1"})");
  char* record = nullptr;
  REQUIRE(td_corollary_json(k4, &record) == TD_OK);
  CHECK(take(record) == R"({"g6":"C~","n":4,"edges":6,"k":"2/1","packed":1,"exact":true,"bound":"4/3"})");
  td_graph_free(k4);
}

TEST_CASE("decompositions") {
  td_decompose_options options;
  td_decompose_options_init(&options);
  CHECK(options.method == TD_METHOD_AVERAGING);
  CHECK(options.sample_count == 0);
  CHECK(options.budget == 10000000);

  td_graph* k7 = graph("F~~~w");
  td_decomposition* d = nullptr;
  REQUIRE(td_decompose(k7, &options, &d) == TD_OK);
  char* total = nullptr;
  CHECK(td_decomposition_total_weight(d, &total) == TD_OK);
  CHECK(take(total) == "21/1");
  int exact = 0;
  CHECK(td_decomposition_is_exact(d, &exact) == TD_OK);
  CHECK(exact == 1);
  char* summary = nullptr;
  CHECK(td_decomposition_summary_json(d, &summary) == TD_OK);
  CHECK(take(summary).find("\"mode\":\"exhaustive\"") != std::string::npos);
  char* body = nullptr;
  CHECK(td_decomposition_json(d, &body) == TD_OK);
  CHECK(take(body).find("\"triangles\"") != std::string::npos);
  td_decomposition_free(d);

  options.method = TD_METHOD_GREEDY;
  REQUIRE(td_decompose(k7, &options, &d) == TD_OK);
  CHECK(td_decomposition_is_exact(d, &exact) == TD_OK);
  CHECK(exact == 1);
  td_decomposition_free(d);

  options.method = TD_METHOD_AVERAGING;
  options.sample_count = 5;
  options.seed = 3;
  REQUIRE(td_decompose(k7, &options, &d) == TD_OK);
  CHECK(td_decomposition_summary_json(d, &summary) == TD_OK);
  const std::string s = take(summary);
  CHECK(s.find("\"approximate\":true") != std::string::npos);
  td_decomposition_free(d);

  options.sample_count = 0;
  options.budget = 0;
  CHECK(td_decompose(k7, &options, &d) == TD_ERR_SIZE_EXCEEDED);
  options.method = static_cast<td_method>(7);
  CHECK(td_decompose(k7, &options, &d) == TD_ERR_INVALID_ARGUMENT);
  CHECK(td_decompose(k7, nullptr, &d) == TD_OK);
  td_decomposition_free(d);
  td_graph_free(k7);
}
