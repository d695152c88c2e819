// tridecomp: enumeration, certificate verification, per-graph values and
// decompositions. Exit codes: 0 success/verified, 1 verification failed,
// 2 usage or input error.

#include "tridecomp/tridecomp.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

using Json = nlohmann::ordered_json;

struct StringDeleter {
  void operator()(char* s) const { td_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using GraphList = std::unique_ptr<td_graph_list, HandleDeleter<td_graph_list, td_graph_list_free>>;
using Matrix = std::unique_ptr<td_matrix, HandleDeleter<td_matrix, td_matrix_free>>;
using Report = std::unique_ptr<td_report, HandleDeleter<td_report, td_report_free>>;
using Decomposition = std::unique_ptr<td_decomposition, HandleDeleter<td_decomposition, td_decomposition_free>>;

class ApiError : public std::runtime_error {
 public:
  explicit ApiError(td_status status)
      : std::runtime_error(std::string(td_status_name(status)) + ": " + td_last_error()),
        status_(status) {}
  td_status status() const { return status_; }

 private:
  td_status status_;
};

void check(td_status status) {
  if (status != TD_OK) throw ApiError(status);
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned.get();
}

GraphList read_graphs(const std::string& path) {
  td_graph_list* raw = nullptr;
  check(td_graph_list_read_file(path.c_str(), &raw));
  return GraphList(raw);
}

template <typename Fn>
void for_each_graph(const td_graph_list* list, Fn&& fn) {
  for (size_t i = 0; i < td_graph_list_size(list); ++i) {
    const td_graph* g = nullptr;
    check(td_graph_list_at(list, i, &g));
    fn(g);
  }
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return file;
}

int run_enumerate(int n, const std::string& out_path) {
  td_graph_list* raw = nullptr;
  check(td_enumerate(n, &raw));
  GraphList list(raw);
  std::ofstream file;
  std::ostream& out = open_output(out_path, file);
  for_each_graph(list.get(), [&](const td_graph* g) {
    char* text = nullptr;
    check(td_graph_to_graph6(g, &text));
    out << take(text) << '\n';
  });
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + out_path + "'");
  (out_path.empty() || out_path == "-" ? std::cerr : std::cout) << td_graph_list_size(list.get()) << '\n';
  return kExitOk;
}

int run_verify(const std::string& matrix_path, const std::string& threshold,
               const std::string& report_path, unsigned jobs) {
  td_matrix* raw_matrix = nullptr;
  check(matrix_path.empty() ? td_matrix_builtin(&raw_matrix) : td_matrix_load(matrix_path.c_str(), &raw_matrix));
  Matrix matrix(raw_matrix);

  td_report* raw_report = nullptr;
  check(td_verify(matrix.get(), threshold.c_str(), jobs, &raw_report));
  Report report(raw_report);
  if (!report_path.empty()) check(td_report_write_jsonl(report.get(), report_path.c_str()));

  char* summary = nullptr;
  check(td_report_summary_json(report.get(), &summary));
  std::cout << take(summary) << '\n';

  int verified = 0;
  check(td_report_verified(report.get(), &verified));
  return verified ? kExitOk : kExitFailed;
}

int run_values(const std::string& in_path) {
  GraphList list = read_graphs(in_path);
  for_each_graph(list.get(), [](const td_graph* g) {
    char* line = nullptr;
    check(td_values_json(g, &line));
    std::cout << take(line) << '\n';
  });
  return kExitOk;
}

int run_corollary(const std::string& in_path) {
  GraphList list = read_graphs(in_path);
  for_each_graph(list.get(), [](const td_graph* g) {
    char* line = nullptr;
    check(td_corollary_json(g, &line));
    std::cout << take(line) << '\n';
  });
  return kExitOk;
}

struct DecomposeArgs {
  std::string in_path;
  std::string method = "averaging";
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string out_path;
  unsigned jobs = 0;
};

int run_decompose(const DecomposeArgs& args) {
  td_decompose_options options;
  td_decompose_options_init(&options);
  options.method = args.method == "greedy" ? TD_METHOD_GREEDY : TD_METHOD_AVERAGING;
  options.sample_count = args.sample.value_or(0);
  options.seed = args.seed;
  if (args.budget) options.budget = args.budget;
  options.jobs = args.jobs;

  GraphList list = read_graphs(args.in_path);
  std::ofstream file;
  std::ostream& out = open_output(args.out_path, file);
  const bool summaries_to_stdout = &out != &std::cout;
  for_each_graph(list.get(), [&](const td_graph* g) {
    td_decomposition* raw = nullptr;
    check(td_decompose(g, &options, &raw));
    Decomposition d(raw);
    char* g6 = nullptr;
    char* summary = nullptr;
    char* body = nullptr;
    check(td_graph_to_graph6(g, &g6));
    check(td_decomposition_summary_json(d.get(), &summary));
    check(td_decomposition_json(d.get(), &body));
    Json record;
    record["g6"] = take(g6);
    record["summary"] = Json::parse(take(summary));
    record["decomposition"] = Json::parse(take(body));
    out << record.dump() << '\n';
    if (summaries_to_stdout) std::cout << record["summary"].dump() << '\n';
  });
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + args.out_path + "'");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for edge decompositions into edges and triangles"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(td_version()));

  unsigned jobs = 0;
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->envname("TRIDECOMP_JOBS");
  };

  int n = 0;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "List graphs on n vertices up to isomorphism (graph6)");
  enumerate->add_option("--n", n, "Vertex count, 1..8")->required();
  enumerate->add_option("--out", out_path, "Output file (default: standard output)");

  std::string matrix_path, threshold = "21", report_path;
  auto* verify = app.add_subcommand("verify", "Re-verify the 7-vertex flag certificate");
  verify->add_option("--matrix", matrix_path, "JSON {denominator, numerators} (default: builtin)");
  verify->add_option("--threshold", threshold, "Rational threshold, p/q")->capture_default_str();
  verify->add_option("--report", report_path, "JSON-lines report path");
  add_jobs(verify);

  std::string in_path;
  auto* values = app.add_subcommand("values", "Print e, nu, nu_f, pi3, pi3f for each graph");
  values->add_option("--in", in_path, "graph6 file, one graph per line")->required();

  DecomposeArgs dargs;
  auto* decompose = app.add_subcommand("decompose", "Build a decomposition for each graph");
  decompose->add_option("--in", dargs.in_path, "graph6 file, one graph per line")->required();
  decompose->add_option("--method", dargs.method)
      ->check(CLI::IsMember({"averaging", "greedy"}))
      ->capture_default_str();
  decompose->add_option("--sample", dargs.sample, "Random 7-subsets instead of all of them");
  decompose->add_option("--seed", dargs.seed, "Sampling seed")->capture_default_str();
  decompose->add_option("--budget", dargs.budget, "Largest C(n,7) for exhaustive averaging");
  decompose->add_option("--out", dargs.out_path, "JSON-lines output (default: standard output)");
  add_jobs(decompose);

  auto* corollary = app.add_subcommand("corollary", "Print k, packed triangles and 2k/3 per graph");
  corollary->add_option("--in", in_path, "graph6 file, one graph per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*enumerate) return run_enumerate(n, out_path);
    if (*verify) return run_verify(matrix_path, threshold, report_path, jobs);
    if (*values) return run_values(in_path);
    if (*decompose) {
      dargs.jobs = jobs;
      return run_decompose(dargs);
    }
    if (*corollary) return run_corollary(in_path);
  } catch (const ApiError& e) {
    std::cerr << "tridecomp: " << e.what() << '\n';
    return e.status() == TD_ERR_INTERNAL ? kExitFailed : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "tridecomp: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
