#include "tridecomp/tridecomp.h"

#include "tridecomp/certificate.hpp"
#include "tridecomp/decomposer.hpp"
#include "tridecomp/error.hpp"
#include "tridecomp/io.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>

using namespace tridecomp;

struct td_graph {
  Graph graph;
};

struct td_graph_list {
  std::vector<td_graph> graphs;
};

struct td_matrix {
  CertificateMatrix matrix;
};

struct td_report {
  CertificateReport report;
};

struct td_decomposition {
  Graph graph;
  td_method method = TD_METHOD_AVERAGING;
  AveragingResult averaging;
  GreedyResult greedy;

  const Decomposition& decomposition() const {
    return method == TD_METHOD_GREEDY ? greedy.decomposition : averaging.decomposition;
  }
};

namespace {

thread_local std::string last_error;

td_status fail(td_status status, const std::string& message) {
  last_error = message;
  return status;
}

td_status map_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return TD_ERR_INVALID_ARGUMENT;
    case ErrorKind::SizeExceeded: return TD_ERR_SIZE_EXCEEDED;
    case ErrorKind::Parse: return TD_ERR_PARSE;
    case ErrorKind::Io: return TD_ERR_IO;
    case ErrorKind::Internal: return TD_ERR_INTERNAL;
  }
  return TD_ERR_INTERNAL;
}

template <typename Fn>
td_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const Error& e) {
    return fail(map_error(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TD_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

td_status emit(char** out, const std::string& s) {
  *out = duplicate(s);
  return TD_OK;
}

#define TD_REQUIRE(ptr) \
  if (!(ptr)) return fail(TD_ERR_NULL_POINTER, #ptr " must not be null")

}  // namespace

extern "C" {

const char* td_version(void) { return "1.0.0"; }

const char* td_last_error(void) { return last_error.c_str(); }

const char* td_status_name(td_status status) {
  switch (status) {
    case TD_OK: return "ok";
    case TD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TD_ERR_SIZE_EXCEEDED: return "size exceeded";
    case TD_ERR_PARSE: return "parse error";
    case TD_ERR_IO: return "i/o error";
    case TD_ERR_INTERNAL: return "internal error";
    case TD_ERR_NULL_POINTER: return "null pointer";
  }
  return "unknown";
}

void td_string_free(char* s) { std::free(s); }

td_status td_graph_from_graph6(const char* text, td_graph** out) {
  TD_REQUIRE(text);
  TD_REQUIRE(out);
  return guarded([&] {
    *out = new td_graph{parse_graph6(text)};
    return TD_OK;
  });
}

td_status td_graph_to_graph6(const td_graph* g, char** out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, write_graph6(g->graph)); });
}

td_status td_graph_order(const td_graph* g, int* out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  *out = g->graph.order();
  return TD_OK;
}

td_status td_graph_edge_count(const td_graph* g, int* out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  *out = g->graph.edge_count();
  return TD_OK;
}

td_status td_graph_canonical(const td_graph* g, char** out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, canonical_form(g->graph).cert); });
}

void td_graph_free(td_graph* g) { delete g; }

td_status td_graph_list_read_file(const char* path, td_graph_list** out) {
  TD_REQUIRE(path);
  TD_REQUIRE(out);
  return guarded([&] {
    auto list = std::make_unique<td_graph_list>();
    for (Graph& g : read_graph6_file(path)) list->graphs.push_back({std::move(g)});
    *out = list.release();
    return TD_OK;
  });
}

td_status td_enumerate(int n, td_graph_list** out) {
  TD_REQUIRE(out);
  return guarded([&] {
    auto list = std::make_unique<td_graph_list>();
    for (CanonicalGraph& c : enumerate_graphs(n)) list->graphs.push_back({std::move(c.graph)});
    *out = list.release();
    return TD_OK;
  });
}

size_t td_graph_list_size(const td_graph_list* list) { return list ? list->graphs.size() : 0; }

td_status td_graph_list_at(const td_graph_list* list, size_t index, const td_graph** out) {
  TD_REQUIRE(list);
  TD_REQUIRE(out);
  if (index >= list->graphs.size()) return fail(TD_ERR_INVALID_ARGUMENT, "graph list index out of range");
  *out = &list->graphs[index];
  return TD_OK;
}

void td_graph_list_free(td_graph_list* list) { delete list; }

td_status td_matrix_builtin(td_matrix** out) {
  TD_REQUIRE(out);
  return guarded([&] {
    *out = new td_matrix{builtin_certificate_matrix()};
    return TD_OK;
  });
}

td_status td_matrix_load(const char* path, td_matrix** out) {
  TD_REQUIRE(path);
  TD_REQUIRE(out);
  return guarded([&] {
    *out = new td_matrix{load_matrix_file(path)};
    return TD_OK;
  });
}

td_status td_matrix_check(const td_matrix* m, int* psd, int* rank, int* kernel_ok) {
  TD_REQUIRE(m);
  return guarded([&] {
    RationalMatrix r = m->matrix.to_rational();
    PsdVerdict verdict = is_psd(r);
    if (psd) *psd = verdict.psd ? 1 : 0;
    if (rank) *rank = verdict.rank;
    if (kernel_ok) *kernel_ok = kernel_check(r, certificate_kernel_vector()) ? 1 : 0;
    return TD_OK;
  });
}

void td_matrix_free(td_matrix* m) { delete m; }

td_status td_verify(const td_matrix* m, const char* threshold, unsigned jobs, td_report** out) {
  TD_REQUIRE(m);
  TD_REQUIRE(out);
  return guarded([&] {
    VerifyOptions options;
    if (threshold) options.threshold = parse_rational(threshold);
    options.jobs = jobs;
    *out = new td_report{verify_lemma(m->matrix, options)};
    return TD_OK;
  });
}

td_status td_report_verified(const td_report* r, int* out) {
  TD_REQUIRE(r);
  TD_REQUIRE(out);
  *out = r->report.verified() ? 1 : 0;
  return TD_OK;
}

td_status td_report_write_jsonl(const td_report* r, const char* path) {
  TD_REQUIRE(r);
  TD_REQUIRE(path);
  return guarded([&] {
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Io, std::string("cannot write '") + path + "'");
    write_report_jsonl(r->report, file);
    file.flush();
    if (!file) throw Error(ErrorKind::Io, std::string("write failed for '") + path + "'");
    return TD_OK;
  });
}

td_status td_report_summary_json(const td_report* r, char** out) {
  TD_REQUIRE(r);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, report_summary_json(r->report)); });
}

void td_report_free(td_report* r) { delete r; }

td_status td_values_json(const td_graph* g, char** out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, values_json(g->graph)); });
}

td_status td_corollary_json(const td_graph* g, char** out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, corollary_json(g->graph, corollary_check(g->graph))); });
}

void td_decompose_options_init(td_decompose_options* options) {
  if (!options) return;
  options->method = TD_METHOD_AVERAGING;
  options->sample_count = 0;
  options->seed = 0;
  options->budget = AveragingPlan{}.budget;
  options->jobs = 0;
}

td_status td_decompose(const td_graph* g, const td_decompose_options* options, td_decomposition** out) {
  TD_REQUIRE(g);
  TD_REQUIRE(out);
  td_decompose_options defaults;
  td_decompose_options_init(&defaults);
  const td_decompose_options& opt = options ? *options : defaults;
  return guarded([&] {
    auto d = std::make_unique<td_decomposition>();
    d->graph = g->graph;
    d->method = opt.method;
    if (opt.method == TD_METHOD_GREEDY) {
      d->greedy = greedy_decomposition(g->graph);
    } else if (opt.method == TD_METHOD_AVERAGING) {
      AveragingPlan plan;
      plan.mode = opt.sample_count ? AveragingPlan::Mode::Sampled : AveragingPlan::Mode::Exhaustive;
      plan.sample_count = opt.sample_count;
      plan.rng_seed = opt.seed;
      plan.budget = opt.budget;
      plan.jobs = opt.jobs;
      d->averaging = averaging_decomposition(g->graph, plan);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown decomposition method");
    }
    *out = d.release();
    return TD_OK;
  });
}

td_status td_decomposition_json(const td_decomposition* d, char** out) {
  TD_REQUIRE(d);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, decomposition_json(d->decomposition())); });
}

td_status td_decomposition_summary_json(const td_decomposition* d, char** out) {
  TD_REQUIRE(d);
  TD_REQUIRE(out);
  return guarded([&] {
    if (d->method == TD_METHOD_GREEDY) return emit(out, greedy_summary_json(d->graph, d->greedy));
    const char* mode = d->averaging.approximate ? "sampled" : "exhaustive";
    return emit(out, averaging_summary_json(d->graph, d->averaging, mode));
  });
}

td_status td_decomposition_total_weight(const td_decomposition* d, char** out) {
  TD_REQUIRE(d);
  TD_REQUIRE(out);
  return guarded([&] { return emit(out, to_string(d->decomposition().total_weight())); });
}

td_status td_decomposition_is_exact(const td_decomposition* d, int* out) {
  TD_REQUIRE(d);
  TD_REQUIRE(out);
  return guarded([&] {
    *out = is_exact_decomposition(d->graph, d->decomposition()) ? 1 : 0;
    return TD_OK;
  });
}

void td_decomposition_free(td_decomposition* d) { delete d; }

}  // extern "C"
