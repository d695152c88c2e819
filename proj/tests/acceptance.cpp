// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "oracles.hpp"

#include "tridecomp/certificate.hpp"
#include "tridecomp/cliquelp.hpp"
#include "tridecomp/decomposer.hpp"
#include "tridecomp/flags.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef TD_CLI_PATH
#error "TD_CLI_PATH must name the tridecomp executable"
#endif

using namespace tridecomp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0)
    out.require(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds));
  if (!out.ok) ++failures;
  std::printf("%s [%d] %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = "\"" TD_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t line_count(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++n;
  return n;
}

}  // namespace

int main() {
  criterion(1, "enumeration: 1044 graphs on 7 vertices; 4, 11, 34, 156 for n = 3..6", 60, [](Outcome& o) {
    const Run r = run_cli("enumerate --n 7");
    o.require(r.status == 0, "enumerate exit " + std::to_string(r.status));
    o.require(line_count(r.out) == 1044, "enumerate --n 7 gave " + std::to_string(line_count(r.out)));
    const std::size_t want[] = {4, 11, 34, 156};
    for (int n = 3; n <= 6; ++n) {
      const std::size_t got = enumerate_graphs(n).size();
      const std::size_t brute = oracle::class_count(n);
      o.require(got == want[n - 3] && brute == want[n - 3],
                "n=" + std::to_string(n) + ": library " + std::to_string(got) + ", brute force " + std::to_string(brute));
    }
  });

  criterion(2, "certificate matrix: PSD, rank 6, kernel (1,0,3,1,0,3,0)", 1, [](Outcome& o) {
    const RationalMatrix m = builtin_certificate_matrix().to_rational();
    const PsdVerdict v = is_psd(m);
    o.require(v.psd, "not PSD");
    o.require(v.rank == 6, "rank " + std::to_string(v.rank));
    const RationalVector k{1, 0, 3, 1, 0, 3, 0};
    o.require(kernel_check(m, k), "M k != 0");
  });

  criterion(3, "pi3f(U) + c_U <= 21 on all 1044 graphs, min slack 0, K7 tight", 300, [](Outcome& o) {
    const CertificateReport r = verify_lemma(builtin_certificate_matrix());
    o.require(r.rows.size() == 1044, "rows " + std::to_string(r.rows.size()));
    o.require(r.violations.empty(), std::to_string(r.violations.size()) + " violations");
    o.require(r.min_slack && *r.min_slack == 0, "min slack " + (r.min_slack ? to_string(*r.min_slack) : "none"));
    const std::string k7 = canonical_form(complete_graph(7)).cert;
    o.require(std::find(r.tight_set.begin(), r.tight_set.end(), k7) != r.tight_set.end(), "K7 not tight");
    o.require(r.verified(), "report not verified");
  });

  criterion(4, "direct LP = 2e - 3 packing LP on 1044 graphs; pi3 = brute force on 52 graphs, n <= 5", 0, [](Outcome& o) {
    for (const CanonicalGraph& c : enumerate_graphs(7)) {
      const Rational direct = decomposition_lp(c.graph).value;
      const Rational packing = max_fractional_triangle_packing(c.graph).value;
      if (direct != 2 * c.graph.edge_count() - 3 * packing) o.require(false, "LP mismatch on " + c.cert);
    }
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n)
      for (const CanonicalGraph& c : enumerate_graphs(n)) {
        ++checked;
        const IntegerResult r = pi3(c.graph);
        const int brute = oracle::pi3(c.graph);
        if (r.value != brute || r.value != 2 * c.graph.edge_count() - 3 * oracle::nu(c.graph))
          o.require(false, "pi3 mismatch on " + c.cert);
      }
    o.require(checked == 52, "checked " + std::to_string(checked) + " small graphs");
  });

  criterion(5, "spot values: pi3f(K4) = 6, pi3(K4) = 9, pi3(K3,3) = 18", 0, [](Outcome& o) {
    o.require(pi3f(complete_graph(4)).value == 6, "pi3f(K4) = " + to_string(pi3f(complete_graph(4)).value));
    o.require(pi3(complete_graph(4)).value == 9, "pi3(K4) = " + std::to_string(pi3(complete_graph(4)).value));
    o.require(pi3(complete_bipartite(3, 3)).value == 18,
              "pi3(K3,3) = " + std::to_string(pi3(complete_bipartite(3, 3)).value));
  });

  criterion(6, "averaging: K20 total 190 with exact coverage; triangle-free graphs give 2e", 120, [](Outcome& o) {
    const Graph k20 = complete_graph(20);
    const AveragingResult r = averaging_decomposition(k20, {});
    o.require(r.subsets == 77520, "subsets " + std::to_string(r.subsets));
    o.require(r.decomposition.total_weight() == 190, "K20 total " + to_string(r.decomposition.total_weight()));
    o.require(is_exact_decomposition(k20, r.decomposition), "K20 coverage not exact");
    for (const Graph& g : {complete_bipartite(5, 6), cycle_graph(12), path_graph(10), empty_graph(9),
                           complete_bipartite(1, 9)}) {
      const AveragingResult t = averaging_decomposition(g, {});
      o.require(t.decomposition.total_weight() == 2 * g.edge_count() && is_exact_decomposition(g, t.decomposition),
                "triangle-free " + write_graph6(g) + " gave " + to_string(t.decomposition.total_weight()));
    }
  });

  criterion(7, "d^T M d >= 0 on 100 random graphs, every labeling; densities sum to 1 on 20 graphs", 0, [](Outcome& o) {
    const RationalMatrix m = builtin_certificate_matrix().to_rational();
    std::mt19937_64 rng(20260707);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 8 + trial % 5;
      const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (trial % 5), rng);
      for (int v = 0; v < n; ++v)
        if (quadratic_form_density(g, v, m) < 0) o.require(false, "negative form on " + write_graph6(g));
    }
    const auto classes = enumerate_graphs(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = oracle::random_graph(7 + trial % 4, 0.5, rng);
      Rational sum = 0;
      for (const CanonicalGraph& c : classes) sum += density(c.graph, g);
      if (sum != 1) o.require(false, "density sum " + to_string(sum) + " on " + write_graph6(g));
    }
  });

  criterion(8, "negative controls: threshold 20 exits 1; zero matrix fails on K3,4", 0, [](Outcome& o) {
    const Run r = run_cli("verify --threshold 20");
    o.require(r.status == 1, "threshold 20 exit " + std::to_string(r.status));
    o.require(r.out.find(canonical_form(complete_graph(7)).cert) != std::string::npos, "K7 not among violations");
    CertificateMatrix zero = builtin_certificate_matrix();
    for (auto& row : zero.numerators)
      for (auto& x : row) x = 0;
    const CertificateReport z = verify_lemma(zero);
    o.require(!z.verified(), "zero matrix verified");
    const std::string k34 = canonical_form(complete_bipartite(3, 4)).cert;
    bool found = false;
    for (const CertificateRow& row : z.rows)
      if (row.g6 == k34) {
        found = true;
        o.require(row.slack < 0, "K3,4 slack " + to_string(row.slack));
        o.require(row.pi3f == 24, "pi3f(K3,4) = " + to_string(row.pi3f));
      }
    o.require(found, "K3,4 row missing");
    o.require(std::find(z.violations.begin(), z.violations.end(), k34) != z.violations.end(), "K3,4 not a violation");
  });

  std::printf("%s: %d failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
