#include "tridecomp/decomposer.hpp"

#include "tridecomp/error.hpp"
#include "tridecomp/parallel.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

namespace tridecomp {

namespace {

struct SolvedClass {
  Rational value;
  Decomposition decomposition;  // on the canonical labeling
};

// Per-worker accumulator. Edge weights are dense; triangles are sparse.
struct Accumulator {
  explicit Accumulator(int n) : n(n), edges(static_cast<std::size_t>(n) * n) {}

  int n;
  std::vector<Rational> edges;
  std::map<Triangle, Rational> triangles;
  Rational value_sum;
  std::unordered_map<std::string, SolvedClass> cache;

  void add_subset(const Graph& g, std::span<const int> subset) {
    CanonicalGraph canon = canonical_form(induced_subgraph(g, subset));
    auto it = cache.find(canon.cert);
    if (it == cache.end()) {
      FractionalResult solved = pi3f(canon.graph);
      it = cache.emplace(canon.cert, SolvedClass{solved.value, std::move(solved.decomposition)}).first;
    }
    const SolvedClass& solved = it->second;
    value_sum += solved.value;

    auto global = [&](int canonical_vertex) { return subset[canon.labeling[canonical_vertex]]; };
    for (const auto& [e, w] : solved.decomposition.edge_weights) {
      const int a = global(e.u), b = global(e.v);
      const int u = std::min(a, b), v = std::max(a, b);
      edges[static_cast<std::size_t>(u) * n + v] += w;
    }
    for (const auto& [t, w] : solved.decomposition.triangle_weights) {
      std::array<int, 3> abc{global(t.a), global(t.b), global(t.c)};
      std::sort(abc.begin(), abc.end());
      triangles[{abc[0], abc[1], abc[2]}] += w;
    }
  }

  void merge_into(Accumulator& total) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (sgn(edges[i]) != 0) total.edges[i] += edges[i];
    for (const auto& [t, w] : triangles) total.triangles[t] += w;
    total.value_sum += value_sum;
  }
};

// Uniform integer in [0, bound) from raw engine output, so that sampled runs
// are reproducible across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::array<int, kSubsetOrder> random_subset(std::mt19937_64& rng, int n) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < kSubsetOrder; ++i) {
    int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  std::array<int, kSubsetOrder> subset;
  std::copy_n(pool.begin(), kSubsetOrder, subset.begin());
  std::sort(subset.begin(), subset.end());
  return subset;
}

}  // namespace

AveragingResult averaging_decomposition(const Graph& g, const AveragingPlan& plan) {
  const int n = g.order();
  AveragingResult out;
  if (n < kSubsetOrder) {
    FractionalResult direct = pi3f(g);
    out.decomposition = std::move(direct.decomposition);
    out.subset_value_sum = direct.value;
    out.subsets = 1;
    out.classes = 1;
    return out;
  }

  const mpz_class all_subsets = binomial(n, kSubsetOrder);
  const mpz_class per_edge = binomial(n - 2, kSubsetOrder - 2);
  const unsigned jobs = plan.jobs == 0 ? default_jobs() : plan.jobs;

  std::vector<Accumulator> partial;
  for (unsigned w = 0; w < jobs; ++w) partial.emplace_back(n);

  Rational scale;
  if (plan.mode == AveragingPlan::Mode::Exhaustive) {
    if (all_subsets > mpz_class(std::to_string(plan.budget)))
      throw Error(ErrorKind::SizeExceeded, "C(" + std::to_string(n) + ",7) = " +
                                               all_subsets.get_str() + " exceeds the subset budget of " +
                                               std::to_string(plan.budget));
    out.subsets = all_subsets.get_ui();
    parallel_for(jobs, jobs, [&](unsigned, std::size_t worker) {
      std::size_t index = 0;
      for_each_subset(n, kSubsetOrder, [&](std::span<const int> subset) {
        if (index++ % jobs == worker) partial[worker].add_subset(g, subset);
      });
    });
    scale = Rational(1, per_edge);
  } else {
    if (plan.sample_count == 0)
      throw Error(ErrorKind::InvalidArgument, "sampled averaging needs a positive sample count");
    std::mt19937_64 rng(plan.rng_seed);
    std::vector<std::array<int, kSubsetOrder>> samples;
    samples.reserve(plan.sample_count);
    for (std::uint64_t s = 0; s < plan.sample_count; ++s) samples.push_back(random_subset(rng, n));
    out.subsets = plan.sample_count;
    parallel_for(jobs, jobs, [&](unsigned, std::size_t worker) {
      for (std::size_t s = worker; s < samples.size(); s += jobs) partial[worker].add_subset(g, samples[s]);
    });
    scale = Rational(all_subsets, per_edge * mpz_class(std::to_string(plan.sample_count)));
    out.approximate = true;
  }
  scale.canonicalize();

  Accumulator total(n);
  for (const Accumulator& p : partial) p.merge_into(total);
  std::unordered_map<std::string, bool> classes;
  for (const Accumulator& p : partial)
    for (const auto& [cert, _] : p.cache) classes[cert] = true;
  out.classes = classes.size();
  out.subset_value_sum = total.value_sum;

  Decomposition& d = out.decomposition;
  d.order = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Rational& w = total.edges[static_cast<std::size_t>(u) * n + v];
      if (sgn(w) != 0) d.edge_weights[{u, v}] = w * scale;
    }
  for (const auto& [t, w] : total.triangles)
    if (sgn(w) != 0) d.triangle_weights[t] = w * scale;

  if (out.approximate) {
    for (const auto& [e, c] : coverage(g, d)) {
      Rational r = c - 1;
      if (abs(r) > out.max_abs_residual) out.max_abs_residual = abs(r);
      out.coverage_residuals[e] = r;
    }
  }
  return out;
}

GreedyResult greedy_decomposition(const Graph& g) {
  Graph rest = g;
  std::vector<Triangle> removed;

  auto triangle_count = [&](int x, int y) { return std::popcount(rest.neighbors(x) & rest.neighbors(y)); };

  while (true) {
    const auto triangles = list_triangles(rest);
    if (triangles.empty()) break;

    const Triangle* best = nullptr;
    int best_stranded = 0;
    for (const Triangle& t : triangles) {
      rest.remove_edge(t.a, t.b);
      rest.remove_edge(t.a, t.c);
      rest.remove_edge(t.b, t.c);
      // Edges that shared a triangle with t lose it; count those left with none.
      std::vector<Edge> touched;
      // With t's edges gone, the common neighbours of x and y are exactly the
      // third vertices of the other triangles that used edge xy.
      auto consider = [&](int x, int y) {
        std::uint64_t common = rest.neighbors(x) & rest.neighbors(y);
        while (common) {
          int w = std::countr_zero(common);
          common &= common - 1;
          touched.push_back({std::min(x, w), std::max(x, w)});
          touched.push_back({std::min(y, w), std::max(y, w)});
        }
      };
      consider(t.a, t.b);
      consider(t.a, t.c);
      consider(t.b, t.c);
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      int stranded = 0;
      for (const Edge& e : touched)
        if (triangle_count(e.u, e.v) == 0) ++stranded;
      rest.add_edge(t.a, t.b);
      rest.add_edge(t.a, t.c);
      rest.add_edge(t.b, t.c);

      if (!best || stranded < best_stranded) {
        best = &t;
        best_stranded = stranded;
      }
    }
    removed.push_back(*best);
    rest.remove_edge(best->a, best->b);
    rest.remove_edge(best->a, best->c);
    rest.remove_edge(best->b, best->c);
  }

  GreedyResult out;
  out.triangles = static_cast<int>(removed.size());
  out.value = 2 * g.edge_count() - 3 * out.triangles;
  out.decomposition = decomposition_from_triangles(g, removed);
  return out;
}

CorollaryRecord corollary_check(const Graph& g) {
  const int n = g.order();
  CorollaryRecord r;
  r.k = Rational(g.edge_count()) - make_rational(n * n, 4);
  r.bound = 2 * r.k / 3;
  if (n <= kMaxExactPackingOrder) {
    r.packed = max_integer_triangle_packing(g).value;
    r.exact = true;
  } else {
    r.packed = greedy_decomposition(g).triangles;
  }
  return r;
}

}  // namespace tridecomp
