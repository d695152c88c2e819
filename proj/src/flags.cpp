#include "tridecomp/flags.hpp"

#include "tridecomp/error.hpp"

#include <algorithm>
#include <initializer_list>

namespace tridecomp {

FlagType single_vertex_type() { return FlagType{Graph(1)}; }

bool flags_isomorphic(const Flag& a, const Flag& b) {
  const int n = a.graph.order();
  if (n != b.graph.order() || a.labels.size() != b.labels.size()) return false;
  if (a.graph.edge_count() != b.graph.edge_count()) return false;

  // perm maps vertices of a to vertices of b; labeled vertices are pinned.
  std::vector<int> free_a, free_b;
  for (int v = 0; v < n; ++v) {
    if (std::find(a.labels.begin(), a.labels.end(), v) == a.labels.end()) free_a.push_back(v);
    if (std::find(b.labels.begin(), b.labels.end(), v) == b.labels.end()) free_b.push_back(v);
  }
  std::vector<int> perm(n, -1);
  for (std::size_t i = 0; i < a.labels.size(); ++i) perm[a.labels[i]] = b.labels[i];
  std::sort(free_b.begin(), free_b.end());
  do {
    for (std::size_t i = 0; i < free_a.size(); ++i) perm[free_a[i]] = free_b[i];
    bool same = true;
    for (int u = 0; u < n && same; ++u)
      for (int v = u + 1; v < n; ++v)
        if (a.graph.adjacent(u, v) != b.graph.adjacent(perm[u], perm[v])) {
          same = false;
          break;
        }
    if (same) return true;
  } while (std::next_permutation(free_b.begin(), free_b.end()));
  return false;
}

namespace {

Flag make_flag(std::initializer_list<Edge> edges) {
  Flag f{Graph(4), {0}};
  for (const Edge& e : edges) f.graph.add_edge(e.u, e.v);
  return f;
}

// Lookup from the 6-bit edge pattern of (root, o0, o1, o2) to a flag index.
// Bit order follows graph6 columns: (0,1) (0,2) (1,2) (0,3) (1,3) (2,3).
constexpr std::array<Edge, 6> kPatternPairs{{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}};

std::array<int, 64> build_pattern_table() {
  std::array<int, 64> table;
  const FlagVector& flags = seven_flags();
  for (int pattern = 0; pattern < 64; ++pattern) {
    Flag f{Graph(4), {0}};
    for (int b = 0; b < 6; ++b)
      if ((pattern >> b) & 1) f.graph.add_edge(kPatternPairs[b].u, kPatternPairs[b].v);
    table[pattern] = -1;
    for (int i = 0; i < kFlagCount; ++i)
      if (flags_isomorphic(f, flags[i])) {
        table[pattern] = i;
        break;
      }
  }
  return table;
}

const std::array<int, 64>& pattern_table() {
  static const std::array<int, 64> table = build_pattern_table();
  return table;
}

int classify_pattern(const Graph& h, int root, int a, int b, int c) {
  const std::array<int, 4> v{root, a, b, c};
  int pattern = 0;
  for (int bit = 0; bit < 6; ++bit)
    if (h.adjacent(v[kPatternPairs[bit].u], v[kPatternPairs[bit].v])) pattern |= 1 << bit;
  return pattern_table()[pattern];
}

}  // namespace

const FlagVector& seven_flags() {
  static const FlagVector flags{
      make_flag({}),
      make_flag({{2, 3}}),
      make_flag({{0, 3}, {1, 3}, {2, 3}}),
      make_flag({{0, 1}, {0, 2}, {0, 3}}),
      make_flag({{0, 2}, {0, 3}, {1, 3}, {2, 3}}),
      make_flag({{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
      make_flag({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
  };
  return flags;
}

std::optional<int> classify_flag(const Graph& h, int root, std::span<const int> others) {
  if (others.size() != 3) throw Error(ErrorKind::InvalidArgument, "flags have 3 unlabeled vertices");
  int index = classify_pattern(h, root, others[0], others[1], others[2]);
  if (index < 0) return std::nullopt;
  return index;
}

RationalMatrix CertificateMatrix::to_rational() const {
  if (sgn(denominator) <= 0)
    throw Error(ErrorKind::InvalidArgument, "certificate denominator must be positive");
  RationalMatrix m(kFlagCount);
  for (int i = 0; i < kFlagCount; ++i)
    for (int j = 0; j < kFlagCount; ++j) {
      m(i, j) = make_rational(numerators[i][j], denominator);
    }
  return m;
}

const CertificateMatrix& builtin_certificate_matrix() {
  static const CertificateMatrix matrix = [] {
    constexpr long long kNumerators[kFlagCount][kFlagCount] = {
        {1800000000, 2444365956, 640188285, -1524146769, 1386815580, -732139362, -129387078},
        {2444365956, 4759879134, 1177441152, -1783771230, 2546923788, -1397639394, -143552208},
        {640188285, 1177441152, 484273772, -317303211, 1038156300, -591902130, -6783162},
        {-1524146769, -1783771230, -317303211, 1558870290, -651906630, 305728704, 154602378},
        {1386815580, 2546923788, 1038156300, -651906630, 2285399634, -1283125950, -10755036},
        {-732139362, -1397639394, -591902130, 305728704, -1283125950, 734039016, -1621938},
        {-129387078, -143552208, -6783162, 154602378, -10755036, -1621938, 23860164},
    };
    CertificateMatrix m;
    m.denominator = mpz_class("12000000000");
    for (int i = 0; i < kFlagCount; ++i)
      for (int j = 0; j < kFlagCount; ++j) m.numerators[i][j] = mpz_class(std::to_string(kNumerators[i][j]));
    return m;
  }();
  return matrix;
}

RationalVector certificate_kernel_vector() {
  return {Rational(1), Rational(0), Rational(3), Rational(1), Rational(0), Rational(3), Rational(0)};
}

PairCountTable pair_count_table(const Graph& h) {
  if (h.order() != 7)
    throw Error(ErrorKind::InvalidArgument, "pair densities need a 7-vertex graph, got " +
                                                std::to_string(h.order()));
  PairCountTable counts{};
  for (int root = 0; root < 7; ++root) {
    std::array<int, 6> rest;
    for (int v = 0, k = 0; v < 7; ++v)
      if (v != root) rest[k++] = v;
    for_each_subset(6, 3, [&](std::span<const int> pick) {
      std::array<int, 3> first, second;
      for (int t = 0, a = 0, b = 0; t < 6; ++t) {
        if (a < 3 && pick[a] == t)
          first[a++] = rest[t];
        else
          second[b++] = rest[t];
      }
      int i = classify_pattern(h, root, first[0], first[1], first[2]);
      int j = classify_pattern(h, root, second[0], second[1], second[2]);
      if (i >= 0 && j >= 0) ++counts[i][j];
    });
  }
  return counts;
}

PairDensityTable pair_density_table(const Graph& h) {
  const PairCountTable counts = pair_count_table(h);
  PairDensityTable table;
  for (int i = 0; i < kFlagCount; ++i)
    for (int j = 0; j < kFlagCount; ++j) {
      table[i][j] = make_rational(counts[i][j], kPairChoices);
      table[i][j].canonicalize();
    }
  return table;
}

Rational pair_density_expectation(int i, int j, const Graph& h) {
  if (i < 1 || i > kFlagCount || j < 1 || j > kFlagCount)
    throw Error(ErrorKind::InvalidArgument, "flag index out of range");
  return pair_density_table(h)[i - 1][j - 1];
}

Rational coefficient_cu(const Graph& h, const RationalMatrix& m) {
  if (m.dim() != kFlagCount) throw Error(ErrorKind::InvalidArgument, "certificate matrix must be 7x7");
  const PairCountTable counts = pair_count_table(h);
  Rational c;
  for (int i = 0; i < kFlagCount; ++i)
    for (int j = 0; j < kFlagCount; ++j)
      if (counts[i][j] != 0) c += m(i, j) * counts[i][j];
  return c;
}

std::array<Rational, kFlagCount> flag_densities(const Graph& h, int labeled) {
  const int n = h.order();
  if (n < 4) throw Error(ErrorKind::InvalidArgument, "flag densities need at least 4 vertices");
  if (labeled < 0 || labeled >= n) throw Error(ErrorKind::InvalidArgument, "labeled vertex out of range");
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != labeled) rest.push_back(v);
  std::array<long, kFlagCount> counts{};
  for_each_subset(n - 1, 3, [&](std::span<const int> pick) {
    int i = classify_pattern(h, labeled, rest[pick[0]], rest[pick[1]], rest[pick[2]]);
    if (i >= 0) ++counts[i];
  });
  const mpz_class total = binomial(n - 1, 3);
  std::array<Rational, kFlagCount> d;
  for (int i = 0; i < kFlagCount; ++i) {
    d[i] = make_rational(counts[i], total);
  }
  return d;
}

Rational quadratic_form_density(const Graph& h, int labeled, const RationalMatrix& m) {
  if (m.dim() != kFlagCount) throw Error(ErrorKind::InvalidArgument, "certificate matrix must be 7x7");
  auto d = flag_densities(h, labeled);
  return quadratic_form(m, d);
}

}  // namespace tridecomp
