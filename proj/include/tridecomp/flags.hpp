#ifndef TRIDECOMP_FLAGS_HPP
#define TRIDECOMP_FLAGS_HPP

#include "tridecomp/exactlin.hpp"
#include "tridecomp/graph.hpp"

#include <array>
#include <optional>

namespace tridecomp {

/// A fully labeled graph. Only the one-vertex type is used here.
struct FlagType {
  Graph graph;
  int order() const { return graph.order(); }
};

FlagType single_vertex_type();

/// A graph together with the ordered list of its labeled vertices.
struct Flag {
  Graph graph;
  std::vector<int> labels;
};

/// Label-preserving isomorphism of flags with the same type.
bool flags_isomorphic(const Flag& a, const Flag& b);

inline constexpr int kFlagCount = 7;
using FlagVector = std::array<Flag, kFlagCount>;

/// The seven 4-vertex flags over the one-vertex type, labeled vertex 0:
///   [0] no edges                      [4] triangle on the root + pendant
///   [1] one edge away from the root   [5] 4-cycle through the root
///   [2] K1,3 with the root as a leaf  [6] K4 minus an edge at the root
///   [3] K1,3 centred at the root
const FlagVector& seven_flags();

/// Index into seven_flags() of the flag induced by `root` (labeled) and the
/// three vertices in `others`, or nullopt when it is none of the seven.
std::optional<int> classify_flag(const Graph& h, int root, std::span<const int> others);

/// Integer numerators over a common positive integer denominator.
struct CertificateMatrix {
  mpz_class denominator;
  std::array<std::array<mpz_class, kFlagCount>, kFlagCount> numerators;

  RationalMatrix to_rational() const;
};

/// The published 7x7 certificate matrix over 12·10⁹.
const CertificateMatrix& builtin_certificate_matrix();

/// Zero direction of the builtin matrix: (1, 0, 3, 1, 0, 3, 0).
RationalVector certificate_kernel_vector();

using PairDensityTable = std::array<std::array<Rational, kFlagCount>, kFlagCount>;
using PairCountTable = std::array<std::array<long, kFlagCount>, kFlagCount>;

/// Root choices times ordered splits of the other six vertices into triples.
inline constexpr int kPairChoices = 7 * 20;

/// Entry [i][j] counts the (root, ordered split (S, S')) choices of a
/// 7-vertex h with (root, S) ≅ F_i and (root, S') ≅ F_j.
PairCountTable pair_count_table(const Graph& h);

/// Entry [i][j] is E p(F_i, F_j; h^σ): the root is uniform over the 7
/// vertices and the other six are split uniformly into an ordered pair of
/// complementary triples. Equals pair_count_table / kPairChoices.
PairDensityTable pair_density_table(const Graph& h);

/// Table entry for F_i, F_j with 1-based flag numbers i, j in 1..7.
Rational pair_density_expectation(int i, int j, const Graph& h);

/// c_U = Σ M_ij N_ij(U) with N the pair counts, i.e. kPairChoices times
/// Σ M_ij E p(F_i, F_j; U^σ). The published matrix is scaled for counts.
Rational coefficient_cu(const Graph& h, const RationalMatrix& m);

/// d_i = p(F_i, (h, labeled)), the density among 3-subsets of the other vertices.
std::array<Rational, kFlagCount> flag_densities(const Graph& h, int labeled);

/// dᵀ M d for d = flag_densities(h, labeled).
Rational quadratic_form_density(const Graph& h, int labeled, const RationalMatrix& m);

}  // namespace tridecomp

#endif
