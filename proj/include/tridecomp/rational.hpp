#ifndef TRIDECOMP_RATIONAL_HPP
#define TRIDECOMP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tridecomp {

/// Arbitrary-precision rational. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// num/den reduced to canonical form; den must be nonzero.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Renders as "p/q", with the denominator written even when it is 1.
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" or "-p/q". Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

/// Binomial coefficient as an exact integer (zero when k > n).
mpz_class binomial(unsigned n, unsigned k);

double approx(const Rational& q);

}  // namespace tridecomp

#endif
