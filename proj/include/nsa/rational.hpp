#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nsa {

/// Arbitrary-precision exact rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-7/2" or "0.25"; throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact n-th root of q if it is rational, nullopt otherwise. Odd roots of
/// negative values are negative; even roots of negatives are nullopt.
std::optional<Rational> rational_root(const Rational& q, unsigned long n);

Rational pow(const Rational& base, unsigned long exponent);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace nsa
