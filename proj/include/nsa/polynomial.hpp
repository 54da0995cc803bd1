#pragma once

#include "nsa/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsa {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the top coefficient is
/// nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(const Rational& constant);

  static Polynomial monomial(const Rational& coeff, std::size_t exponent);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of the zero polynomial is reported as 0; check is_zero() first.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::size_t low_order() const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& lowest() const { return coeffs_[low_order()]; }

  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);
  Polynomial& operator/=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial pow(unsigned long exponent) const;
  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const;
  /// Divides by x^k; requires low_order() >= k.
  Polynomial unshifted(std::size_t k) const;
  /// p(x) -> p(x^k).
  Polynomial stretched(std::size_t k) const;
  /// p(x^d) -> p(x); requires every exponent divisible by d.
  Polynomial compressed(std::size_t d) const;
  /// x^deg * p(1/x).
  Polynomial reversed() const;
  Polynomial monic() const;

  /// gcd of all exponents carrying nonzero coefficients (0 when there are none
  /// other than the constant term).
  std::size_t exponent_gcd() const;

  /// Human readable form in the given variable, e.g. "2+3*x-1/2*x^2".
  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Cauchy bound: every real root of p has absolute value below the result.
Rational root_bound(const Polynomial& p);

}  // namespace nsa
