#pragma once

#include "nsa/polynomial.hpp"
#include "nsa/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace nsa::hyper {

/*
 * Computable model of the hyperreal line.
 *
 * An element is a rational function num(t)/den(t) over Q where t denotes
 * eps^(1/m) for a formal positive infinitesimal eps and a ramification index
 * m >= 1.  The order is the order "as eps -> 0+": the sign of an element is
 * the sign of its lowest-order Laurent coefficient.
 *
 * Canonical form (so structural equality is field equality):
 *   - gcd(num, den) = 1,
 *   - the lowest nonzero coefficient of den is 1,
 *   - m is minimal: no d > 1 divides m and every exponent in num and den,
 *   - zero is 0/1 with m = 1.
 */
class Hyperreal {
 public:
  /// Zero.
  Hyperreal();
  /// Embedded standard rational.
  Hyperreal(const Rational& value);  // NOLINT(google-explicit-constructor)
  Hyperreal(long value) : Hyperreal(Rational(value)) {}  // NOLINT

  /// The formal positive infinitesimal eps.
  static Hyperreal epsilon();

  /// Builds the canonical representative of num/den with the variable
  /// denoting eps^(1/ramification). Throws ZeroDenominator.
  static Hyperreal normalize(Polynomial num, Polynomial den, std::size_t ramification = 1);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t ramification() const { return ram_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the element is a standard rational (no eps dependence).
  bool is_standard() const { return num_.is_constant() && den_.is_constant(); }

  Hyperreal operator-() const;
  friend Hyperreal operator+(const Hyperreal& a, const Hyperreal& b);
  friend Hyperreal operator-(const Hyperreal& a, const Hyperreal& b);
  friend Hyperreal operator*(const Hyperreal& a, const Hyperreal& b);
  /// Throws DivisionByZero.
  friend Hyperreal operator/(const Hyperreal& a, const Hyperreal& b);
  Hyperreal& operator+=(const Hyperreal& b) { return *this = *this + b; }
  Hyperreal& operator-=(const Hyperreal& b) { return *this = *this - b; }
  Hyperreal& operator*=(const Hyperreal& b) { return *this = *this * b; }

  friend bool operator==(const Hyperreal&, const Hyperreal&) = default;
  friend std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b);

  /// Canonical text, e.g. "6+e-e^2" or "(2+e)/(1+3*e)"; parseable back.
  std::string to_string() const;

 private:
  Hyperreal(Polynomial num, Polynomial den, std::size_t ram)
      : num_(std::move(num)), den_(std::move(den)), ram_(ram) {}

  Polynomial num_;
  Polynomial den_;
  std::size_t ram_ = 1;
};

Hyperreal add(const Hyperreal& a, const Hyperreal& b);
Hyperreal sub(const Hyperreal& a, const Hyperreal& b);
Hyperreal mul(const Hyperreal& a, const Hyperreal& b);
Hyperreal div(const Hyperreal& a, const Hyperreal& b);
Hyperreal neg(const Hyperreal& a);
Hyperreal inv(const Hyperreal& a);
Hyperreal pow(const Hyperreal& a, long exponent);

/// -1, 0 or +1.
int sign(const Hyperreal& a);
std::strong_ordering compare(const Hyperreal& a, const Hyperreal& b);

enum class Kind { Zero, Infinitesimal, Appreciable, Infinite };

std::string_view to_string(Kind kind);

struct Classification {
  Kind kind = Kind::Zero;
  /// Order of magnitude in powers of eps; absent for zero.
  std::optional<Rational> ord;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Hyperreal& a);

struct StandardPart {
  enum class Kind { Real, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Real;
  Rational value;  // meaningful for Real only

  friend bool operator==(const StandardPart&, const StandardPart&) = default;
  std::string to_string() const;
};

StandardPart st(const Hyperreal& a);

struct Decomposition {
  Rational real_part;
  Hyperreal infinitesimal_part;
};

/// a = real + infinitesimal; throws NotFinite for infinite a.
Decomposition decompose(const Hyperreal& a);

bool infinitesimally_close(const Hyperreal& a, const Hyperreal& b);

/// Exact n-th root inside the ramified rational-function field.
/// Throws NegativeEvenRoot or NotRepresentable.
Hyperreal nth_root(const Hyperreal& a, unsigned long n);

enum class IntervalKind { Open, Closed, LeftOpen, RightOpen };

/// Membership in the extension of a standard interval; throws EmptyInterval.
bool in_star_interval(const Hyperreal& a, const Rational& lo, const Rational& hi, IntervalKind kind);

/// Parses the textual syntax ("(2+e)/(1+3*e)", "e^(1/2)", "1/e", ...).
/// Throws SyntaxError, ZeroDenominator, NotRepresentable.
Hyperreal parse(std::string_view text);

}  // namespace nsa::hyper
