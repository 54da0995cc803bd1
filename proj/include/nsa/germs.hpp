#pragma once

#include "nsa/hyperreal.hpp"
#include "nsa/polynomial.hpp"
#include "nsa/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nsa::germs {

/// p(n)/q(n), gcd-reduced with monic q.
struct RationalFunctionOfN {
  Polynomial num;
  Polynomial den;
  friend bool operator==(const RationalFunctionOfN&, const RationalFunctionOfN&) = default;
};

/// pre[0], pre[1], ..., then period repeated forever; minimal period and
/// minimal preperiod after normalization.
struct EventuallyPeriodic {
  std::vector<Rational> preperiod;
  std::vector<Rational> period;
  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

/// Equivalence class of a rational sequence modulo almost-everywhere
/// agreement, restricted to two decidable classes. Indices start at 1.
class Germ {
 public:
  /// Throws ZeroDenominator for q = 0.
  static Germ rational_function(Polynomial num, Polynomial den);
  /// Throws InvalidInput for an empty period.
  static Germ eventually_periodic(std::vector<Rational> preperiod, std::vector<Rational> period);

  bool is_rational_function() const { return std::holds_alternative<RationalFunctionOfN>(value_); }
  bool is_eventually_periodic() const { return !is_rational_function(); }
  const RationalFunctionOfN& rational_function() const { return std::get<RationalFunctionOfN>(value_); }
  const EventuallyPeriodic& eventually_periodic() const { return std::get<EventuallyPeriodic>(value_); }

  /// The n-th term of the representative; throws ZeroDenominator when a
  /// rational function is evaluated at a pole.
  Rational term(std::size_t n) const;

  /// Every index at or beyond this bound lies past all poles / the preperiod.
  std::size_t definition_bound() const;

  /// "rf((2*n+1)/(n+3))" or "ep([1,2];[0,1])".
  std::string to_string() const;

  friend bool operator==(const Germ&, const Germ&) = default;

 private:
  explicit Germ(std::variant<RationalFunctionOfN, EventuallyPeriodic> v) : value_(std::move(v)) {}
  std::variant<RationalFunctionOfN, EventuallyPeriodic> value_;
};

Germ embed_constant(const Rational& c);

// Binary operations need both germs in one class. An eventually constant
// periodic germ is accepted alongside a rational function; anything else
// mixed throws MixedClasses.

Germ add(const Germ& a, const Germ& b);
Germ sub(const Germ& a, const Germ& b);
Germ mul(const Germ& a, const Germ& b);
Germ neg(const Germ& a);
Germ inv(const Germ& a);

enum class AeVerdict { TrueAE, FalseAE, UltrafilterDependent };

std::string_view to_string(AeVerdict v);
AeVerdict negate(AeVerdict v);

AeVerdict ae_equal(const Germ& a, const Germ& b);
AeVerdict ae_less(const Germ& a, const Germ& b);

struct GermClassification {
  /// Set for rational functions and for periodic germs that are a.e.
  /// constant; other periodic germs get the per-residue report only.
  std::optional<hyper::Classification> definite;
  /// Standard part for definite finite germs.
  std::optional<Rational> standard_part;
  /// For eventually periodic germs: the classification on each residue class
  /// of the (minimal) period.
  std::vector<hyper::Classification> per_residue;
};

GermClassification classify_germ(const Germ& a);

/// n -> 1/eps. Throws MixedClasses for eventually periodic germs.
hyper::Hyperreal to_hyperreal(const Germ& a);

/// Parses "rf(...)" (rational expression in n) or "ep([..];[..])".
Germ parse_germ(std::string_view text);

// Quantifier-free formulas over =, <, +, -, * and rational constants.

struct QfTerm {
  enum class Kind { Variable, Constant, Add, Sub, Mul, Neg };
  Kind kind = Kind::Constant;
  std::string name;
  Rational value;
  std::vector<QfTerm> args;
  friend bool operator==(const QfTerm&, const QfTerm&) = default;
};

struct QfFormula {
  enum class Kind { Equal, Less, Not, And, Or, Implies, Iff };
  Kind kind = Kind::Equal;
  std::vector<QfTerm> terms;     // two operands for Equal / Less
  std::vector<QfFormula> parts;  // operands of connectives
  friend bool operator==(const QfFormula&, const QfFormula&) = default;
};

/// Throws SyntaxError, or QuantifierPresent when forall/exists occurs.
QfFormula parse_qf(std::string_view text);

using Assignment = std::map<std::string, Germ, std::less<>>;

/// Truth of the formula in the ultrapower: the verdict of the index set on
/// which the formula holds pointwise. Throws MixedClasses, UnboundConstant.
AeVerdict los_check_qf(const QfFormula& formula, const Assignment& assignment);

/// Index beyond which the truth value of every atom is periodic (constant for
/// rational functions).
std::size_t stabilization_bound(const QfFormula& formula, const Assignment& assignment);

/// Cross-check of los_check_qf: evaluates the formula on concrete rational
/// terms over one full period starting at the stabilization bound.
AeVerdict los_check_pointwise(const QfFormula& formula, const Assignment& assignment);

}  // namespace nsa::germs
