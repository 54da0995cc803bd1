#include "nsa/hyperreal.hpp"

#include "nsa/detail/expr_parser.hpp"
#include "nsa/error.hpp"

#include <numeric>

namespace nsa::hyper {

namespace {

// Rewrites a with variable eps^(1/target); target must be a multiple of a's ramification.
std::pair<Polynomial, Polynomial> rebased(const Hyperreal& a, std::size_t target) {
  std::size_t k = target / a.ramification();
  return {a.numerator().stretched(k), a.denominator().stretched(k)};
}

std::size_t common_ramification(const Hyperreal& a, const Hyperreal& b) {
  return std::lcm(a.ramification(), b.ramification());
}

std::string exponent_text(std::size_t k, std::size_t ram) {
  Rational e(static_cast<unsigned long>(k), static_cast<unsigned long>(ram));
  e.canonicalize();
  if (e == 1) return "e";
  if (e.get_den() == 1) return "e^" + e.get_str();
  return "e^(" + e.get_str() + ")";
}

std::string poly_text(const Polynomial& p, std::size_t ram) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (sgn(cs[i]) == 0) continue;
    Rational mag = abs(cs[i]);
    if (sgn(cs[i]) < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += exponent_text(i, ram);
  }
  return out;
}

// Power-series n-th root of f with f(0) = 1, truncated to degree deg(f)/n.
// Returns nullopt unless the truncation raised to n reproduces f exactly.
std::optional<Polynomial> polynomial_root(const Polynomial& f, unsigned long n) {
  if (f.degree() % n != 0) return std::nullopt;
  const std::size_t target = f.degree() / n;
  const Rational alpha(1, static_cast<long>(n));
  std::vector<Rational> g(target + 1, Rational(0));
  g[0] = 1;
  for (std::size_t k = 1; k <= target; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational fj = f.coeff(j);
      if (sgn(fj) == 0) continue;
      acc += ((alpha + 1) * static_cast<long>(j) - static_cast<long>(k)) * fj * g[k - j];
    }
    g[k] = acc / static_cast<long>(k);
  }
  Polynomial root(std::move(g));
  if (root.pow(n) != f) return std::nullopt;
  return root;
}

}  // namespace

Hyperreal::Hyperreal() : num_(), den_(Rational(1)), ram_(1) {}

Hyperreal::Hyperreal(const Rational& value) : num_(value), den_(Rational(1)), ram_(1) {}

Hyperreal Hyperreal::epsilon() { return Hyperreal(Polynomial::variable(), Polynomial(Rational(1)), 1); }

Hyperreal Hyperreal::normalize(Polynomial num, Polynomial den, std::size_t ramification) {
  if (ramification == 0) throw Error(ErrorKind::InvalidInput, "ramification index must be positive");
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
  if (num.is_zero()) return Hyperreal();
  Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  Rational lowest = den.lowest();
  if (lowest != 1) {
    num /= lowest;
    den /= lowest;
  }
  std::size_t d = std::gcd(ramification, std::gcd(num.exponent_gcd(), den.exponent_gcd()));
  if (d > 1) {
    num = num.compressed(d);
    den = den.compressed(d);
    ramification /= d;
  }
  return Hyperreal(std::move(num), std::move(den), ramification);
}

Hyperreal Hyperreal::operator-() const { return Hyperreal(-num_, den_, ram_); }

Hyperreal operator+(const Hyperreal& a, const Hyperreal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::size_t m = common_ramification(a, b);
  auto [an, ad] = rebased(a, m);
  auto [bn, bd] = rebased(b, m);
  if (ad == bd) return Hyperreal::normalize(an + bn, ad, m);
  return Hyperreal::normalize(an * bd + bn * ad, ad * bd, m);
}

Hyperreal operator-(const Hyperreal& a, const Hyperreal& b) { return a + (-b); }

Hyperreal operator*(const Hyperreal& a, const Hyperreal& b) {
  if (a.is_zero() || b.is_zero()) return Hyperreal();
  std::size_t m = common_ramification(a, b);
  auto [an, ad] = rebased(a, m);
  auto [bn, bd] = rebased(b, m);
  return Hyperreal::normalize(an * bn, ad * bd, m);
}

Hyperreal operator/(const Hyperreal& a, const Hyperreal& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero element");
  std::size_t m = common_ramification(a, b);
  auto [an, ad] = rebased(a, m);
  auto [bn, bd] = rebased(b, m);
  return Hyperreal::normalize(an * bd, ad * bn, m);
}

std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b) { return compare(a, b); }

std::string Hyperreal::to_string() const {
  if (den_ == Polynomial(Rational(1))) return poly_text(num_, ram_);
  return "(" + poly_text(num_, ram_) + ")/(" + poly_text(den_, ram_) + ")";
}

Hyperreal add(const Hyperreal& a, const Hyperreal& b) { return a + b; }
Hyperreal sub(const Hyperreal& a, const Hyperreal& b) { return a - b; }
Hyperreal mul(const Hyperreal& a, const Hyperreal& b) { return a * b; }
Hyperreal div(const Hyperreal& a, const Hyperreal& b) { return a / b; }
Hyperreal neg(const Hyperreal& a) { return -a; }
Hyperreal inv(const Hyperreal& a) { return Hyperreal(1) / a; }

Hyperreal pow(const Hyperreal& a, long exponent) {
  if (exponent < 0) return inv(pow(a, -exponent));
  auto e = static_cast<unsigned long>(exponent);
  return Hyperreal::normalize(a.numerator().pow(e), a.denominator().pow(e), a.ramification());
}

int sign(const Hyperreal& a) {
  // The denominator's lowest coefficient is 1, so the numerator decides.
  if (a.is_zero()) return 0;
  return sgn(a.numerator().lowest());
}

std::strong_ordering compare(const Hyperreal& a, const Hyperreal& b) {
  int s = sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Infinitesimal: return "infinitesimal";
    case Kind::Appreciable: return "appreciable";
    case Kind::Infinite: return "infinite";
  }
  return "?";
}

Classification classify(const Hyperreal& a) {
  if (a.is_zero()) return {Kind::Zero, std::nullopt};
  long low_num = static_cast<long>(a.numerator().low_order());
  long low_den = static_cast<long>(a.denominator().low_order());
  Rational ord(low_num - low_den, static_cast<long>(a.ramification()));
  ord.canonicalize();
  Kind kind = sgn(ord) > 0 ? Kind::Infinitesimal : sgn(ord) == 0 ? Kind::Appreciable : Kind::Infinite;
  return {kind, ord};
}

std::string StandardPart::to_string() const {
  switch (kind) {
    case Kind::Real: return value.get_str();
    case Kind::PlusInfinity: return "+inf";
    case Kind::MinusInfinity: return "-inf";
  }
  return "?";
}

StandardPart st(const Hyperreal& a) {
  Classification c = classify(a);
  switch (c.kind) {
    case Kind::Zero:
    case Kind::Infinitesimal:
      return {StandardPart::Kind::Real, Rational(0)};
    case Kind::Appreciable:
      return {StandardPart::Kind::Real, a.numerator().lowest() / a.denominator().lowest()};
    case Kind::Infinite:
      return {sign(a) > 0 ? StandardPart::Kind::PlusInfinity : StandardPart::Kind::MinusInfinity, Rational(0)};
  }
  return {};
}

Decomposition decompose(const Hyperreal& a) {
  StandardPart s = st(a);
  if (s.kind != StandardPart::Kind::Real)
    throw Error(ErrorKind::NotFinite, a.to_string() + " is infinite");
  return {s.value, a - Hyperreal(s.value)};
}

bool infinitesimally_close(const Hyperreal& a, const Hyperreal& b) {
  Kind k = classify(a - b).kind;
  return k == Kind::Zero || k == Kind::Infinitesimal;
}

Hyperreal nth_root(const Hyperreal& a, unsigned long n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "root index must be positive");
  if (n == 1 || a.is_zero()) return a;
  if (n % 2 == 0 && sign(a) < 0)
    throw Error(ErrorKind::NegativeEvenRoot, "even root of negative " + a.to_string());

  // a = c * t^(k_num - k_den) * p(t)/q(t) with p(0) = q(0) = 1.
  const Polynomial& num = a.numerator();
  const Polynomial& den = a.denominator();
  std::size_t k_num = num.low_order();
  std::size_t k_den = den.low_order();
  Rational c = num.lowest();
  Polynomial p = num.unshifted(k_num);
  p /= c;
  Polynomial q = den.unshifted(k_den);

  auto c_root = rational_root(c, n);
  if (!c_root)
    throw Error(ErrorKind::NotRepresentable, "constant " + c.get_str() + " has no rational root of index " +
                                                 std::to_string(n));
  auto p_root = polynomial_root(p, n);
  auto q_root = polynomial_root(q, n);
  if (!p_root || !q_root)
    throw Error(ErrorKind::NotRepresentable,
                a.to_string() + " is not an n-th power in any ramified rational-function field");

  // With s = eps^(1/(m n)) we have t = s^n, so t^(k/n) = s^k.
  Polynomial root_num = p_root->stretched(n).shifted(k_num) * (*c_root);
  Polynomial root_den = q_root->stretched(n).shifted(k_den);
  return Hyperreal::normalize(std::move(root_num), std::move(root_den), a.ramification() * n);
}

bool in_star_interval(const Hyperreal& a, const Rational& lo, const Rational& hi, IntervalKind kind) {
  if (lo > hi)
    throw Error(ErrorKind::EmptyInterval, "lower bound " + lo.get_str() + " exceeds upper bound " + hi.get_str());
  auto lower = compare(a, Hyperreal(lo));
  auto upper = compare(a, Hyperreal(hi));
  bool left_closed = kind == IntervalKind::Closed || kind == IntervalKind::RightOpen;
  bool right_closed = kind == IntervalKind::Closed || kind == IntervalKind::LeftOpen;
  bool above = left_closed ? lower >= 0 : lower > 0;
  bool below = right_closed ? upper <= 0 : upper < 0;
  return above && below;
}

namespace {

struct HyperField {
  using Value = Hyperreal;
  static Value constant(const Rational& q) { return Hyperreal(q); }
  static Value variable() { return Hyperreal::epsilon(); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value sub(const Value& a, const Value& b) { return a - b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value quotient(const Value& a, const Value& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "'" + a.to_string() + "' divided by zero");
    return a / b;
  }
  static Value negate(const Value& a) { return -a; }
  static std::optional<Rational> as_rational(const Value& a) {
    if (!a.is_standard()) return std::nullopt;
    return st(a).value;
  }
  static Value power(const Value& base, const Rational& exponent) {
    const Integer& p = exponent.get_num();
    const Integer& q = exponent.get_den();
    if (!p.fits_slong_p() || !q.fits_ulong_p())
      throw Error(ErrorKind::InvalidInput, "exponent too large");
    if (base.is_zero() && sgn(p) < 0) throw Error(ErrorKind::ZeroDenominator, "negative power of zero");
    Value raised = pow(base, p.get_si());
    return nth_root(raised, q.get_ui());
  }
};

}  // namespace

Hyperreal parse(std::string_view text) {
  return detail::ExprParser<HyperField>(text, {"eps", "ε", "e"}).parse();
}

}  // namespace nsa::hyper
