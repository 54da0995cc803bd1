#include "nsa/rational.hpp"

#include "nsa/error.hpp"

#include <cctype>

namespace nsa {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NegativeEvenRoot: return "NegativeEvenRoot";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::MixedClasses: return "MixedClasses";
    case ErrorKind::AlmostEverywhereZeroDivisor: return "AlmostEverywhereZeroDivisor";
    case ErrorKind::UltrafilterDependentZeroDivisor: return "UltrafilterDependentZeroDivisor";
    case ErrorKind::QuantifierPresent: return "QuantifierPresent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundedQuantifier: return "UnboundedQuantifier";
    case ErrorKind::UnboundConstant: return "UnboundConstant";
    case ErrorKind::QuantifierOverAtom: return "QuantifierOverAtom";
    case ErrorKind::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorKind::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorKind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorKind::DuplicateOpen: return "DuplicateOpen";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::DiscontinuousFamilyMember: return "DiscontinuousFamilyMember";
    case ErrorKind::AuditFailure: return "AuditFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorKind::InvalidInput, "not a rational: '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ZeroDenominator, "rational '" + std::string(text) + "'");
    out = Rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw Error(ErrorKind::InvalidInput, "not a rational: '" + std::string(text) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    out = Rational(w * scale + Integer(std::string(frac)), scale);
  } else {
    if (!all_digits(s))
      throw Error(ErrorKind::InvalidInput, "not a rational: '" + std::string(text) + "'");
    out = Rational(Integer(std::string(s)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_root(const Rational& q, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return q;
  const bool negative = sgn(q) < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

}  // namespace nsa
