#include "nsa/polynomial.hpp"

#include "nsa/error.hpp"

#include <algorithm>
#include <numeric>

namespace nsa {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t exponent) {
  Polynomial p;
  if (sgn(coeff) == 0) return p;
  p.coeffs_.assign(exponent + 1, Rational(0));
  p.coeffs_[exponent] = coeff;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t Polynomial::low_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return 0;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw Error(ErrorKind::DivisionByZero, "polynomial scaled by 1/0");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Polynomial rem(*this);
  if (rem.degree() < divisor.degree() || rem.is_zero()) return {Polynomial(), rem};
  std::vector<Rational> quot(rem.degree() - divisor.degree() + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = rem.degree() - divisor.degree();
    Rational factor = rem.leading() / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
      rem.coeffs_[i + shift] -= factor * divisor.coeffs_[i];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::pow(unsigned long exponent) const {
  Polynomial result(Rational(1));
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial out;
  out.coeffs_.assign(k, Rational(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Polynomial Polynomial::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial out;
  out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return out;
}

Polynomial Polynomial::stretched(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  Polynomial out;
  out.coeffs_.assign(degree() * k + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * k] = coeffs_[i];
  return out;
}

Polynomial Polynomial::compressed(std::size_t d) const {
  if (is_zero() || d == 1) return *this;
  Polynomial out;
  out.coeffs_.assign(degree() / d + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    out.coeffs_[i / d] = coeffs_[i];
  }
  return out;
}

Polynomial Polynomial::reversed() const {
  Polynomial out(*this);
  std::reverse(out.coeffs_.begin(), out.coeffs_.end());
  out.trim();
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out(*this);
  out /= leading();
  return out;
}

std::size_t Polynomial::exponent_gcd() const {
  std::size_t g = 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) g = std::gcd(g, i);
  return g;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational root_bound(const Polynomial& p) {
  if (p.is_constant()) return Rational(1);
  Rational best(0);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace nsa
