#include "nsa/germs.hpp"

#include "nsa/detail/expr_parser.hpp"
#include "nsa/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace nsa::germs {

namespace {

RationalFunctionOfN reduce(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "germ denominator is the zero polynomial");
  if (num.is_zero()) return {Polynomial(), Polynomial{1}};
  Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  Rational lead = den.leading();
  num /= lead;
  den /= lead;
  return {std::move(num), std::move(den)};
}

EventuallyPeriodic minimize(std::vector<Rational> pre, std::vector<Rational> period) {
  const std::size_t len = period.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < len && ok; ++i) ok = period[i] == period[i - p];
    if (ok) {
      period.resize(p);
      break;
    }
  }
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return {std::move(pre), std::move(period)};
}

// An eventually constant periodic germ is also a constant rational function;
// that is the only bridge between the two classes.
std::pair<Germ, Germ> same_class(const Germ& a, const Germ& b) {
  if (a.is_rational_function() == b.is_rational_function()) return {a, b};
  auto as_rf = [](const Germ& g) -> std::optional<Germ> {
    const auto& e = g.eventually_periodic();
    if (e.period.size() != 1) return std::nullopt;
    return Germ::rational_function(Polynomial(e.period.front()), Polynomial{1});
  };
  std::optional<Germ> lifted = as_rf(a.is_rational_function() ? b : a);
  if (!lifted)
    throw Error(ErrorKind::MixedClasses, a.to_string() + " and " + b.to_string() + " belong to different classes");
  return a.is_rational_function() ? std::pair{a, *lifted} : std::pair{*lifted, b};
}

// Terms of a at 0-based positions [0, count).
std::vector<Rational> expand(const EventuallyPeriodic& a, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < a.preperiod.size())
      out.push_back(a.preperiod[i]);
    else
      out.push_back(a.period[(i - a.preperiod.size()) % a.period.size()]);
  }
  return out;
}

struct Aligned {
  std::size_t pre = 0;
  std::size_t period = 1;
  std::vector<Rational> a, b;
};

Aligned align(const EventuallyPeriodic& a, const EventuallyPeriodic& b) {
  Aligned out;
  out.pre = std::max(a.preperiod.size(), b.preperiod.size());
  out.period = std::lcm(a.period.size(), b.period.size());
  out.a = expand(a, out.pre + out.period);
  out.b = expand(b, out.pre + out.period);
  return out;
}

template <class Op>
Germ pointwise(const EventuallyPeriodic& a, const EventuallyPeriodic& b, Op op) {
  Aligned al = align(a, b);
  std::vector<Rational> values(al.a.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = op(al.a[i], al.b[i]);
  std::vector<Rational> pre(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(al.pre));
  std::vector<Rational> per(values.begin() + static_cast<std::ptrdiff_t>(al.pre), values.end());
  return Germ::eventually_periodic(std::move(pre), std::move(per));
}

AeVerdict from_pattern(const std::vector<bool>& holds) {
  bool any = std::find(holds.begin(), holds.end(), true) != holds.end();
  bool all = std::find(holds.begin(), holds.end(), false) == holds.end();
  if (all) return AeVerdict::TrueAE;
  if (!any) return AeVerdict::FalseAE;
  return AeVerdict::UltrafilterDependent;
}

// Tail pattern of a relation: entry r tells whether it holds at tail
// position r of the aligned period.
template <class Rel>
std::vector<bool> tail_pattern(const EventuallyPeriodic& a, const EventuallyPeriodic& b, Rel rel) {
  Aligned al = align(a, b);
  std::vector<bool> out(al.period);
  for (std::size_t r = 0; r < al.period; ++r) out[r] = rel(al.a[al.pre + r], al.b[al.pre + r]);
  return out;
}

// Sign of the rational function at +infinity.
int sign_at_infinity(const RationalFunctionOfN& f) {
  if (f.num.is_zero()) return 0;
  return sgn(f.num.leading()) * sgn(f.den.leading());
}

std::size_t ceil_bound(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return 1;
  Rational b = root_bound(p);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return static_cast<std::size_t>(c.get_ui()) + 1;
}

}  // namespace

Germ Germ::rational_function(Polynomial num, Polynomial den) {
  return Germ(reduce(std::move(num), std::move(den)));
}

Germ Germ::eventually_periodic(std::vector<Rational> preperiod, std::vector<Rational> period) {
  if (period.empty()) throw Error(ErrorKind::InvalidInput, "eventually periodic germ needs a nonempty period");
  return Germ(minimize(std::move(preperiod), std::move(period)));
}

Rational Germ::term(std::size_t n) const {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "sequence indices start at 1");
  if (is_rational_function()) {
    const auto& f = rational_function();
    Rational x(static_cast<unsigned long>(n));
    Rational d = f.den.evaluate(x);
    if (sgn(d) == 0) throw Error(ErrorKind::ZeroDenominator, to_string() + " has a pole at n = " + std::to_string(n));
    return f.num.evaluate(x) / d;
  }
  const auto& e = eventually_periodic();
  std::size_t i = n - 1;
  if (i < e.preperiod.size()) return e.preperiod[i];
  return e.period[(i - e.preperiod.size()) % e.period.size()];
}

std::size_t Germ::definition_bound() const {
  if (is_rational_function()) return ceil_bound(rational_function().den);
  return eventually_periodic().preperiod.size() + 1;
}

std::string Germ::to_string() const {
  if (is_rational_function()) {
    const auto& f = rational_function();
    if (f.den == Polynomial{1}) return "rf(" + f.num.to_string("n") + ")";
    return "rf((" + f.num.to_string("n") + ")/(" + f.den.to_string("n") + "))";
  }
  const auto& e = eventually_periodic();
  auto list = [](const std::vector<Rational>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
    return s + "]";
  };
  return "ep(" + list(e.preperiod) + ";" + list(e.period) + ")";
}

Germ embed_constant(const Rational& c) { return Germ::eventually_periodic({}, {c}); }

Germ add(const Germ& a0, const Germ& b0) {
  auto [a, b] = same_class(a0, b0);
  if (a.is_rational_function()) {
    const auto& f = a.rational_function();
    const auto& g = b.rational_function();
    return Germ::rational_function(f.num * g.den + g.num * f.den, f.den * g.den);
  }
  return pointwise(a.eventually_periodic(), b.eventually_periodic(),
                   [](const Rational& x, const Rational& y) -> Rational { return x + y; });
}

Germ neg(const Germ& a) {
  if (a.is_rational_function()) return Germ::rational_function(-a.rational_function().num, a.rational_function().den);
  auto e = a.eventually_periodic();
  for (auto& x : e.preperiod) x = -x;
  for (auto& x : e.period) x = -x;
  return Germ::eventually_periodic(std::move(e.preperiod), std::move(e.period));
}

Germ sub(const Germ& a, const Germ& b) { return add(a, neg(b)); }

Germ mul(const Germ& a0, const Germ& b0) {
  auto [a, b] = same_class(a0, b0);
  if (a.is_rational_function()) {
    const auto& f = a.rational_function();
    const auto& g = b.rational_function();
    return Germ::rational_function(f.num * g.num, f.den * g.den);
  }
  return pointwise(a.eventually_periodic(), b.eventually_periodic(),
                   [](const Rational& x, const Rational& y) -> Rational { return x * y; });
}

Germ inv(const Germ& a) {
  if (a.is_rational_function()) {
    const auto& f = a.rational_function();
    if (f.num.is_zero()) throw Error(ErrorKind::AlmostEverywhereZeroDivisor, a.to_string() + " is zero a.e.");
    return Germ::rational_function(f.den, f.num);
  }
  const auto& e = a.eventually_periodic();
  std::size_t zeros = std::count_if(e.period.begin(), e.period.end(), [](const Rational& x) { return sgn(x) == 0; });
  if (zeros == e.period.size())
    throw Error(ErrorKind::AlmostEverywhereZeroDivisor, a.to_string() + " is zero a.e.");
  if (zeros > 0)
    throw Error(ErrorKind::UltrafilterDependentZeroDivisor,
                a.to_string() + " vanishes on a periodic index set that is neither finite nor cofinite");
  // Finitely many zero terms may be redefined freely; they become 0.
  auto invert = [](const Rational& x) -> Rational { return sgn(x) == 0 ? Rational(0) : Rational(1 / x); };
  std::vector<Rational> pre, per;
  for (const auto& x : e.preperiod) pre.push_back(invert(x));
  for (const auto& x : e.period) per.push_back(invert(x));
  return Germ::eventually_periodic(std::move(pre), std::move(per));
}

std::string_view to_string(AeVerdict v) {
  switch (v) {
    case AeVerdict::TrueAE: return "true-ae";
    case AeVerdict::FalseAE: return "false-ae";
    case AeVerdict::UltrafilterDependent: return "ultrafilter-dependent";
  }
  return "?";
}

AeVerdict negate(AeVerdict v) {
  if (v == AeVerdict::TrueAE) return AeVerdict::FalseAE;
  if (v == AeVerdict::FalseAE) return AeVerdict::TrueAE;
  return v;
}

AeVerdict ae_equal(const Germ& a0, const Germ& b0) {
  auto [a, b] = same_class(a0, b0);
  if (a.is_rational_function()) return a == b ? AeVerdict::TrueAE : AeVerdict::FalseAE;
  return from_pattern(tail_pattern(a.eventually_periodic(), b.eventually_periodic(),
                                   [](const Rational& x, const Rational& y) { return x == y; }));
}

AeVerdict ae_less(const Germ& a0, const Germ& b0) {
  auto [a, b] = same_class(a0, b0);
  if (a.is_rational_function())
    return sign_at_infinity(sub(b, a).rational_function()) > 0 ? AeVerdict::TrueAE : AeVerdict::FalseAE;
  return from_pattern(tail_pattern(a.eventually_periodic(), b.eventually_periodic(),
                                   [](const Rational& x, const Rational& y) { return x < y; }));
}

GermClassification classify_germ(const Germ& a) {
  using hyper::Classification;
  using hyper::Kind;
  GermClassification out;
  if (a.is_rational_function()) {
    const auto& f = a.rational_function();
    if (f.num.is_zero()) {
      out.definite = Classification{Kind::Zero, std::nullopt};
      out.standard_part = Rational(0);
      return out;
    }
    Rational ord(static_cast<long>(f.den.degree()) - static_cast<long>(f.num.degree()));
    Kind kind = sgn(ord) > 0 ? Kind::Infinitesimal : sgn(ord) == 0 ? Kind::Appreciable : Kind::Infinite;
    out.definite = Classification{kind, ord};
    if (kind == Kind::Infinitesimal) out.standard_part = Rational(0);
    if (kind == Kind::Appreciable) out.standard_part = Rational(f.num.leading() / f.den.leading());
    return out;
  }
  const auto& e = a.eventually_periodic();
  for (const auto& c : e.period) {
    if (sgn(c) == 0)
      out.per_residue.push_back({Kind::Zero, std::nullopt});
    else
      out.per_residue.push_back({Kind::Appreciable, Rational(0)});
  }
  if (e.period.size() == 1) {
    out.definite = out.per_residue.front();
    out.standard_part = e.period.front();
  }
  return out;
}

hyper::Hyperreal to_hyperreal(const Germ& a) {
  if (!a.is_rational_function())
    throw Error(ErrorKind::MixedClasses, a.to_string() + " is not a rational-function germ");
  const auto& f = a.rational_function();
  if (f.num.is_zero()) return hyper::Hyperreal();
  // p(1/e) / q(1/e) = e^(deg q - deg p) * rev(p)(e) / rev(q)(e).
  std::size_t dp = f.num.degree();
  std::size_t dq = f.den.degree();
  Polynomial num = f.num.reversed().shifted(dq > dp ? dq - dp : 0);
  Polynomial den = f.den.reversed().shifted(dp > dq ? dp - dq : 0);
  return hyper::Hyperreal::normalize(std::move(num), std::move(den), 1);
}

namespace {

struct RfField {
  using Value = Germ;
  static Value constant(const Rational& q) { return Germ::rational_function(Polynomial(q), Polynomial{1}); }
  static Value variable() { return Germ::rational_function(Polynomial::variable(), Polynomial{1}); }
  static Value add(const Value& a, const Value& b) { return germs::add(a, b); }
  static Value sub(const Value& a, const Value& b) { return germs::sub(a, b); }
  static Value mul(const Value& a, const Value& b) { return germs::mul(a, b); }
  static Value quotient(const Value& a, const Value& b) {
    if (b.rational_function().num.is_zero())
      throw Error(ErrorKind::ZeroDenominator, a.to_string() + " divided by zero");
    return germs::mul(a, germs::inv(b));
  }
  static Value negate(const Value& a) { return germs::neg(a); }
  static std::optional<Rational> as_rational(const Value& a) {
    const auto& f = a.rational_function();
    if (!f.num.is_constant() || !f.den.is_constant()) return std::nullopt;
    return f.num.coeff(0) / f.den.coeff(0);
  }
  static Value power(const Value& base, const Rational& exponent) {
    if (exponent.get_den() != 1 || !exponent.get_num().fits_slong_p())
      throw Error(ErrorKind::SyntaxError, "rational-function germs take integer exponents only");
    long e = exponent.get_num().get_si();
    const auto& f = base.rational_function();
    auto k = static_cast<unsigned long>(e < 0 ? -e : e);
    Germ raised = Germ::rational_function(f.num.pow(k), f.den.pow(k));
    return e < 0 ? germs::inv(raised) : raised;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Rational> parse_list(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::SyntaxError, "expected a bracketed list in '" + std::string(whole) + "'");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<Rational> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = s.find(',', start);
    auto item = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const Error&) {
      throw Error(ErrorKind::SyntaxError, "bad rational '" + std::string(trim(item)) + "' in '" + std::string(whole) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Germ parse_germ(std::string_view text) {
  std::string_view s = trim(text);
  auto body_of = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (s.substr(0, prefix.size()) != prefix || s.back() != ')') return std::nullopt;
    return s.substr(prefix.size(), s.size() - prefix.size() - 1);
  };
  if (auto body = body_of("rf(")) return detail::ExprParser<RfField>(*body, {"n"}).parse();
  if (auto body = body_of("ep(")) {
    auto semi = body->find(';');
    if (semi == std::string_view::npos)
      throw Error(ErrorKind::SyntaxError, "expected 'ep([preperiod];[period])', got '" + std::string(text) + "'");
    auto pre = parse_list(body->substr(0, semi), text);
    auto per = parse_list(body->substr(semi + 1), text);
    if (per.empty()) throw Error(ErrorKind::SyntaxError, "empty period in '" + std::string(text) + "'");
    return Germ::eventually_periodic(std::move(pre), std::move(per));
  }
  throw Error(ErrorKind::SyntaxError, "expected 'rf(...)' or 'ep(...)', got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Quantifier-free formulas.

namespace {

class QfParser {
 public:
  explicit QfParser(std::string_view text) : text_(text) {}

  QfFormula parse() {
    QfFormula f = iff();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(std::string_view expected) const {
    throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + " in '" + std::string(text_) +
                                            "': expected " + std::string(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    std::size_t end = pos_ + tok.size();
    if (std::isalpha(static_cast<unsigned char>(tok.back())) && end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  QfFormula binary(QfFormula::Kind kind, QfFormula lhs, QfFormula rhs) {
    QfFormula f;
    f.kind = kind;
    f.parts.push_back(std::move(lhs));
    f.parts.push_back(std::move(rhs));
    return f;
  }

  QfFormula iff() {
    QfFormula lhs = implies();
    while (accept("<=>") || accept("⇔")) lhs = binary(QfFormula::Kind::Iff, std::move(lhs), implies());
    return lhs;
  }

  QfFormula implies() {
    QfFormula lhs = disjunction();
    if (accept("=>") || accept("⇒")) return binary(QfFormula::Kind::Implies, std::move(lhs), implies());
    return lhs;
  }

  QfFormula disjunction() {
    QfFormula lhs = conjunction();
    while (accept("or") || accept("∨")) lhs = binary(QfFormula::Kind::Or, std::move(lhs), conjunction());
    return lhs;
  }

  QfFormula conjunction() {
    QfFormula lhs = unary();
    while (accept("and") || accept("∧")) lhs = binary(QfFormula::Kind::And, std::move(lhs), unary());
    return lhs;
  }

  QfFormula unary() {
    check_quantifier();
    if (accept("not") || accept("¬")) {
      QfFormula f;
      f.kind = QfFormula::Kind::Not;
      f.parts.push_back(unary());
      return f;
    }
    std::size_t save = pos_;
    try {
      return atom();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SyntaxError) throw;
      pos_ = save;
      if (!accept("(")) throw;
      QfFormula f = iff();
      if (!accept(")")) fail("')'");
      return f;
    }
  }

  void check_quantifier() {
    skip_ws();
    for (std::string_view q : {"forall", "exists", "∀", "∃"}) {
      std::size_t at = pos_;
      if (accept("(")) {
        bool hit = accept(q);
        pos_ = at;
        if (hit) throw Error(ErrorKind::QuantifierPresent, "quantifier at position " + std::to_string(at));
      }
      if (accept(q)) throw Error(ErrorKind::QuantifierPresent, "quantifier at position " + std::to_string(at));
    }
  }

  QfFormula atom() {
    QfTerm lhs = expr();
    QfFormula f;
    if (accept("=")) {
      f.kind = QfFormula::Kind::Equal;
      f.terms = {std::move(lhs), expr()};
    } else if (accept("<")) {
      f.kind = QfFormula::Kind::Less;
      f.terms = {std::move(lhs), expr()};
    } else if (accept(">")) {
      f.kind = QfFormula::Kind::Less;
      QfTerm rhs = expr();
      f.terms = {std::move(rhs), std::move(lhs)};
    } else {
      fail("'=', '<' or '>'");
    }
    return f;
  }

  static QfTerm node(QfTerm::Kind kind, QfTerm a, QfTerm b) {
    QfTerm t;
    t.kind = kind;
    t.args.push_back(std::move(a));
    t.args.push_back(std::move(b));
    return t;
  }

  QfTerm expr() {
    QfTerm acc = product();
    for (;;) {
      // "<=>" and "=>" must not be taken for arithmetic.
      skip_ws();
      if (accept("+"))
        acc = node(QfTerm::Kind::Add, std::move(acc), product());
      else if (accept("-"))
        acc = node(QfTerm::Kind::Sub, std::move(acc), product());
      else
        return acc;
    }
  }

  QfTerm product() {
    QfTerm acc = factor();
    while (accept("*") || accept("·")) acc = node(QfTerm::Kind::Mul, std::move(acc), factor());
    return acc;
  }

  QfTerm factor() {
    if (accept("-")) {
      QfTerm t;
      t.kind = QfTerm::Kind::Neg;
      t.args.push_back(factor());
      return t;
    }
    if (accept("(")) {
      QfTerm t = expr();
      if (!accept(")")) fail("')'");
      return t;
    }
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                     text_[pos_] == '.'))
        ++pos_;
      QfTerm t;
      t.kind = QfTerm::Kind::Constant;
      t.value = parse_rational(text_.substr(start, pos_ - start));
      return t;
    }
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("a term");
    std::string name(text_.substr(start, pos_ - start));
    if (name == "and" || name == "or" || name == "not") {
      pos_ = start;
      fail("a term");
    }
    QfTerm t;
    t.kind = QfTerm::Kind::Variable;
    t.name = std::move(name);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_variables(const QfTerm& t, std::set<std::string>& out) {
  if (t.kind == QfTerm::Kind::Variable) out.insert(t.name);
  for (const auto& a : t.args) collect_variables(a, out);
}

void collect_variables(const QfFormula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms) collect_variables(t, out);
  for (const auto& p : f.parts) collect_variables(p, out);
}

// Determines the common class of the referenced germs; rational functions
// when nothing is referenced.
bool uses_rational_functions(const QfFormula& f, const Assignment& assignment) {
  std::set<std::string> names;
  collect_variables(f, names);
  bool rf = false, periodic = false;
  for (const auto& n : names) {
    auto it = assignment.find(n);
    if (it == assignment.end()) throw Error(ErrorKind::UnboundConstant, "variable '" + n + "' has no germ assigned");
    const Germ& g = it->second;
    if (g.is_rational_function())
      rf = true;
    else if (g.eventually_periodic().period.size() > 1)
      periodic = true;
  }
  if (rf && periodic) throw Error(ErrorKind::MixedClasses, "formula mixes rational-function and periodic germs");
  return !periodic;
}

Germ eval_term(const QfTerm& t, const Assignment& assignment, bool rf) {
  switch (t.kind) {
    case QfTerm::Kind::Variable: return assignment.find(t.name)->second;
    case QfTerm::Kind::Constant:
      return rf ? Germ::rational_function(Polynomial(t.value), Polynomial{1}) : embed_constant(t.value);
    case QfTerm::Kind::Add: return add(eval_term(t.args[0], assignment, rf), eval_term(t.args[1], assignment, rf));
    case QfTerm::Kind::Sub: return sub(eval_term(t.args[0], assignment, rf), eval_term(t.args[1], assignment, rf));
    case QfTerm::Kind::Mul: return mul(eval_term(t.args[0], assignment, rf), eval_term(t.args[1], assignment, rf));
    case QfTerm::Kind::Neg: return neg(eval_term(t.args[0], assignment, rf));
  }
  return embed_constant(0);
}

// Truth pattern over one period of the eventual tail (length 1 when constant).
std::vector<bool> combine(const std::vector<bool>& a, const std::vector<bool>& b, auto op) {
  std::size_t len = std::lcm(a.size(), b.size());
  std::vector<bool> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = op(a[i % a.size()], b[i % b.size()]);
  return out;
}

std::vector<bool> verdict_pattern(AeVerdict v) { return {v == AeVerdict::TrueAE}; }

std::vector<bool> eval_symbolic(const QfFormula& f, const Assignment& assignment, bool rf) {
  using K = QfFormula::Kind;
  switch (f.kind) {
    case K::Equal:
    case K::Less: {
      Germ a = eval_term(f.terms[0], assignment, rf);
      Germ b = eval_term(f.terms[1], assignment, rf);
      if (rf) return verdict_pattern(f.kind == K::Equal ? ae_equal(a, b) : ae_less(a, b));
      if (f.kind == K::Equal)
        return tail_pattern(a.eventually_periodic(), b.eventually_periodic(),
                            [](const Rational& x, const Rational& y) { return x == y; });
      return tail_pattern(a.eventually_periodic(), b.eventually_periodic(),
                          [](const Rational& x, const Rational& y) { return x < y; });
    }
    case K::Not: {
      auto p = eval_symbolic(f.parts[0], assignment, rf);
      p.flip();
      return p;
    }
    case K::And:
      return combine(eval_symbolic(f.parts[0], assignment, rf), eval_symbolic(f.parts[1], assignment, rf),
                     [](bool x, bool y) { return x && y; });
    case K::Or:
      return combine(eval_symbolic(f.parts[0], assignment, rf), eval_symbolic(f.parts[1], assignment, rf),
                     [](bool x, bool y) { return x || y; });
    case K::Implies:
      return combine(eval_symbolic(f.parts[0], assignment, rf), eval_symbolic(f.parts[1], assignment, rf),
                     [](bool x, bool y) { return !x || y; });
    case K::Iff:
      return combine(eval_symbolic(f.parts[0], assignment, rf), eval_symbolic(f.parts[1], assignment, rf),
                     [](bool x, bool y) { return x == y; });
  }
  return {false};
}

Rational eval_term_at(const QfTerm& t, const Assignment& assignment, std::size_t n) {
  switch (t.kind) {
    case QfTerm::Kind::Variable: return assignment.find(t.name)->second.term(n);
    case QfTerm::Kind::Constant: return t.value;
    case QfTerm::Kind::Add: return eval_term_at(t.args[0], assignment, n) + eval_term_at(t.args[1], assignment, n);
    case QfTerm::Kind::Sub: return eval_term_at(t.args[0], assignment, n) - eval_term_at(t.args[1], assignment, n);
    case QfTerm::Kind::Mul: return eval_term_at(t.args[0], assignment, n) * eval_term_at(t.args[1], assignment, n);
    case QfTerm::Kind::Neg: return -eval_term_at(t.args[0], assignment, n);
  }
  return Rational(0);
}

bool eval_at(const QfFormula& f, const Assignment& assignment, std::size_t n) {
  using K = QfFormula::Kind;
  switch (f.kind) {
    case K::Equal: return eval_term_at(f.terms[0], assignment, n) == eval_term_at(f.terms[1], assignment, n);
    case K::Less: return eval_term_at(f.terms[0], assignment, n) < eval_term_at(f.terms[1], assignment, n);
    case K::Not: return !eval_at(f.parts[0], assignment, n);
    case K::And: return eval_at(f.parts[0], assignment, n) && eval_at(f.parts[1], assignment, n);
    case K::Or: return eval_at(f.parts[0], assignment, n) || eval_at(f.parts[1], assignment, n);
    case K::Implies: return !eval_at(f.parts[0], assignment, n) || eval_at(f.parts[1], assignment, n);
    case K::Iff: return eval_at(f.parts[0], assignment, n) == eval_at(f.parts[1], assignment, n);
  }
  return false;
}

void atom_bounds(const QfFormula& f, const Assignment& assignment, std::size_t& bound) {
  if (f.kind == QfFormula::Kind::Equal || f.kind == QfFormula::Kind::Less) {
    Germ diff = sub(eval_term(f.terms[0], assignment, true), eval_term(f.terms[1], assignment, true));
    if (diff.is_rational_function())
      bound = std::max({bound, ceil_bound(diff.rational_function().num), ceil_bound(diff.rational_function().den)});
  }
  for (const auto& p : f.parts) atom_bounds(p, assignment, bound);
}

std::size_t common_period(const QfFormula& f, const Assignment& assignment) {
  std::set<std::string> names;
  collect_variables(f, names);
  std::size_t period = 1;
  for (const auto& n : names) {
    const Germ& g = assignment.find(n)->second;
    if (g.is_eventually_periodic()) period = std::lcm(period, g.eventually_periodic().period.size());
  }
  return period;
}

}  // namespace

QfFormula parse_qf(std::string_view text) { return QfParser(text).parse(); }

AeVerdict los_check_qf(const QfFormula& formula, const Assignment& assignment) {
  bool rf = uses_rational_functions(formula, assignment);
  return from_pattern(eval_symbolic(formula, assignment, rf));
}

std::size_t stabilization_bound(const QfFormula& formula, const Assignment& assignment) {
  bool rf = uses_rational_functions(formula, assignment);
  std::set<std::string> names;
  collect_variables(formula, names);
  std::size_t bound = 1;
  for (const auto& n : names) bound = std::max(bound, assignment.find(n)->second.definition_bound());
  if (rf) atom_bounds(formula, assignment, bound);
  return bound;
}

AeVerdict los_check_pointwise(const QfFormula& formula, const Assignment& assignment) {
  std::size_t start = stabilization_bound(formula, assignment);
  std::size_t span = std::max<std::size_t>(common_period(formula, assignment), 3);
  std::vector<bool> holds(span);
  for (std::size_t i = 0; i < span; ++i) holds[i] = eval_at(formula, assignment, start + i);
  return from_pattern(holds);
}

}  // namespace nsa::germs
