#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsa/error.hpp"
#include "nsa/hyperreal.hpp"
#include "random_values.hpp"

#include <random>

using namespace nsa;
using namespace nsa::hyper;

namespace {

const Hyperreal kEps = Hyperreal::epsilon();

Hyperreal poly_e(std::vector<Rational> cs) { return Hyperreal::normalize(Polynomial(std::move(cs)), Polynomial{1}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an nsa::Error");
  return ErrorKind::InvalidInput;
}

// Independent convolution of integer coefficient lists.
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("normalize cancels common factors and minimizes ramification") {
  Hyperreal a = Hyperreal::normalize(Polynomial{0, 0, 2}, Polynomial{0, 2}, 1);
  CHECK(a == kEps);

  Hyperreal b = Hyperreal::normalize(Polynomial{1, 1}, Polynomial{1}, 1);
  CHECK(b.numerator() == Polynomial{1, 1});
  CHECK(b.denominator() == Polynomial{1});

  // t = eps^(1/2), t^2 = eps.
  Hyperreal c = Hyperreal::normalize(Polynomial{0, 0, 1}, Polynomial{1}, 2);
  CHECK(c.ramification() == 1);
  CHECK(c == kEps);
  Hyperreal root = Hyperreal::normalize(Polynomial{0, 1}, Polynomial{1}, 2);
  CHECK(root * root == c);

  CHECK(kind_of([] { Hyperreal::normalize(Polynomial{1}, Polynomial{}, 1); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("canonical denominator has unit lowest coefficient") {
  Hyperreal a = Hyperreal::normalize(Polynomial{2, 1}, Polynomial{0, 4, 2}, 1);
  CHECK(a.denominator().lowest() == 1);
  CHECK(gcd(a.numerator(), a.denominator()).is_constant());
}

TEST_CASE("field operations") {
  CHECK(Hyperreal(1) + kEps == poly_e({1, 1}));

  // (2+e)(3-e) against an independent integer convolution.
  auto expected = convolve({2, 1}, {3, -1});
  CHECK(expected == std::vector<long>{6, 1, -1});
  Hyperreal product = mul(poly_e({2, 1}), poly_e({3, -1}));
  CHECK(product == poly_e({6, 1, -1}));
  CHECK(product.to_string() == "6+e-e^2");

  Hyperreal inverse = inv(kEps);
  CHECK(inverse.numerator() == Polynomial{1});
  CHECK(inverse.denominator() == Polynomial{0, 1});
  CHECK(kind_of([] { inv(Hyperreal()); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("mixed ramifications are rebased") {
  Hyperreal half = parse("e^(1/2)");
  Hyperreal third = parse("e^(1/3)");
  Hyperreal s = half * third;
  CHECK(s.ramification() == 6);
  CHECK(pow(s, 6) == pow(kEps, 5));
  CHECK((half + kEps) - half == kEps);
}

TEST_CASE("sign and order") {
  CHECK(sign(kEps) == 1);
  CHECK(sign(-kEps) == -1);
  CHECK(sign(Hyperreal()) == 0);
  CHECK(compare(kEps, Hyperreal(Rational(1, 1000000))) == std::strong_ordering::less);
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 100);
  CHECK(compare(inv(kEps), Hyperreal(Rational(big))) == std::strong_ordering::greater);
}

TEST_CASE("non-Archimedean witness") {
  for (long n = 1; n <= 1000000; n = n < 1000 ? n + 1 : n * 10) {
    CHECK(Hyperreal() < kEps);
    CHECK(kEps < Hyperreal(Rational(1, n)));
  }
  CHECK(kEps < Hyperreal(Rational(1, 1000000)));
}

TEST_CASE("classify") {
  CHECK(classify(kEps).kind == Kind::Infinitesimal);
  CHECK(*classify(kEps).ord == 1);
  Classification c = classify(parse("(2+e)/(1+3*e)"));
  CHECK(c.kind == Kind::Appreciable);
  CHECK(*c.ord == 0);
  CHECK(classify(inv(kEps)).kind == Kind::Infinite);
  CHECK(classify(Hyperreal()).kind == Kind::Zero);
  CHECK(*classify(parse("e^(3/2)")).ord == Rational(3, 2));
}

TEST_CASE("standard part matches an exact evaluation limit") {
  // Independent oracle: evaluate (2+x)/(1+3x) at x = 10^-k exactly and watch
  // the distance to the candidate limit shrink like 10^-k.
  auto f = [](const Rational& x) -> Rational { return (2 + x) / (1 + 3 * x); };
  for (unsigned k = 5; k <= 40; k += 5) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    Rational x(1, p);
    Rational dist = abs(f(x) - 2);
    CHECK(dist < 10 * x);
  }
  StandardPart s = st(parse("(2+e)/(1+3*e)"));
  CHECK(s.kind == StandardPart::Kind::Real);
  CHECK(s.value == 2);

  CHECK(st(parse("e^2-5")).value == -5);
  CHECK(st(inv(kEps)).kind == StandardPart::Kind::PlusInfinity);
  CHECK(st(-inv(kEps)).kind == StandardPart::Kind::MinusInfinity);
  CHECK(st(kEps).value == 0);
}

TEST_CASE("decompose") {
  Decomposition d = decompose(parse("3+e-e^2"));
  CHECK(d.real_part == 3);
  CHECK(d.infinitesimal_part == parse("e-e^2"));
  Decomposition z = decompose(kEps);
  CHECK(z.real_part == 0);
  CHECK(z.infinitesimal_part == kEps);
  CHECK(kind_of([] { decompose(inv(Hyperreal::epsilon())); }) == ErrorKind::NotFinite);
}

TEST_CASE("infinitesimal closeness") {
  CHECK(infinitesimally_close(Hyperreal(1) + kEps, Hyperreal(1)));
  CHECK_FALSE(infinitesimally_close(Hyperreal(1), Hyperreal(2)));
  // The difference is exactly 7, which is appreciable.
  CHECK(classify(Hyperreal(7)).kind == Kind::Appreciable);
  CHECK_FALSE(infinitesimally_close(inv(kEps), inv(kEps) + Hyperreal(7)));
}

TEST_CASE("nth_root") {
  Hyperreal r = nth_root(parse("4*e^2"), 2);
  CHECK(r == parse("2*e"));
  CHECK(r * r == parse("4*e^2"));

  Hyperreal s = nth_root(kEps, 2);
  CHECK(s.ramification() == 2);
  CHECK(s * s == kEps);

  CHECK(kind_of([] { nth_root(parse("1+e"), 2); }) == ErrorKind::NotRepresentable);
  CHECK(kind_of([] { nth_root(parse("-e"), 2); }) == ErrorKind::NegativeEvenRoot);
  CHECK(kind_of([] { nth_root(Hyperreal(2), 2); }) == ErrorKind::NotRepresentable);
  CHECK(nth_root(parse("-8/e^3"), 3) == parse("-2/e"));
  CHECK(nth_root(parse("(1+2*e+e^2)/(9*e^4)"), 2) == parse("(1+e)/(3*e^2)"));
}

TEST_CASE("no square root of 1+e exists among low-degree ramified fractions") {
  // Oracle: exhaustive search for integer polynomials p, q of degree <= 2 in
  // t = e^(1/m) with p^2 == (1 + t^m) q^2; parity of degrees forbids it.
  const std::vector<long> pool = {-2, -1, 0, 1, 2};
  int found = 0;
  for (int m = 1; m <= 2; ++m) {
    std::vector<long> one_plus(m + 1, 0);
    one_plus[0] = 1;
    one_plus[m] = 1;
    std::vector<std::vector<long>> polys;
    for (long a : pool)
      for (long b : pool)
        for (long c : pool) polys.push_back({a, b, c});
    for (const auto& p : polys) {
      auto p2 = convolve(p, p);
      for (const auto& q : polys) {
        if (q == std::vector<long>{0, 0, 0}) continue;
        if (p2 == convolve(one_plus, convolve(q, q))) ++found;
      }
    }
  }
  CHECK(found == 0);
}

TEST_CASE("standard interval membership") {
  CHECK(in_star_interval(kEps, 0, 1, IntervalKind::Closed));
  CHECK_FALSE(in_star_interval(Hyperreal(1) + kEps, 0, 1, IntervalKind::Closed));
  CHECK_FALSE(in_star_interval(Hyperreal(0), 0, 1, IntervalKind::Open));
  CHECK(in_star_interval(Hyperreal(1) - kEps, 0, 1, IntervalKind::Open));
  CHECK(in_star_interval(Hyperreal(0), 0, 1, IntervalKind::RightOpen));
  CHECK_FALSE(in_star_interval(Hyperreal(1), 0, 1, IntervalKind::RightOpen));
  CHECK(kind_of([] { in_star_interval(Hyperreal(), 2, 1, IntervalKind::Closed); }) == ErrorKind::EmptyInterval);
}

TEST_CASE("textual syntax") {
  CHECK(parse("(2+e)/(1+3*e)").to_string() == "(2+e)/(1+3*e)");
  CHECK(parse("1/e").to_string() == "(1)/(e)");
  CHECK(parse("e^(1/2)").to_string() == "e^(1/2)");
  CHECK(parse("ε^2") == parse("e*e"));
  CHECK(parse("-1/2*e") == Hyperreal(Rational(-1, 2)) * kEps);
  CHECK(kind_of([] { parse("(1)/(0)"); }) == ErrorKind::ZeroDenominator);
  CHECK(kind_of([] { parse("2 + "); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("e^e"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Hyperreal a = testing::random_hyperreal(rng);
    CHECK(parse(a.to_string()) == a);
  }
}

TEST_CASE("order is compatible with the field operations") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Hyperreal a = testing::random_hyperreal(rng);
    Hyperreal b = testing::random_hyperreal(rng);
    Hyperreal c = testing::random_hyperreal(rng);
    if (a < b) CHECK(a + c < b + c);
    if (Hyperreal() < a && Hyperreal() < b) CHECK(Hyperreal() < a * b);
  }
}

TEST_CASE("infinitesimals form an ideal of the finite elements") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Hyperreal h = kEps * testing::random_hyperreal(rng, true);
    Hyperreal g = kEps * testing::random_hyperreal(rng, true);
    Hyperreal f = testing::random_hyperreal(rng, true);
    CHECK(classify(h + g).kind != Kind::Appreciable);
    CHECK(classify(h * f).kind != Kind::Appreciable);
    CHECK(classify(h * f).kind != Kind::Infinite);
    if (!h.is_zero()) {
      CHECK(classify(inv(h)).kind == Kind::Infinite);
      CHECK(classify(inv(inv(h))).kind == Kind::Infinitesimal);
    }
  }
}
