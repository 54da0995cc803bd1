#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf_corpus.hpp"
#include "nsa/bqf.hpp"
#include "nsa/error.hpp"
#include "random_bqf.hpp"

#include <random>

using namespace nsa;
using namespace nsa::bqf;
using namespace nsa::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an nsa::Error");
  return ErrorKind::InvalidInput;
}

Entity at(const char* n) { return Entity::atom(n); }
Entity E(std::string_view s) { return parse_entity(s); }

}  // namespace

TEST_CASE("entities") {
  CHECK(at("a").type_level() == 0);
  CHECK(Entity().type_level() == 1);
  CHECK(E("{a, {b}}").type_level() == 2);
  CHECK(E("{b, a, b}") == E("{a, b}"));
  CHECK(E("{b, a, b}").members().size() == 2);
  CHECK(E("{{}, a}").to_string() == "{a, {}}");
  CHECK(make_pair(at("a"), at("b")) == E("{{a}, {a, b}}"));
  CHECK(make_pair(at("a"), at("a")) == E("{{a}}"));
  CHECK(set_union(E("{a}"), E("{b}")) == E("{a, b}"));
  CHECK(set_intersection(E("{a, b}"), E("{b, c}")) == E("{b}"));
  CHECK(set_difference(E("{a, b}"), E("{b, c}")) == E("{a}"));
  CHECK(cartesian_product(E("{a}"), E("{a, b}")) == E("{<a, a>, <a, b>}"));
  CHECK(kind_of([] { set_union(at("a"), E("{}")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("extensionality on random nested sets") {
  std::mt19937_64 rng(3);
  auto subset = [](const Entity& x, const Entity& y) {
    for (const auto& m : x.members())
      if (!y.contains(m)) return false;
    return true;
  };
  for (int i = 0; i < 3000; ++i) {
    Entity x = random_entity(rng, 2), y = random_entity(rng, 2);
    CHECK((x == y) == (subset(x, y) && subset(y, x)));
    CHECK(x.type_level() <= 2);
  }
}

TEST_CASE("parse examples and errors") {
  Formula f = parse("(forall x in A)(x in B)");
  CHECK(f.kind == Formula::Kind::ForAll);
  CHECK(f.variable == "x");
  CHECK(f.parts[0].kind == Formula::Kind::Member);
  CHECK(parse("(exists y in B) y = a").kind == Formula::Kind::Exists);
  CHECK(kind_of([] { parse("(forall x)(x = x)"); }) == ErrorKind::UnboundedQuantifier);
  CHECK(kind_of([] { parse("(∃ y) y = y"); }) == ErrorKind::UnboundedQuantifier);
  CHECK(kind_of([] { parse("a = "); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("a # b"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { parse("(a in A"); }) == ErrorKind::SyntaxError);
  try {
    parse("a in");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK(parse("a in A and b in A or c in A") == parse("((a in A and b in A) or c in A)"));
  CHECK(parse("a = a => b = b => c = c") == parse("(a = a => (b = b => c = c))"));
  CHECK(parse("not a = b and c = c") == parse("((not a = b) and c = c)"));
}

TEST_CASE("eval examples") {
  Formula f = parse("(forall x in A)(x in B)");
  CHECK(eval(f, {{"A", E("{a}")}, {"B", E("{a, b}")}}));
  CHECK_FALSE(eval(f, {{"A", E("{a, b}")}, {"B", E("{a}")}}));
  CHECK(kind_of([&] { eval(f, {{"A", E("{a}")}}); }) == ErrorKind::UnboundConstant);
  CHECK(kind_of([&] { eval(f, {{"A", at("a")}, {"B", E("{}")}}); }) == ErrorKind::QuantifierOverAtom);
  CHECK_FALSE(eval(parse("a in b"), {{"X", E("{a, b}")}}));
  // bound variables shadow bindings
  CHECK(eval(parse("(forall A in B) A in B"), {{"A", E("{}")}, {"B", E("{a}")}}));
}

TEST_CASE("Kuratowski pair law is exhaustive on small atom sets") {
  Formula law = parse("(<p, q> = <r, s>) <=> (p = r and q = s)");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto xs = atoms(n);
    std::size_t count = 0;
    for (const auto& p : xs)
      for (const auto& q : xs)
        for (const auto& r : xs)
          for (const auto& s : xs) {
            CHECK(eval(law, {{"p", p}, {"q", q}, {"r", r}, {"s", s}}));
            ++count;
          }
    CHECK(count == n * n * n * n);
  }
}

TEST_CASE("define_set") {
  CHECK(define_set(E("{a, b, c}"), parse("x = a ∨ x = b"), {}) == E("{a, b}"));
  CHECK(define_set(E("{a}"), parse("¬(x = x)"), {}) == E("{}"));
  auto v1 = power_set(atoms(3));
  Entity bound = Entity::set(v1);
  std::vector<Entity> expected;
  for (const auto& s : v1)
    if (s.contains(at("a"))) expected.push_back(s);
  CHECK(define_set(bound, parse("a in x"), {}) == Entity::set(expected));
  CHECK(define_set(E("{a, b}"), parse("y in A"), {{"A", E("{b}")}}, "y") == E("{b}"));
  CHECK(kind_of([] { define_set(E("{a}"), parse("x = y"), {}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { define_set(at("a"), parse("x = x"), {}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("define_set stays inside its bound") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    Entity bound = random_entity(rng, 2);
    if (bound.is_atom()) continue;
    Formula f = random_formula(rng, 2);
    Bindings b{{"A", random_entity(rng, 1)}};
    Entity out;
    try {
      out = define_set(bound, f, b, "x");
    } catch (const Error& e) {
      // random formulas may mention atoms outside the universe or quantify over atoms
      CHECK((e.kind() == ErrorKind::UnboundConstant || e.kind() == ErrorKind::QuantifierOverAtom));
      continue;
    }
    for (const auto& m : out.members()) CHECK(bound.contains(m));
  }
}

TEST_CASE("function graphs") {
  CHECK(is_function_graph(E("{<a, a>, <b, a>}"), E("{a, b}"), E("{a}")));
  CHECK_FALSE(is_function_graph(E("{<a, a>, <a, b>}"), E("{a}"), E("{a, b}")));
  CHECK_FALSE(is_function_graph(E("{<a, a>}"), E("{a, b}"), E("{a}")));
  CHECK_FALSE(is_function_graph(E("{<a, c>}"), E("{a}"), E("{a}")));
  CHECK_FALSE(is_function_graph(E("{a}"), E("{a}"), E("{a}")));
  // every relation between small sets against a direct count
  auto dom = atoms(2);
  std::vector<Entity> cod = {at("a"), at("b"), at("c")};
  std::vector<Entity> pairs;
  for (const auto& x : dom)
    for (const auto& y : cod) pairs.push_back(make_pair(x, y));
  std::size_t functions = 0;
  for (const auto& rel : power_set(pairs)) {
    bool direct = true;
    for (const auto& x : dom) {
      int images = 0;
      for (const auto& y : cod) images += rel.contains(make_pair(x, y));
      direct = direct && images == 1;
    }
    CHECK(is_function_graph(rel, Entity::set(dom), Entity::set(cod)) == direct);
    functions += direct;
  }
  CHECK(functions == 9);
}

TEST_CASE("corpus: evaluation, round trip and transfer") {
  auto corpus = testing::load_bqf_corpus();
  REQUIRE(corpus.size() == 50);
  Bindings b = testing::corpus_bindings();
  for (const auto& entry : corpus) {
    CAPTURE(entry.text);
    Formula f = parse(entry.text);
    CHECK(eval(f, b) == entry.expected);
    CHECK(parse(to_string(f)) == f);
    CHECK(to_string(parse(to_string(f))) == to_string(f));
    auto report = check_transfer_finite(f, b);
    CHECK(report.standard_value == report.star_value);
    CHECK(report.boolean_checks > 0);
    CHECK(report.product_checks > 0);
  }
}

TEST_CASE("round trip on random syntax trees") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng, 4);
    CAPTURE(to_string(f));
    CHECK(parse(to_string(f)) == f);
  }
}

TEST_CASE("star fixes finite entities") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    Entity a = random_entity(rng, 2), b = random_entity(rng, 2);
    CHECK(star(a) == a);
    CHECK(star(make_pair(a, b)) == make_pair(star(a), star(b)));
    if (a.is_set() && b.is_set()) CHECK(star(set_union(a, b)) == set_union(star(a), star(b)));
  }
  for (const auto& x : atoms(4))
    for (const auto& y : atoms(4)) CHECK(star(make_pair(x, y)) == make_pair(x, y));
}
