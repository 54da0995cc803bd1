#include "nsa/bqf.hpp"

#include "nsa/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nsa::bqf {

Entity Entity::atom(std::string name) {
  Entity e;
  e.is_atom_ = true;
  e.name_ = std::move(name);
  return e;
}

Entity Entity::set(std::vector<Entity> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Entity e;
  e.members_ = std::move(members);
  return e;
}

std::strong_ordering operator<=>(const Entity& a, const Entity& b) {
  if (a.is_atom_ != b.is_atom_) return a.is_atom_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_atom_) return a.name_.compare(b.name_) <=> 0;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                b.members_.end());
}

bool Entity::contains(const Entity& e) const {
  return is_set() && std::binary_search(members_.begin(), members_.end(), e);
}

std::size_t Entity::type_level() const {
  if (is_atom_) return 0;
  std::size_t level = 0;
  for (const auto& m : members_) level = std::max(level, m.type_level());
  return level + 1;
}

std::string Entity::to_string() const {
  if (is_atom_) return name_;
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? ", " : "") + members_[i].to_string();
  return s + "}";
}

Entity make_pair(const Entity& a, const Entity& b) {
  return Entity::set({Entity::set({a}), Entity::set({a, b})});
}

namespace {

const std::vector<Entity>& members_of(const Entity& e, std::string_view op) {
  if (e.is_atom()) throw Error(ErrorKind::InvalidInput, std::string(op) + " of the atom " + e.name());
  return e.members();
}

}  // namespace

Entity set_union(const Entity& a, const Entity& b) {
  std::vector<Entity> out = members_of(a, "union");
  const auto& bm = members_of(b, "union");
  out.insert(out.end(), bm.begin(), bm.end());
  return Entity::set(std::move(out));
}

Entity set_intersection(const Entity& a, const Entity& b) {
  std::vector<Entity> out;
  for (const auto& m : members_of(a, "intersection"))
    if (b.contains(m)) out.push_back(m);
  members_of(b, "intersection");
  return Entity::set(std::move(out));
}

Entity set_difference(const Entity& a, const Entity& b) {
  std::vector<Entity> out;
  members_of(b, "difference");
  for (const auto& m : members_of(a, "difference"))
    if (!b.contains(m)) out.push_back(m);
  return Entity::set(std::move(out));
}

Entity cartesian_product(const Entity& a, const Entity& b) {
  std::vector<Entity> out;
  for (const auto& x : members_of(a, "product"))
    for (const auto& y : members_of(b, "product")) out.push_back(make_pair(x, y));
  return Entity::set(std::move(out));
}

void collect_atoms(const Entity& e, std::vector<std::string>& out) {
  if (e.is_atom()) {
    out.push_back(e.name());
    return;
  }
  for (const auto& m : e.members()) collect_atoms(m, out);
}

// ---------------------------------------------------------------------------
// Lexer and parser.

namespace {

enum class Tok { LParen, RParen, LBrace, RBrace, LAngle, RAngle, Comma, Eq, In, Not, And, Or, Implies, Iff, ForAll, Exists, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::Comma: return "','";
    case Tok::Eq: return "'='";
    case Tok::In: return "'in'";
    case Tok::Not: return "'not'";
    case Tok::And: return "'and'";
    case Tok::Or: return "'or'";
    case Tok::Implies: return "'=>'";
    case Tok::Iff: return "'<=>'";
    case Tok::ForAll: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  static const std::pair<std::string_view, Tok> symbols[] = {
      {"<=>", Tok::Iff}, {"=>", Tok::Implies}, {"(", Tok::LParen}, {")", Tok::RParen}, {"{", Tok::LBrace},
      {"}", Tok::RBrace}, {"<", Tok::LAngle},  {">", Tok::RAngle},  {",", Tok::Comma},  {"=", Tok::Eq},
      {"∀", Tok::ForAll}, {"∃", Tok::Exists},  {"∈", Tok::In},      {"¬", Tok::Not},    {"∧", Tok::And},
      {"∨", Tok::Or},     {"⇒", Tok::Implies}, {"⇔", Tok::Iff},     {"⟨", Tok::LAngle}, {"⟩", Tok::RAngle},
  };
  static const std::pair<std::string_view, Tok> keywords[] = {
      {"forall", Tok::ForAll}, {"exists", Tok::Exists}, {"in", Tok::In},
      {"not", Tok::Not},       {"and", Tok::And},       {"or", Tok::Or},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalnum(c) || c == '_') {
      std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = Tok::Ident;
      for (const auto& [kw, t] : keywords)
        if (word == kw) kind = t;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    bool matched = false;
    for (const auto& [sym, t] : symbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({t, std::string(sym), i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(i) + ": unexpected character '" +
                                              std::string(1, s[i]) + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Formula formula() {
    Formula f = iff();
    expect(Tok::End);
    return f;
  }

  Term whole_term() {
    Term t = term();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::string_view expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorKind::SyntaxError,
                "at position " + std::to_string(t.pos) + ": expected " + std::string(expected) + ", got " + got);
  }

  const Token& expect(Tok t) {
    if (peek().kind != t) fail(describe(t));
    return tokens_[pos_++];
  }

  static Formula node(Formula::Kind kind, Formula a, Formula b) {
    Formula f;
    f.kind = kind;
    f.parts.push_back(std::move(a));
    f.parts.push_back(std::move(b));
    return f;
  }

  Formula iff() {
    Formula lhs = implies();
    while (accept(Tok::Iff)) lhs = node(Formula::Kind::Iff, std::move(lhs), implies());
    return lhs;
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) return node(Formula::Kind::Implies, std::move(lhs), implies());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::Or)) lhs = node(Formula::Kind::Or, std::move(lhs), conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Tok::And)) lhs = node(Formula::Kind::And, std::move(lhs), unary());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::Not)) {
      Formula f;
      f.kind = Formula::Kind::Not;
      f.parts.push_back(unary());
      return f;
    }
    if (peek().kind == Tok::LParen && (peek(1).kind == Tok::ForAll || peek(1).kind == Tok::Exists)) {
      std::size_t at = peek().pos;
      pos_ += 1;
      Formula f;
      f.kind = accept(Tok::ForAll) ? Formula::Kind::ForAll : (expect(Tok::Exists), Formula::Kind::Exists);
      f.variable = expect(Tok::Ident).text;
      if (peek().kind == Tok::RParen)
        throw Error(ErrorKind::UnboundedQuantifier,
                    "quantifier over '" + f.variable + "' at position " + std::to_string(at) + " has no 'in' bound");
      expect(Tok::In);
      f.terms.push_back(term());
      expect(Tok::RParen);
      f.parts.push_back(unary());
      return f;
    }
    if (accept(Tok::LParen)) {
      Formula f = iff();
      expect(Tok::RParen);
      return f;
    }
    Term lhs = term();
    Formula f;
    if (accept(Tok::Eq))
      f.kind = Formula::Kind::Equal;
    else if (accept(Tok::In))
      f.kind = Formula::Kind::Member;
    else
      fail("'=' or 'in'");
    f.terms.push_back(std::move(lhs));
    f.terms.push_back(term());
    return f;
  }

  Term term() {
    Term t;
    if (peek().kind == Tok::Ident) {
      t.name = tokens_[pos_++].text;
      return t;
    }
    if (accept(Tok::LAngle)) {
      t.kind = Term::Kind::Pair;
      t.args.push_back(term());
      expect(Tok::Comma);
      t.args.push_back(term());
      expect(Tok::RAngle);
      return t;
    }
    if (accept(Tok::LBrace)) {
      t.kind = Term::Kind::SetLiteral;
      if (accept(Tok::RBrace)) return t;
      do t.args.push_back(term());
      while (accept(Tok::Comma));
      expect(Tok::RBrace);
      return t;
    }
    fail("a term (identifier, '<' or '{')");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Entity term_as_entity(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Name: return Entity::atom(t.name);
    case Term::Kind::Pair: return make_pair(term_as_entity(t.args[0]), term_as_entity(t.args[1]));
    case Term::Kind::SetLiteral: {
      std::vector<Entity> ms;
      for (const auto& a : t.args) ms.push_back(term_as_entity(a));
      return Entity::set(std::move(ms));
    }
  }
  return {};
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).formula(); }

Entity parse_entity(std::string_view text) { return term_as_entity(Parser(text).whole_term()); }

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Name: return t.name;
    case Term::Kind::Pair: return "<" + to_string(t.args[0]) + ", " + to_string(t.args[1]) + ">";
    case Term::Kind::SetLiteral: {
      std::string s = "{";
      for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + to_string(t.args[i]);
      return s + "}";
    }
  }
  return "";
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  auto bin = [&](std::string_view op) { return "(" + to_string(f.parts[0]) + " " + std::string(op) + " " + to_string(f.parts[1]) + ")"; };
  switch (f.kind) {
    case K::Equal: return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
    case K::Member: return to_string(f.terms[0]) + " in " + to_string(f.terms[1]);
    case K::Not: return "not " + to_string(f.parts[0]);
    case K::And: return bin("and");
    case K::Or: return bin("or");
    case K::Implies: return bin("=>");
    case K::Iff: return bin("<=>");
    case K::ForAll:
    case K::Exists:
      return std::string(f.kind == K::ForAll ? "(forall " : "(exists ") + f.variable + " in " + to_string(f.terms[0]) +
             ") " + to_string(f.parts[0]);
  }
  return "";
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

struct Env {
  const Bindings& bindings;
  std::set<std::string, std::less<>> atoms;
  std::vector<std::pair<std::string, Entity>> scope;

  Env(const Bindings& b, const Entity* extra) : bindings(b) {
    std::vector<std::string> names;
    for (const auto& [_, e] : b) collect_atoms(e, names);
    if (extra) collect_atoms(*extra, names);
    atoms.insert(names.begin(), names.end());
  }

  Entity resolve(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    if (auto it = bindings.find(name); it != bindings.end()) return it->second;
    if (atoms.contains(name)) return Entity::atom(name);
    throw Error(ErrorKind::UnboundConstant, "'" + name + "' is neither bound nor an atom of the universe");
  }

  bool known(const std::string& name) const { return bindings.contains(name) || atoms.contains(name); }
};

Entity eval_term(const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Kind::Name: return env.resolve(t.name);
    case Term::Kind::Pair: return make_pair(eval_term(t.args[0], env), eval_term(t.args[1], env));
    case Term::Kind::SetLiteral: {
      std::vector<Entity> ms;
      for (const auto& a : t.args) ms.push_back(eval_term(a, env));
      return Entity::set(std::move(ms));
    }
  }
  return {};
}

bool eval_in(const Formula& f, Env& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Equal: return eval_term(f.terms[0], env) == eval_term(f.terms[1], env);
    case K::Member: return eval_term(f.terms[1], env).contains(eval_term(f.terms[0], env));
    case K::Not: return !eval_in(f.parts[0], env);
    case K::And: return eval_in(f.parts[0], env) && eval_in(f.parts[1], env);
    case K::Or: return eval_in(f.parts[0], env) || eval_in(f.parts[1], env);
    case K::Implies: return !eval_in(f.parts[0], env) || eval_in(f.parts[1], env);
    case K::Iff: return eval_in(f.parts[0], env) == eval_in(f.parts[1], env);
    case K::ForAll:
    case K::Exists: {
      Entity range = eval_term(f.terms[0], env);
      if (range.is_atom())
        throw Error(ErrorKind::QuantifierOverAtom,
                    "'" + f.variable + "' ranges over the atom " + range.name() + " in " + to_string(f));
      bool universal = f.kind == K::ForAll;
      env.scope.emplace_back(f.variable, Entity());
      bool result = universal;
      for (const auto& m : range.members()) {
        env.scope.back().second = m;
        if (eval_in(f.parts[0], env) != universal) {
          result = !universal;
          break;
        }
      }
      env.scope.pop_back();
      return result;
    }
  }
  return false;
}

void free_in(const Term& t, const Env& env, const std::vector<std::string>& scope, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Name) {
    if (std::find(scope.begin(), scope.end(), t.name) == scope.end() && !env.known(t.name)) out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) free_in(a, env, scope, out);
}

void free_in(const Formula& f, const Env& env, std::vector<std::string>& scope, std::set<std::string>& out) {
  for (const auto& t : f.terms) free_in(t, env, scope, out);
  bool quantified = f.kind == Formula::Kind::ForAll || f.kind == Formula::Kind::Exists;
  if (quantified) scope.push_back(f.variable);
  for (const auto& p : f.parts) free_in(p, env, scope, out);
  if (quantified) scope.pop_back();
}

std::vector<std::string> free_names_in(const Formula& f, const Env& env) {
  std::set<std::string> out;
  std::vector<std::string> scope;
  free_in(f, env, scope, out);
  return {out.begin(), out.end()};
}

}  // namespace

bool eval(const Formula& f, const Bindings& bindings) {
  Env env(bindings, nullptr);
  return eval_in(f, env);
}

std::vector<std::string> free_names(const Formula& f, const Bindings& bindings) {
  return free_names_in(f, Env(bindings, nullptr));
}

Entity define_set(const Entity& bound, const Formula& f, const Bindings& bindings, std::optional<std::string> variable) {
  if (bound.is_atom()) throw Error(ErrorKind::InvalidInput, "comprehension bound " + bound.name() + " is an atom");
  Env env(bindings, &bound);
  if (!variable) {
    auto names = free_names_in(f, env);
    if (names.size() != 1)
      throw Error(ErrorKind::InvalidInput, "expected exactly one free variable in " + to_string(f) + ", found " +
                                               std::to_string(names.size()));
    variable = names.front();
  }
  std::vector<Entity> out;
  env.scope.emplace_back(*variable, Entity());
  for (const auto& m : bound.members()) {
    env.scope.back().second = m;
    if (eval_in(f, env)) out.push_back(m);
  }
  return Entity::set(std::move(out));
}

bool is_function_graph(const Entity& f, const Entity& domain, const Entity& codomain) {
  static const Formula graph = parse(
      "(forall p in F)(exists x in A)(exists y in B) p = <x, y>"
      " and (forall x in A)(exists y in B) <x, y> in F"
      " and (forall x in A)(forall y in B)(forall z in B)((<x, y> in F and <x, z> in F) => y = z)");
  if (f.is_atom() || domain.is_atom() || codomain.is_atom()) return false;
  return eval(graph, Bindings{{"F", f}, {"A", domain}, {"B", codomain}});
}

Entity star(const Entity& e) {
  if (e.is_atom()) return Entity::atom(e.name());
  std::vector<Entity> ms;
  ms.reserve(e.members().size());
  for (const auto& m : e.members()) ms.push_back(star(m));
  return Entity::set(std::move(ms));
}

TransferReport check_transfer_finite(const Formula& f, const Bindings& bindings) {
  TransferReport r;
  Bindings starred;
  for (const auto& [name, e] : bindings) starred.emplace(name, star(e));
  r.standard_value = eval(f, bindings);
  r.star_value = eval(f, starred);
  if (r.standard_value != r.star_value)
    throw Error(ErrorKind::AuditFailure, "transfer fails for " + to_string(f));
  auto audit = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::AuditFailure, what);
  };
  for (const auto& [na, a] : bindings) {
    for (const auto& [nb, b] : bindings) {
      audit(star(make_pair(a, b)) == make_pair(star(a), star(b)), "star<" + na + ", " + nb + "> differs");
      ++r.product_checks;
      if (a.is_atom() || b.is_atom()) continue;
      audit(star(set_union(a, b)) == set_union(star(a), star(b)), "star(" + na + " union " + nb + ") differs");
      audit(star(set_intersection(a, b)) == set_intersection(star(a), star(b)),
            "star(" + na + " intersect " + nb + ") differs");
      audit(star(set_difference(a, b)) == set_difference(star(a), star(b)), "star(" + na + " minus " + nb + ") differs");
      r.boolean_checks += 3;
      audit(star(cartesian_product(a, b)) == cartesian_product(star(a), star(b)),
            "star(" + na + " x " + nb + ") differs");
      ++r.product_checks;
    }
  }
  return r;
}

}  // namespace nsa::bqf
