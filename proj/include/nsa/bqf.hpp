#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nsa::bqf {

/// An atom or a finite, duplicate-free set of entities. Members are kept
/// sorted, so equality is extensional.
class Entity {
 public:
  Entity() = default;  // the empty set
  static Entity atom(std::string name);
  static Entity set(std::vector<Entity> members);

  bool is_atom() const { return is_atom_; }
  bool is_set() const { return !is_atom_; }
  const std::string& name() const { return name_; }
  const std::vector<Entity>& members() const { return members_; }

  bool contains(const Entity& e) const;
  /// 0 for atoms, 1 + max member level for sets (1 for the empty set).
  std::size_t type_level() const;

  /// "a", "{}", "{a, {b}}".
  std::string to_string() const;

  friend bool operator==(const Entity&, const Entity&) = default;
  friend std::strong_ordering operator<=>(const Entity& a, const Entity& b);

 private:
  bool is_atom_ = false;
  std::string name_;
  std::vector<Entity> members_;
};

using Bindings = std::map<std::string, Entity, std::less<>>;

/// {{a},{a,b}}.
Entity make_pair(const Entity& a, const Entity& b);
Entity set_union(const Entity& a, const Entity& b);
Entity set_intersection(const Entity& a, const Entity& b);
Entity set_difference(const Entity& a, const Entity& b);
Entity cartesian_product(const Entity& a, const Entity& b);

/// Every atom occurring anywhere inside e.
void collect_atoms(const Entity& e, std::vector<std::string>& out);

/// Parses a term with every identifier read as an atom: "{a, <a,b>, {}}".
Entity parse_entity(std::string_view text);

struct Term {
  enum class Kind { Name, Pair, SetLiteral };
  Kind kind = Kind::Name;
  std::string name;
  std::vector<Term> args;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
  enum class Kind { Equal, Member, Not, And, Or, Implies, Iff, ForAll, Exists };
  Kind kind = Kind::Equal;
  std::string variable;        // quantifiers
  std::vector<Term> terms;     // Equal / Member operands, quantifier range
  std::vector<Formula> parts;  // connective operands, quantifier body
  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Keywords forall, exists, in, and, or, not, =>, <=>; Unicode symbols are
/// accepted too. Binary connectives may be written without parentheses:
/// not binds tightest, then and, or, => (right associative), <=>. A
/// quantifier scopes over the formula that immediately follows it.
/// Throws SyntaxError or UnboundedQuantifier.
Formula parse(std::string_view text);

/// Fully parenthesized form that parse() maps back to the same tree.
std::string to_string(const Formula& f);
std::string to_string(const Term& t);

/// Identifiers resolve to bound variables, then bindings, then atoms that
/// occur in some bound entity. Throws UnboundConstant, QuantifierOverAtom.
bool eval(const Formula& f, const Bindings& bindings);

/// Names that are neither quantified, bound, nor atoms of the bindings.
std::vector<std::string> free_names(const Formula& f, const Bindings& bindings);

/// {x in bound : f}. The variable defaults to the single free name of f
/// (atoms of bound count as known); throws InvalidInput when that is
/// ambiguous and InvalidInput when bound is an atom.
Entity define_set(const Entity& bound, const Formula& f, const Bindings& bindings,
                  std::optional<std::string> variable = std::nullopt);

/// Evaluates the three-conjunct formula: f is a relation from domain to
/// codomain, every domain point has a value, values are unique.
bool is_function_graph(const Entity& f, const Entity& domain, const Entity& codomain);

/// Structural star map; the identity at finite scale.
Entity star(const Entity& e);

struct TransferReport {
  bool standard_value = false;
  bool star_value = false;
  std::size_t boolean_checks = 0;
  std::size_t product_checks = 0;
};

/// Compares f on the bindings and on their star images, then audits that
/// star preserves union, intersection, difference, pairs and products of
/// the bound entities. Throws AuditFailure naming the instance on mismatch.
TransferReport check_transfer_finite(const Formula& f, const Bindings& bindings);

}  // namespace nsa::bqf
