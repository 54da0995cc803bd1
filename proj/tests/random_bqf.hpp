#pragma once

#include "nsa/bqf.hpp"

#include <random>
#include <string>
#include <vector>

namespace nsa::testing {

using bqf::Entity;
using bqf::Formula;
using bqf::Term;

inline std::vector<Entity> atoms(std::size_t n) {
  std::vector<Entity> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Entity::atom(std::string(1, static_cast<char>('a' + i))));
  return out;
}

inline std::vector<Entity> power_set(const std::vector<Entity>& xs) {
  std::vector<Entity> out;
  for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
    std::vector<Entity> ms;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) ms.push_back(xs[i]);
    out.push_back(Entity::set(std::move(ms)));
  }
  return out;
}

inline bqf::Entity random_entity(std::mt19937_64& rng, int level) {
  std::uniform_int_distribution<int> pick(0, 2);
  if (level == 0) return Entity::atom(std::string(1, static_cast<char>('a' + pick(rng))));
  std::uniform_int_distribution<int> size(0, 3);
  std::vector<Entity> ms;
  for (int i = size(rng); i > 0; --i) ms.push_back(random_entity(rng, pick(rng) == 0 ? level - 1 : 0));
  return Entity::set(std::move(ms));
}

inline bqf::Term random_term(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 1);
  static const char* names[] = {"a", "b", "x", "A"};
  Term t;
  switch (pick(rng)) {
    case 0:
    case 1:
    case 2: t.name = names[std::uniform_int_distribution<int>(0, 3)(rng)]; break;
    case 3:
      t.kind = Term::Kind::Pair;
      t.args = {random_term(rng, depth - 1), random_term(rng, depth - 1)};
      break;
    default:
      t.kind = Term::Kind::SetLiteral;
      for (int i = std::uniform_int_distribution<int>(0, 2)(rng); i > 0; --i) t.args.push_back(random_term(rng, depth - 1));
  }
  return t;
}

inline bqf::Formula random_formula(std::mt19937_64& rng, int depth) {
  using K = Formula::Kind;
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 1);
  Formula f;
  f.kind = static_cast<K>(pick(rng));
  switch (f.kind) {
    case K::Equal:
    case K::Member: f.terms = {random_term(rng, 1), random_term(rng, 1)}; break;
    case K::Not: f.parts = {random_formula(rng, depth - 1)}; break;
    case K::ForAll:
    case K::Exists:
      f.variable = "x";
      f.terms = {random_term(rng, 1)};
      f.parts = {random_formula(rng, depth - 1)};
      break;
    default: f.parts = {random_formula(rng, depth - 1), random_formula(rng, depth - 1)};
  }
  return f;
}

}  // namespace nsa::testing
