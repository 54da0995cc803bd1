#include "nsa/hull.hpp"

#include "nsa/error.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace nsa::hull {

void validate_family(const FinSpace& s, const Family& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& f = family.values[i];
    if (f.size() != s.size())
      throw Error(ErrorKind::NotTotal, "function '" + family.names[i] + "' has " + std::to_string(f.size()) +
                                           " values for " + std::to_string(s.size()) + " points");
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y : s.monad(x).members())
        if (f[y] != f[x])
          throw Error(ErrorKind::DiscontinuousFamilyMember,
                      "function '" + family.names[i] + "' is not constant on the monad of " + s.label(x) + " = " +
                          s.format(s.monad(x)) + ": " + s.label(x) + " -> " + f[x].get_str() + ", " + s.label(y) +
                          " -> " + f[y].get_str());
  }
}

bool distinguishes_points_and_closed_sets(const FinSpace& s, const Family& family) {
  for (auto closed : s.closed_sets())
    for (std::size_t x : closed.complement(s.size()).members()) {
      bool found = false;
      for (const auto& f : family.values) {
        bool outside = true;
        for (std::size_t y : closed.members()) outside = outside && f[y] != f[x];
        if (outside) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  return true;
}

bool Hull::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.second; });
}

namespace {

FinSpace quotient_space(const FinSpace& s, const std::vector<PointSet>& classes) {
  std::vector<std::string> labels;
  for (auto c : classes) labels.push_back(s.format(c));
  std::vector<PointSet> opens;
  const std::uint32_t subsets = std::uint32_t{1} << classes.size();
  for (std::uint32_t v = 0; v < subsets; ++v) {
    PointSet pre;
    for (std::size_t c : PointSet{v}.members()) pre = pre | classes[c];
    if (s.is_open(pre)) opens.push_back({v});
  }
  return FinSpace::validate(std::move(labels), std::move(opens));
}

// Groups points by key, classes ordered by least member.
template <class Key>
std::pair<std::vector<PointSet>, std::vector<std::size_t>> group_points(std::size_t n, Key key) {
  std::vector<PointSet> classes;
  std::vector<std::size_t> q(n);
  std::map<decltype(key(0)), std::size_t> index;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = index.emplace(key(x), classes.size());
    if (fresh) classes.push_back({});
    classes[it->second].insert(x);
    q[x] = it->second;
  }
  return {std::move(classes), std::move(q)};
}

PointSet image(const std::vector<std::size_t>& q, PointSet a) {
  PointSet out;
  for (std::size_t x : a.members()) out.insert(q[x]);
  return out;
}

PointSet preimage(const std::vector<PointSet>& classes, PointSet v) {
  PointSet out;
  for (std::size_t c : v.members()) out = out | classes[c];
  return out;
}

bool all_singletons(const std::vector<PointSet>& classes) {
  return std::all_of(classes.begin(), classes.end(), [](PointSet c) { return c.size() == 1; });
}

}  // namespace

Hull build_hull(const FinSpace& s, const Family& family) {
  validate_family(s, family);
  auto [classes, q] = group_points(s.size(), [&](std::size_t x) {
    std::vector<Rational> key;
    for (const auto& f : family.values) key.push_back(f[x]);
    return key;
  });
  FinSpace quotient = quotient_space(s, classes);
  std::vector<std::vector<Rational>> lifted;
  for (const auto& f : family.values) {
    std::vector<Rational> on_classes;
    for (auto c : classes) on_classes.push_back(f[c.members().front()]);
    lifted.push_back(std::move(on_classes));
  }
  Hull h{s, classes, q, quotient, family, lifted, {}, {}, {}};

  bool inside = true, equal = true;
  for (std::size_t x = 0; x < s.size(); ++x) {
    inside = inside && s.monad(x).subset_of(classes[q[x]]);
    equal = equal && s.monad(x) == classes[q[x]];
  }
  bool distinguishing = distinguishes_points_and_closed_sets(s, family);
  bool factors = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t x = 0; x < s.size(); ++x) factors = factors && family.values[i][x] == lifted[i][q[x]];
  PointSet hit;
  for (std::size_t x = 0; x < s.size(); ++x) hit.insert(q[x]);

  h.checks = {
      {"monad_inside_class", inside},
      {"monad_equals_class_when_distinguishing", !distinguishing || equal},
      {"quotient_discrete", quotient.opens().size() == (std::size_t{1} << classes.size())},
      {"quotient_hausdorff", fintop::is_t2(quotient).holds},
      {"quotient_map_onto", hit == quotient.full()},
      {"function_factors_through_quotient", factors},
  };
  if (all_singletons(classes)) h.checks.emplace_back("lift_agrees_with_function_on_points", factors);
  h.facts = {{"family_distinguishes_points_and_closed_sets", distinguishing}, {"monad_equals_class", equal}};
  h.notes = {"all values are finite and near-equality is equality on rationals",
             "the hull is finite, hence compact, and the quotient map is onto"};
  return h;
}

Hull t0_reflection(const FinSpace& s) {
  auto [classes, q] = group_points(s.size(), [&](std::size_t x) {
    return fintop::closure_classical(s, PointSet::singleton(x)).bits;
  });
  FinSpace quotient = quotient_space(s, classes);
  Hull h{s, classes, q, quotient, {}, {}, {}, {}, {}};
  bool open_map = true, saturated = true;
  for (auto g : s.opens()) {
    PointSet img = image(q, g);
    open_map = open_map && quotient.is_open(img);
    saturated = saturated && preimage(classes, img) == g;
  }
  bool weakly = fintop::is_weakly_hausdorff(s).holds;
  bool hausdorff = fintop::is_t2(quotient).holds;
  h.checks = {
      {"reflection_t0", fintop::is_t0(quotient).holds},
      {"open_map", open_map},
      {"opens_saturated", saturated},
      {"weakly_hausdorff_iff_reflection_hausdorff", weakly == hausdorff},
  };
  h.facts = {{"source_weakly_hausdorff", weakly}, {"reflection_hausdorff", hausdorff}};
  return h;
}

Family block_indicators(const FinSpace& s) {
  auto z = fintop::z_partition(s);
  Family f;
  for (std::size_t b = 0; b < z.blocks.size(); ++b) {
    std::vector<Rational> vals;
    for (std::size_t x = 0; x < s.size(); ++x) vals.emplace_back(z.block_of[x] == b ? 1 : 0);
    f.add("block" + std::to_string(b), std::move(vals));
  }
  return f;
}

Family block_rank(const FinSpace& s) {
  auto z = fintop::z_partition(s);
  Family f;
  std::vector<Rational> rank, one;
  for (std::size_t x = 0; x < s.size(); ++x) {
    rank.emplace_back(static_cast<unsigned long>(z.block_of[x]));
    one.emplace_back(1);
  }
  f.add("rank", std::move(rank));
  f.add("one", std::move(one));
  return f;
}

namespace {

Hull block_hull(const FinSpace& s, const Family& family) {
  Hull h = build_hull(s, family);
  auto z = fintop::z_partition(s);
  h.checks.emplace_back("classes_are_blocks", h.classes == z.blocks);
  bool cr_hausdorff = fintop::is_completely_regular(s).holds && fintop::is_t2(s).holds;
  if (cr_hausdorff) {
    bool embedding = all_singletons(h.classes);
    if (embedding)
      for (std::uint32_t a = 0; a < (std::uint32_t{1} << s.size()); ++a)
        embedding = embedding && s.is_open({a}) == h.quotient.is_open(image(h.q, {a}));
    h.checks.emplace_back("embedding_when_completely_regular_hausdorff", embedding);
  }
  return h;
}

}  // namespace

Hull stone_cech_finite(const FinSpace& s) { return block_hull(s, block_indicators(s)); }

Hull hewitt_finite(const FinSpace& s) { return block_hull(s, block_rank(s)); }

AuditReport zero_set_formulas(const FinSpace& s) {
  AuditReport r;
  Hull h = stone_cech_finite(s);
  const std::size_t k = h.classes.size();
  const std::uint32_t masks = std::uint32_t{1} << k;
  // zero set of g_m: the union of the blocks in m
  std::vector<PointSet> zero(masks), image_of_zero(masks);
  bool lifted_matches = true, closure_matches = true;
  for (std::uint32_t m = 0; m < masks; ++m) {
    std::vector<Rational> g(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) g[x] = (m >> h.q[x] & 1u) ? 0 : 1;
    PointSet z;
    for (std::size_t x = 0; x < s.size(); ++x)
      if (sgn(g[x]) == 0) z.insert(x);
    zero[m] = z;
    image_of_zero[m] = image(h.q, z);
    PointSet lifted_zero;
    for (std::size_t c = 0; c < k; ++c) {
      Rational value = g[h.classes[c].members().front()];
      for (std::size_t x : h.classes[c].members())
        if (g[x] != value) r.failures.push_back("generated function not constant on class " + s.format(h.classes[c]));
      if (sgn(value) == 0) lifted_zero.insert(c);
    }
    ++r.instances;
    if (lifted_zero != image_of_zero[m]) {
      lifted_matches = false;
      r.failures.push_back("lifted zero set differs from the image of " + s.format(z));
    }
    if (fintop::closure_classical(h.quotient, image_of_zero[m]) != image_of_zero[m]) {
      closure_matches = false;
      r.failures.push_back("closure of the image of " + s.format(z) + " is larger than the image");
    }
  }
  bool intersections = true;
  for (std::uint32_t a = 0; a < masks; ++a)
    for (std::uint32_t b = 0; b < masks; ++b) {
      ++r.instances;
      if (image(h.q, zero[a] & zero[b]) != (image_of_zero[a] & image_of_zero[b])) {
        intersections = false;
        r.failures.push_back("image of " + s.format(zero[a]) + " meet " + s.format(zero[b]) + " differs");
      }
    }
  r.checks = {{"lifted_zero_set_is_image", lifted_matches},
              {"closure_of_zero_set_is_image", closure_matches},
              {"image_preserves_intersections", intersections}};
  return r;
}

AuditReport ring_correspondence(const FinSpace& s, std::uint64_t seed) {
  AuditReport r;
  std::mt19937_64 rng(seed);
  const std::size_t n = s.size();
  Hull h = stone_cech_finite(s);
  const std::size_t k = h.classes.size();
  auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };

  auto continuous = [&](const std::vector<Rational>& f) {
    std::map<Rational, PointSet> levels;
    for (std::size_t x = 0; x < n; ++x) levels[f[x]].insert(x);
    return std::all_of(levels.begin(), levels.end(), [&](const auto& kv) { return s.is_open(kv.second); });
  };
  auto constant_on_blocks = [&](const std::vector<Rational>& f) {
    for (std::size_t x = 0; x < n; ++x)
      if (f[x] != f[h.classes[h.q[x]].members().front()]) return false;
    return true;
  };

  // continuity is exactly constancy on blocks
  bool correspondence = true;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n && total <= 729; ++i) total *= 3;
  std::uniform_int_distribution<int> digit(0, 2);
  const bool exhaustive = total <= 729;
  const std::size_t trials = exhaustive ? total : 2000;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> f(n);
    for (std::size_t x = 0, c = t; x < n; ++x, c /= 3) f[x] = exhaustive ? static_cast<int>(c % 3) : digit(rng);
    ++r.instances;
    if (continuous(f) != constant_on_blocks(f)) {
      correspondence = false;
      fail("continuity and constancy on blocks disagree");
    }
  }

  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto random_on_hull = [&] {
    std::vector<Rational> v(k);
    for (auto& x : v) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    return v;
  };
  auto compose_q = [&](const std::vector<Rational>& v) {
    std::vector<Rational> f(n);
    for (std::size_t x = 0; x < n; ++x) f[x] = v[h.q[x]];
    return f;
  };
  auto lift = [&](const std::vector<Rational>& f) {
    std::vector<Rational> v(k);
    for (std::size_t c = 0; c < k; ++c) v[c] = f[h.classes[c].members().front()];
    return v;
  };

  bool bijective = true, additive = true, multiplicative = true, constants = true;
  for (int t = 0; t < 200; ++t) {
    auto u = random_on_hull(), v = random_on_hull();
    auto fu = compose_q(u), fv = compose_q(v);
    ++r.instances;
    if (!continuous(fu) || lift(fu) != u) bijective = false;
    std::vector<Rational> sum(k), prod(k), fsum(n), fprod(n);
    for (std::size_t c = 0; c < k; ++c) {
      sum[c] = u[c] + v[c];
      prod[c] = u[c] * v[c];
    }
    for (std::size_t x = 0; x < n; ++x) {
      fsum[x] = fu[x] + fv[x];
      fprod[x] = fu[x] * fv[x];
    }
    additive = additive && compose_q(sum) == fsum;
    multiplicative = multiplicative && compose_q(prod) == fprod;
    Rational c(num(rng), den(rng));
    c.canonicalize();
    constants = constants && compose_q(std::vector<Rational>(k, c)) == std::vector<Rational>(n, c);
  }
  if (!bijective) fail("composition with the quotient map is not a bijection onto continuous functions");
  if (!additive) fail("composition with the quotient map does not preserve sums");
  if (!multiplicative) fail("composition with the quotient map does not preserve products");
  if (!constants) fail("composition with the quotient map does not preserve constants");

  // sample ring: block indicators and random combinations
  std::vector<std::vector<Rational>> sample;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Rational> e(k, 0);
    e[c] = 1;
    sample.push_back(e);
  }
  for (int t = 0; t < 20; ++t) sample.push_back(random_on_hull());
  bool ideals = true, separating = true, unique = true;
  for (std::size_t p = 0; p < k; ++p) {
    std::vector<const std::vector<Rational>*> ideal;
    for (const auto& f : sample)
      if (sgn(f[p]) == 0) ideal.push_back(&f);
    for (const auto* f : ideal) {
      for (const auto* g : ideal) ideals = ideals && sgn((*f)[p] + (*g)[p]) == 0;
      for (const auto& g : sample) ideals = ideals && sgn((*f)[p] * g[p]) == 0;
    }
    for (std::size_t p2 = 0; p2 < k; ++p2) {
      if (p2 == p) continue;
      bool differ = std::any_of(sample.begin(), sample.end(), [&](const auto& f) { return f[p] != f[p2]; });
      separating = separating && differ;
      bool contained = std::all_of(ideal.begin(), ideal.end(), [&](const auto* f) { return sgn((*f)[p2]) == 0; });
      unique = unique && !contained;
    }
    ++r.instances;
  }
  if (!ideals) fail("a point's vanishing set is not an ideal");
  if (!separating) fail("evaluations at distinct hull points coincide");
  if (!unique) fail("a maximal ideal vanishes at two hull points");
  r.checks = {{"continuous_iff_constant_on_blocks", correspondence},
              {"composition_is_bijective", bijective},
              {"preserves_sums", additive},
              {"preserves_products", multiplicative},
              {"preserves_constants", constants},
              {"vanishing_sets_are_ideals", ideals},
              {"evaluations_separate_points", separating},
              {"ideal_determines_point", unique}};
  return r;
}

}  // namespace nsa::hull
