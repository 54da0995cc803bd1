#include "nsa/fintop.hpp"

#include "nsa/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nsa::fintop {

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

FinSpace FinSpace::validate(std::vector<std::string> points, std::vector<PointSet> opens) {
  const std::size_t n = points.size();
  if (n > kMaxPoints)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " points; single-space checks allow at most " +
                                         std::to_string(kMaxPoints));
  if (n == 0) throw Error(ErrorKind::InvalidInput, "a space needs at least one point");
  {
    std::set<std::string> seen;
    for (const auto& p : points)
      if (!seen.insert(p).second) throw Error(ErrorKind::InvalidInput, "duplicate point label '" + p + "'");
  }
  FinSpace s;
  s.labels_ = std::move(points);
  const PointSet all = PointSet::full(n);
  for (auto o : opens)
    if (!o.subset_of(all)) throw Error(ErrorKind::InvalidInput, "open set mentions a point outside the space");
  std::sort(opens.begin(), opens.end());
  if (auto dup = std::adjacent_find(opens.begin(), opens.end()); dup != opens.end())
    throw Error(ErrorKind::DuplicateOpen, s.format(*dup) + " is listed twice");
  s.open_table_.assign(std::size_t{1} << n, false);
  for (auto o : opens) s.open_table_[o.bits] = true;
  if (!s.open_table_[0]) throw Error(ErrorKind::MissingEmptyOrFull, "the empty set is not open");
  if (!s.open_table_[all.bits]) throw Error(ErrorKind::MissingEmptyOrFull, "the full set is not open");
  for (auto a : opens)
    for (auto b : opens)
      if (!s.open_table_[(a | b).bits])
        throw Error(ErrorKind::NotClosedUnderUnion, s.format(a) + " union " + s.format(b) + " is not open");
  for (auto a : opens)
    for (auto b : opens)
      if (!s.open_table_[(a & b).bits])
        throw Error(ErrorKind::NotClosedUnderIntersection,
                    s.format(a) + " intersect " + s.format(b) + " is not open");
  s.opens_ = std::move(opens);
  for (auto o : s.opens_) s.closed_.push_back(o.complement(n));
  std::sort(s.closed_.begin(), s.closed_.end());
  s.monads_.assign(n, all);
  for (auto o : s.opens_)
    for (std::size_t x : o.members()) s.monads_[x] = s.monads_[x] & o;
  return s;
}

FinSpace FinSpace::validate(std::size_t n, std::vector<PointSet> opens) {
  if (n > kMaxPoints)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " points; single-space checks allow at most " +
                                         std::to_string(kMaxPoints));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return validate(std::move(labels), std::move(opens));
}

std::size_t FinSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Error(ErrorKind::InvalidInput, "unknown point '" + std::string(label) + "'");
}

bool FinSpace::is_open(PointSet a) const { return a.subset_of(full()) && open_table_[a.bits]; }

std::string FinSpace::format(PointSet a) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : a.members()) {
    out += (first ? "" : ", ") + (i < labels_.size() ? labels_[i] : std::to_string(i));
    first = false;
  }
  return out + "}";
}

PointSet monad_set(const FinSpace& s, PointSet a) {
  PointSet out = s.full();
  for (auto o : s.opens())
    if (a.subset_of(o)) out = out & o;
  return out;
}

bool leq(const FinSpace& s, std::size_t x, std::size_t y) { return s.monad(x).subset_of(s.monad(y)); }

PointSet closure_classical(const FinSpace& s, PointSet a) {
  PointSet out = s.full();
  for (auto c : s.closed_sets())
    if (a.subset_of(c)) out = out & c;
  return out;
}

PointSet interior_classical(const FinSpace& s, PointSet a) {
  PointSet out;
  for (auto o : s.opens())
    if (o.subset_of(a)) out = out | o;
  return out;
}

PointSet closure_robinson(const FinSpace& s, PointSet a) {
  PointSet out;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (a.meets(s.monad(x))) out.insert(x);
  return out;
}

PointSet interior_robinson(const FinSpace& s, PointSet a) {
  PointSet out;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.monad(x).subset_of(a)) out.insert(x);
  return out;
}

bool PropertyVerdict::consistent() const {
  for (const auto& [_, v] : forms)
    if (v != oracle) return false;
  for (const auto& [_, v] : checks)
    if (!v) return false;
  return holds == oracle;
}

// ---------------------------------------------------------------------------
// Property checks.

namespace {

// Classical helpers built from the opens alone.
struct Classical {
  const FinSpace& s;
  std::vector<PointSet> interior;  // indexed by subset bits

  explicit Classical(const FinSpace& space) : s(space), interior(std::size_t{1} << space.size()) {
    for (std::uint32_t a = 0; a < interior.size(); ++a) interior[a] = interior_classical(s, {a});
  }

  // Some open g containing a and some open h containing b with g, h disjoint.
  bool separated(PointSet a, PointSet b) const {
    for (auto g : s.opens()) {
      if (!a.subset_of(g)) continue;
      if (b.subset_of(interior[g.complement(s.size()).bits])) return true;
    }
    return false;
  }
};

std::vector<std::pair<std::size_t, std::size_t>> distinct_pairs(const FinSpace& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (x != y) out.emplace_back(x, y);
  return out;
}

Witness pair_witness(const FinSpace& s, std::size_t x, std::size_t y, std::string what) {
  return {{x, y}, {s.monad(x), s.monad(y)}, std::move(what)};
}

std::string mu(const FinSpace& s, std::size_t x) { return "mu(" + s.label(x) + ") = " + s.format(s.monad(x)); }

}  // namespace

PropertyVerdict is_t0(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "t0";
  v.holds = true;
  bool robinson = true;
  for (auto [x, y] : distinct_pairs(s)) {
    if (v.holds && s.monad(x) == s.monad(y)) {
      v.holds = false;
      v.witness = pair_witness(s, x, y, mu(s, x) + " equals " + mu(s, y));
    }
    if (s.monad(y).contains(x) && s.monad(x).contains(y)) robinson = false;
  }
  v.forms.emplace_back("mutual_non_membership", robinson);
  v.oracle = true;
  for (auto [x, y] : distinct_pairs(s)) {
    bool split = std::any_of(s.opens().begin(), s.opens().end(),
                             [&](PointSet g) { return g.contains(x) != g.contains(y); });
    if (!split) v.oracle = false;
  }
  return v;
}

PropertyVerdict is_t1(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "t1";
  v.holds = true;
  bool exclusion = true;
  for (auto [x, y] : distinct_pairs(s)) {
    if (v.holds && s.monad(x).subset_of(s.monad(y))) {
      v.holds = false;
      v.witness = pair_witness(s, x, y, mu(s, x) + " is contained in " + mu(s, y));
    }
    if (s.monad(y).contains(x)) exclusion = false;
  }
  v.forms.emplace_back("mutual_exclusion", exclusion);
  v.oracle = true;
  for (std::size_t x = 0; x < s.size(); ++x)
    if (!s.is_closed(PointSet::singleton(x))) v.oracle = false;
  return v;
}

PropertyVerdict is_t2(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "t2";
  v.holds = true;
  for (auto [x, y] : distinct_pairs(s)) {
    if (s.monad(x).meets(s.monad(y))) {
      v.holds = false;
      v.witness = pair_witness(s, x, y, mu(s, x) + " meets " + mu(s, y));
      break;
    }
  }
  Classical c(s);
  v.oracle = true;
  for (auto [x, y] : distinct_pairs(s))
    if (!c.separated(PointSet::singleton(x), PointSet::singleton(y))) {
      v.oracle = false;
      break;
    }
  return v;
}

PropertyVerdict is_weakly_hausdorff(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "weakly-hausdorff";
  v.holds = true;
  for (auto [x, y] : distinct_pairs(s)) {
    if (s.monad(x) != s.monad(y) && s.monad(x).meets(s.monad(y))) {
      v.holds = false;
      v.witness = pair_witness(s, x, y, mu(s, x) + " differs from and meets " + mu(s, y));
      break;
    }
  }
  Classical c(s);
  v.oracle = true;
  for (auto [x, y] : distinct_pairs(s)) {
    bool indistinguishable = std::all_of(s.opens().begin(), s.opens().end(),
                                         [&](PointSet g) { return g.contains(x) == g.contains(y); });
    if (!indistinguishable && !c.separated(PointSet::singleton(x), PointSet::singleton(y))) {
      v.oracle = false;
      break;
    }
  }
  return v;
}

PropertyVerdict is_regular(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "regular";
  v.holds = true;
  for (auto f : s.closed_sets()) {
    PointSet mf = monad_set(s, f);
    for (std::size_t x : f.complement(s.size()).members()) {
      if (s.monad(x).meets(mf)) {
        v.holds = false;
        v.witness = Witness{{x}, {f}, "point " + s.label(x) + " outside closed " + s.format(f) + ": " + mu(s, x) +
                                          " meets mu(F) = " + s.format(mf)};
        break;
      }
    }
    if (!v.holds) break;
  }
  bool point_form = true;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!s.monad(x).contains(a) && s.monad(a).meets(s.monad(x))) point_form = false;
  v.forms.emplace_back("point_monads", point_form);
  Classical c(s);
  v.oracle = true;
  for (auto f : s.closed_sets())
    for (std::size_t x : f.complement(s.size()).members())
      if (!c.separated(PointSet::singleton(x), f)) v.oracle = false;
  return v;
}

namespace {

// Pairs of disjoint closed sets.
template <class Fn>
void for_disjoint_closed(const FinSpace& s, Fn fn) {
  for (auto f1 : s.closed_sets())
    for (auto f2 : s.closed_sets())
      if (!f1.meets(f2) && !fn(f1, f2)) return;
}

bool normal_oracle(const FinSpace& s) {
  Classical c(s);
  bool ok = true;
  for_disjoint_closed(s, [&](PointSet f1, PointSet f2) { return ok = c.separated(f1, f2); });
  return ok;
}

bool clopen_separates(const std::vector<PointSet>& clopens, PointSet inside, PointSet outside) {
  return std::any_of(clopens.begin(), clopens.end(),
                     [&](PointSet c) { return inside.subset_of(c) && !c.meets(outside); });
}

}  // namespace

PropertyVerdict is_normal(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "normal";
  v.holds = true;
  std::vector<PointSet> closed_monad(std::size_t{1} << s.size());
  for (auto f : s.closed_sets()) closed_monad[f.bits] = monad_set(s, f);
  for_disjoint_closed(s, [&](PointSet f1, PointSet f2) {
    PointSet m1 = closed_monad[f1.bits], m2 = closed_monad[f2.bits];
    if (!m1.meets(m2)) return true;
    v.holds = false;
    v.witness = Witness{{}, {f1, f2}, "disjoint closed " + s.format(f1) + " and " + s.format(f2) +
                                          " have meeting monads " + s.format(m1) + " and " + s.format(m2)};
    return false;
  });
  v.oracle = normal_oracle(s);
  return v;
}

ZPartition z_partition(const FinSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : s.monad(x).members()) parent[find(x)] = find(y);
  ZPartition z;
  z.block_of.assign(n, 0);
  std::map<std::size_t, std::size_t> index;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = index.emplace(find(x), z.blocks.size());
    if (fresh) z.blocks.push_back({});
    z.blocks[it->second].insert(x);
    z.block_of[x] = it->second;
  }
  return z;
}

PointSet ZPartition::z_monad(PointSet a) const {
  PointSet out;
  for (auto b : blocks)
    if (b.meets(a)) out = out | b;
  return out;
}

std::vector<PointSet> clopen_sets(const FinSpace& s) {
  std::vector<PointSet> out;
  for (auto o : s.opens())
    if (s.is_closed(o)) out.push_back(o);
  return out;
}

PropertyVerdict is_functionally_separated(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "functionally-separated";
  ZPartition z = z_partition(s);
  v.holds = true;
  for (auto [x, y] : distinct_pairs(s)) {
    if (z.z_monad(x).meets(z.z_monad(y))) {
      v.holds = false;
      v.witness = Witness{{x, y}, {z.z_monad(x)}, s.label(x) + " and " + s.label(y) + " share the zero-set block " +
                                                      s.format(z.z_monad(x))};
      break;
    }
  }
  auto clopens = clopen_sets(s);
  v.oracle = true;
  for (auto [x, y] : distinct_pairs(s))
    if (!clopen_separates(clopens, PointSet::singleton(x), PointSet::singleton(y))) v.oracle = false;
  return v;
}

PropertyVerdict is_completely_regular(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "completely-regular";
  ZPartition z = z_partition(s);
  v.holds = true;
  for (auto f : s.closed_sets()) {
    for (std::size_t x : f.complement(s.size()).members()) {
      if (z.z_monad(x).meets(z.z_monad(f))) {
        v.holds = false;
        v.witness = Witness{{x}, {f}, "point " + s.label(x) + " outside closed " + s.format(f) +
                                          " shares a zero-set block with it"};
        break;
      }
    }
    if (!v.holds) break;
  }
  auto clopens = clopen_sets(s);
  v.oracle = true;
  for (auto f : s.closed_sets())
    for (std::size_t x : f.complement(s.size()).members())
      if (!clopen_separates(clopens, PointSet::singleton(x), f)) v.oracle = false;
  return v;
}

PropertyVerdict is_z_normal(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "z-normal";
  ZPartition z = z_partition(s);
  v.holds = true;
  for_disjoint_closed(s, [&](PointSet f1, PointSet f2) {
    if (!z.z_monad(f1).meets(z.z_monad(f2))) return true;
    v.holds = false;
    v.witness = Witness{{}, {f1, f2}, "disjoint closed " + s.format(f1) + " and " + s.format(f2) +
                                          " meet a common zero-set block"};
    return false;
  });
  auto clopens = clopen_sets(s);
  bool urysohn = true;
  for_disjoint_closed(s, [&](PointSet f1, PointSet f2) { return urysohn = clopen_separates(clopens, f1, f2); });
  v.forms.emplace_back("clopen_separation", urysohn);
  v.oracle = normal_oracle(s);
  return v;
}

bool is_irreducible(const FinSpace& s, PointSet a) {
  if (a.empty() || !s.is_closed(a)) return false;
  for (auto f1 : s.closed_sets()) {
    if (!f1.subset_of(a) || f1 == a) continue;
    for (auto f2 : s.closed_sets())
      if (f2.subset_of(a) && f2 != a && (f1 | f2) == a) return false;
  }
  return true;
}

bool is_downward_directed(const FinSpace& s, PointSet a) {
  if (a.empty()) return false;
  for (std::size_t x : a.members())
    for (std::size_t y : a.members()) {
      bool bound = false;
      for (std::size_t z : a.members())
        if (leq(s, z, x) && leq(s, z, y)) bound = true;
      if (!bound) return false;
    }
  return true;
}

std::vector<PointSet> irreducible_closed_sets(const FinSpace& s) {
  std::vector<PointSet> out;
  for (auto c : s.closed_sets())
    if (is_irreducible(s, c)) out.push_back(c);
  return out;
}

GenericPointForms generic_point_forms(const FinSpace& s, PointSet a, std::size_t x) {
  GenericPointForms g;
  g.closure = closure_classical(s, PointSet::singleton(x)) == a;
  PointSet meet = s.full();
  bool member = true;
  for (std::size_t y : a.members()) {
    meet = meet & s.monad(y);
    member = member && s.monad(y).contains(x);
  }
  g.monad_intersection = s.monad(x) == meet;
  g.membership = member;
  return g;
}

PropertyVerdict is_sober(const FinSpace& s) {
  PropertyVerdict v;
  v.property = "sober";
  v.holds = true;
  bool equivalence = true, forms_agree = true;
  bool by_closure = true, by_intersection = true, by_membership = true;
  for (auto a : s.closed_sets()) {
    bool directed = is_downward_directed(s, a);
    bool irreducible = is_irreducible(s, a);
    if (directed != irreducible) equivalence = false;
    bool c = false, i = false, m = false;
    for (std::size_t x : a.members()) {
      auto g = generic_point_forms(s, a, x);
      if (g.closure != g.monad_intersection || g.closure != g.membership) forms_agree = false;
      c = c || g.closure;
      i = i || g.monad_intersection;
      m = m || g.membership;
    }
    if (irreducible) {
      by_closure = by_closure && c;
      by_intersection = by_intersection && i;
      by_membership = by_membership && m;
    }
    if (directed && v.holds) {
      bool smallest = false;
      for (std::size_t x : a.members()) {
        bool below_all = true;
        for (std::size_t y : a.members()) below_all = below_all && leq(s, x, y);
        smallest = smallest || below_all;
      }
      if (!smallest) {
        v.holds = false;
        v.witness = Witness{{}, {a}, "directed closed set " + s.format(a) + " has no smallest element"};
      }
    }
  }
  v.forms = {{"generic_point_closure", by_closure},
             {"generic_point_monad_intersection", by_intersection},
             {"generic_point_membership", by_membership}};
  v.checks = {{"irreducible_iff_directed", equivalence}, {"generic_point_forms_agree", forms_agree}};
  v.oracle = true;
  for (auto a : irreducible_closed_sets(s)) {
    bool generic = false;
    for (std::size_t x = 0; x < s.size(); ++x) generic = generic || closure_classical(s, PointSet::singleton(x)) == a;
    if (!generic) v.oracle = false;
  }
  return v;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {"t0",
                                                 "t1",
                                                 "t2",
                                                 "weakly-hausdorff",
                                                 "regular",
                                                 "normal",
                                                 "functionally-separated",
                                                 "completely-regular",
                                                 "z-normal",
                                                 "sober"};
  return names;
}

PropertyVerdict check_property(const FinSpace& s, std::string_view name) {
  using Check = PropertyVerdict (*)(const FinSpace&);
  static const Check checks[] = {is_t0,     is_t1,  is_t2,
                                 is_weakly_hausdorff, is_regular, is_normal,
                                 is_functionally_separated, is_completely_regular, is_z_normal,
                                 is_sober};
  const auto& names = property_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return checks[i](s);
  throw Error(ErrorKind::InvalidInput, "unknown property '" + std::string(name) + "'");
}

std::vector<PropertyVerdict> all_properties(const FinSpace& s) {
  std::vector<PropertyVerdict> out;
  for (const auto& name : property_names()) out.push_back(check_property(s, name));
  return out;
}

CompactnessReport compactness_identities(const FinSpace& s) {
  CompactnessReport r;
  const std::uint32_t subsets = std::uint32_t{1} << s.size();
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    PointSet a{bits};
    PointSet over_points, over_set_monads;
    for (std::size_t x : a.members()) {
      over_points = over_points | s.monad(x);
      over_set_monads = over_set_monads | monad_set(s, PointSet::singleton(x));
    }
    bool covered = a.subset_of(over_points);
    bool unions = over_points == over_set_monads;
    bool identity = over_points == monad_set(s, a);
    ++r.subsets;
    r.covered_by_monads += covered;
    r.union_over_members += unions;
    r.union_equals_set_monad += identity;
    if (!(covered && unions && identity)) r.failures.push_back(a);
  }
  return r;
}

bool is_continuous(const Map& f, const FinSpace& x, const FinSpace& y) {
  if (f.size() != x.size())
    throw Error(ErrorKind::NotTotal, "map has " + std::to_string(f.size()) + " images for " +
                                         std::to_string(x.size()) + " points");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= y.size())
      throw Error(ErrorKind::NotTotal, "point " + x.label(i) + " is sent outside the target space");
  for (auto v : y.opens()) {
    PointSet pre;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (v.contains(f[i])) pre.insert(i);
    if (!x.is_open(pre)) return false;
  }
  return true;
}

std::vector<Map> continuous_maps(const FinSpace& x, const FinSpace& y) {
  double count = 1;
  for (std::size_t i = 0; i < x.size(); ++i) count *= static_cast<double>(y.size());
  if (count > 1e7) throw Error(ErrorKind::TooLarge, "too many maps to enumerate");
  std::vector<Map> out;
  Map f(x.size(), 0);
  for (;;) {
    if (is_continuous(f, x, y)) out.push_back(f);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == y.size()) f[i++] = 0;
    if (i == f.size()) break;
  }
  return out;
}

Map compose(const Map& g, const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration through specialization preorders: a topology on a finite set
// is determined by its preorder x <= y iff x in mu(y), and its opens are the
// down-sets.

namespace {

std::optional<FinSpace> space_of_relation(std::size_t n, std::uint32_t mask) {
  bool le[kMaxEnumeratedPoints][kMaxEnumeratedPoints] = {};
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = i == j || ((mask >> bit++) & 1u);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k]) return std::nullopt;
  std::vector<PointSet> opens;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    bool down = true;
    for (std::size_t y = 0; y < n && down; ++y)
      if ((u >> y) & 1u)
        for (std::size_t x = 0; x < n; ++x)
          if (le[x][y] && !((u >> x) & 1u)) down = false;
    if (down) opens.push_back({u});
  }
  return FinSpace::validate(n, std::move(opens));
}

void check_enumeration_size(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "enumeration needs at least one point");
  if (n > kMaxEnumeratedPoints)
    throw Error(ErrorKind::TooLarge, "exhaustive enumeration is limited to " +
                                         std::to_string(kMaxEnumeratedPoints) + " points, got " + std::to_string(n));
}

bool by_opens(const FinSpace& a, const FinSpace& b) { return a.opens() < b.opens(); }

}  // namespace

std::vector<FinSpace> enumerate_topologies_serial(std::size_t n) {
  check_enumeration_size(n);
  const std::uint32_t relations = std::uint32_t{1} << (n * (n - 1));
  std::vector<FinSpace> out;
  for (std::uint32_t mask = 0; mask < relations; ++mask)
    if (auto s = space_of_relation(n, mask)) out.push_back(std::move(*s));
  std::sort(out.begin(), out.end(), by_opens);
  return out;
}

std::vector<FinSpace> enumerate_topologies(std::size_t n) {
  check_enumeration_size(n);
  const std::int64_t relations = std::int64_t{1} << (n * (n - 1));
  std::vector<std::optional<FinSpace>> slots(static_cast<std::size_t>(relations));
#pragma omp parallel for schedule(static)
  for (std::int64_t mask = 0; mask < relations; ++mask)
    slots[static_cast<std::size_t>(mask)] = space_of_relation(n, static_cast<std::uint32_t>(mask));
  std::vector<FinSpace> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  std::sort(out.begin(), out.end(), by_opens);
  return out;
}

std::string to_dot(const FinSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (leq(s, x, y) && leq(s, y, x)) {
        rep[x] = rep[y];
        break;
      }
  }
  auto quote = [&](std::size_t x) {
    std::string out = "\"";
    for (char c : s.label(x)) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph specialization {\n";
  for (std::size_t x = 0; x < n; ++x) out += "  " + quote(x) + ";\n";
  // Equivalent points form a cycle; distinct classes are joined by covering
  // edges between representatives.
  for (std::size_t r = 0; r < n; ++r) {
    if (rep[r] != r) continue;
    std::vector<std::size_t> cls;
    for (std::size_t x = 0; x < n; ++x)
      if (rep[x] == r) cls.push_back(x);
    if (cls.size() > 1)
      for (std::size_t i = 0; i < cls.size(); ++i)
        out += "  " + quote(cls[i]) + " -> " + quote(cls[(i + 1) % cls.size()]) + ";\n";
  }
  auto strictly = [&](std::size_t x, std::size_t y) { return leq(s, x, y) && !leq(s, y, x); };
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (rep[y] != y || !strictly(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z)
        if (strictly(x, z) && strictly(z, y)) covered = false;
      if (covered) out += "  " + quote(x) + " -> " + quote(y) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace nsa::fintop
