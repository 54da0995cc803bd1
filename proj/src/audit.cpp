#include "nsa/audit.hpp"

#include "nsa/error.hpp"
#include "nsa/hull.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace nsa::audit {

namespace {

using fintop::FinSpace;

struct Theorem {
  const char* name;
  const char* statement;
  bool asserted;
};

const Theorem kTheorems[] = {
    {"t0_weakly_hausdorff_implies_hausdorff", "a T0 weakly Hausdorff space is Hausdorff", true},
    {"t0_regular_implies_hausdorff", "a T0 regular space is Hausdorff", true},
    {"compact_hausdorff_implies_regular", "a compact Hausdorff space is regular", true},
    {"compact_regular_implies_normal", "a compact regular space is normal", true},
    {"hausdorff_implies_sober", "a Hausdorff space is sober", true},
    {"normal_iff_extension_normal", "the monad form of normality on the extension agrees with normality of the space",
     true},
    {"regular_iff_opens_closed", "a space is regular iff every open set is closed", true},
    {"irreducible_iff_directed", "a closed set is irreducible iff it is downward directed", true},
    {"weakly_hausdorff_iff_t0_reflection_hausdorff", "a space is weakly Hausdorff iff its T0 reflection is Hausdorff",
     true},
    {"monad_inside_hull_class", "every monad lies inside its hull class", true},
    {"monad_equals_hull_class_when_distinguishing",
     "monads equal hull classes when the family distinguishes points and closed sets", true},
    {"hull_is_discrete_hausdorff", "every hull is Hausdorff, hence discrete", true},
    {"finite_implies_t0",
     "reading 'a finite space has a T0 extension' as 'every finite space is T0'; non-T0 spaces are candidates",
     false},
};
constexpr std::size_t kCount = std::size(kTheorems);

hull::Family random_family(const FinSpace& s, std::mt19937_64& rng) {
  hull::Family base = hull::block_indicators(s);
  hull::Family out;
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1), count(1, 3);
  std::uniform_int_distribution<long> num(-3, 3);
  for (std::size_t i = count(rng); i > 0; --i) {
    auto f = base.values[pick(rng)];
    const auto& g = base.values[pick(rng)];
    Rational c(num(rng));
    for (std::size_t x = 0; x < f.size(); ++x) f[x] = f[x] + c * g[x];
    out.add("g" + std::to_string(i), std::move(f));
  }
  return out;
}

bool check(const hull::Hull& h, std::string_view name) {
  for (const auto& [n, ok] : h.checks)
    if (n == name) return ok;
  return true;
}

// One row of verdicts per space, in kTheorems order.
std::array<bool, kCount> evaluate(const FinSpace& s, std::uint64_t seed) {
  using namespace fintop;
  const bool t0 = is_t0(s).holds, t2 = is_t2(s).holds, wh = is_weakly_hausdorff(s).holds;
  const bool regular = is_regular(s).holds, sober = is_sober(s).holds;
  const auto normal = is_normal(s);
  bool opens_closed = std::all_of(s.opens().begin(), s.opens().end(), [&](PointSet g) { return s.is_closed(g); });
  bool directed = true;
  for (auto a : s.closed_sets()) directed = directed && is_irreducible(s, a) == is_downward_directed(s, a);
  const bool reflection = wh == is_t2(hull::t0_reflection(s).quotient).holds;

  std::vector<hull::Hull> hulls = {hull::stone_cech_finite(s), hull::hewitt_finite(s)};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 2; ++i) hulls.push_back(hull::build_hull(s, random_family(s, rng)));
  bool inside = true, equal = true, discrete = true;
  for (const auto& h : hulls) {
    inside = inside && check(h, "monad_inside_class");
    equal = equal && check(h, "monad_equals_class_when_distinguishing");
    discrete = discrete && check(h, "quotient_discrete") && check(h, "quotient_hausdorff");
  }

  return {!(t0 && wh) || t2,
          !(t0 && regular) || t2,
          !t2 || regular,
          !regular || normal.holds,
          !t2 || sober,
          normal.holds == normal.oracle,
          regular == opens_closed,
          directed,
          reflection,
          inside,
          equal,
          discrete,
          t0};
}

std::vector<FinSpace> spaces_up_to(std::size_t max_points, bool parallel, std::vector<std::size_t>& by_size) {
  if (max_points == 0) throw Error(ErrorKind::InvalidInput, "the audit needs at least one point");
  if (max_points > fintop::kMaxEnumeratedPoints)
    throw Error(ErrorKind::TooLarge, "the audit enumerates at most " +
                                         std::to_string(fintop::kMaxEnumeratedPoints) + " points, got " +
                                         std::to_string(max_points));
  std::vector<FinSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    auto spaces = parallel ? fintop::enumerate_topologies(n) : fintop::enumerate_topologies_serial(n);
    by_size.push_back(spaces.size());
    out.insert(out.end(), spaces.begin(), spaces.end());
  }
  return out;
}

AuditReport assemble(std::size_t max_points, std::vector<FinSpace> spaces, std::vector<std::size_t> by_size,
                     const std::vector<std::array<bool, kCount>>& rows) {
  AuditReport r{max_points, std::move(spaces), std::move(by_size), {}};
  for (std::size_t t = 0; t < kCount; ++t) {
    TheoremResult res{kTheorems[t].name, kTheorems[t].statement, kTheorems[t].asserted, rows.size(), {}};
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i][t]) res.counterexamples.push_back(i);
    r.theorems.push_back(std::move(res));
  }
  return r;
}

}  // namespace

bool AuditReport::passed() const {
  return std::all_of(theorems.begin(), theorems.end(),
                     [](const TheoremResult& t) { return !t.asserted || t.counterexamples.empty(); });
}

AuditReport run_audit(std::size_t max_points, std::uint64_t seed) {
  std::vector<std::size_t> by_size;
  auto spaces = spaces_up_to(max_points, true, by_size);
  std::vector<std::array<bool, kCount>> rows(spaces.size());
  const auto count = static_cast<std::int64_t>(spaces.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i)
    rows[static_cast<std::size_t>(i)] = evaluate(spaces[static_cast<std::size_t>(i)], seed + static_cast<std::uint64_t>(i));
  return assemble(max_points, std::move(spaces), std::move(by_size), rows);
}

AuditReport run_audit_serial(std::size_t max_points, std::uint64_t seed) {
  std::vector<std::size_t> by_size;
  auto spaces = spaces_up_to(max_points, false, by_size);
  std::vector<std::array<bool, kCount>> rows;
  for (std::size_t i = 0; i < spaces.size(); ++i) rows.push_back(evaluate(spaces[i], seed + i));
  return assemble(max_points, std::move(spaces), std::move(by_size), rows);
}

}  // namespace nsa::audit
