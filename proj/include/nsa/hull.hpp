#pragma once

#include "nsa/fintop.hpp"
#include "nsa/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nsa::hull {

using fintop::FinSpace;
using fintop::PointSet;

/// Named rational-valued functions on the points of a space.
struct Family {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> values;  // values[i][x]

  void add(std::string name, std::vector<Rational> vals) {
    names.push_back(std::move(name));
    values.push_back(std::move(vals));
  }
  std::size_t size() const { return names.size(); }
};

/// Throws NotTotal for a wrong number of values and DiscontinuousFamilyMember
/// when a member is not constant on some monad.
void validate_family(const FinSpace& s, const Family& family);

/// For every closed F and x outside F some member has f(x) outside f[F].
bool distinguishes_points_and_closed_sets(const FinSpace& s, const Family& family);

using Check = std::pair<std::string, bool>;

struct Hull {
  FinSpace source;
  std::vector<PointSet> classes;  // ordered by least member
  std::vector<std::size_t> q;     // point -> class
  FinSpace quotient;              // quotient topology, one point per class
  Family family;
  std::vector<std::vector<Rational>> lifted;  // lifted[i][class]
  /// Identities that must hold.
  std::vector<Check> checks;
  /// Descriptive observations (may be true or false).
  std::vector<Check> facts;
  std::vector<std::string> notes;

  bool ok() const;
};

/// Classes of points with equal values under every member, with the
/// quotient topology and the lifted functions.
Hull build_hull(const FinSpace& s, const Family& family);

/// Quotient by equal point closures.
Hull t0_reflection(const FinSpace& s);

/// Indicators of the zero-set blocks.
Family block_indicators(const FinSpace& s);
/// The block index function together with the constant 1.
Family block_rank(const FinSpace& s);

/// Hull over the bounded generating family (block indicators).
Hull stone_cech_finite(const FinSpace& s);
/// Hull over the block rank family.
Hull hewitt_finite(const FinSpace& s);

struct AuditReport {
  std::size_t instances = 0;
  std::vector<Check> checks;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Zero-set image identities over the Stone-Cech hull, for every union of
/// blocks as a zero set and every pair of them.
AuditReport zero_set_formulas(const FinSpace& s);

/// Correspondence between continuous functions on the space, functions on
/// blocks and functions on the hull, with the maximal-ideal audit. Random
/// combinations are drawn from the seed.
AuditReport ring_correspondence(const FinSpace& s, std::uint64_t seed = 1);

}  // namespace nsa::hull
