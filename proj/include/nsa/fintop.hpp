#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsa::fintop {

inline constexpr std::size_t kMaxPoints = 12;
inline constexpr std::size_t kMaxEnumeratedPoints = 4;

/// Subset of the points 0..n-1 of a space.
struct PointSet {
  std::uint32_t bits = 0;

  static PointSet singleton(std::size_t i) { return {std::uint32_t{1} << i}; }
  static PointSet full(std::size_t n) { return {(std::uint32_t{1} << n) - 1}; }

  bool empty() const { return bits == 0; }
  bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool subset_of(PointSet o) const { return (bits & ~o.bits) == 0; }
  bool meets(PointSet o) const { return (bits & o.bits) != 0; }
  PointSet complement(std::size_t n) const { return {full(n).bits & ~bits}; }
  void insert(std::size_t i) { bits |= std::uint32_t{1} << i; }

  /// Members in increasing order.
  std::vector<std::size_t> members() const;

  friend PointSet operator|(PointSet a, PointSet b) { return {a.bits | b.bits}; }
  friend PointSet operator&(PointSet a, PointSet b) { return {a.bits & b.bits}; }
  friend PointSet operator-(PointSet a, PointSet b) { return {a.bits & ~b.bits}; }
  friend auto operator<=>(PointSet, PointSet) = default;
};

/// A validated finite topological space. Opens are duplicate-free and sorted
/// by bit pattern; monads are computed once at construction.
class FinSpace {
 public:
  /// Throws TooLarge (more than kMaxPoints), InvalidInput (duplicate labels,
  /// members out of range), DuplicateOpen, MissingEmptyOrFull,
  /// NotClosedUnderUnion, NotClosedUnderIntersection.
  static FinSpace validate(std::vector<std::string> points, std::vector<PointSet> opens);
  /// Points labelled "0", "1", ...
  static FinSpace validate(std::size_t n, std::vector<PointSet> opens);

  std::size_t size() const { return labels_.size(); }
  PointSet full() const { return PointSet::full(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Throws InvalidInput for an unknown label.
  std::size_t index_of(std::string_view label) const;

  const std::vector<PointSet>& opens() const { return opens_; }
  /// Complements of the opens, sorted.
  const std::vector<PointSet>& closed_sets() const { return closed_; }
  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(a.complement(size())); }

  /// Intersection of the opens containing x.
  PointSet monad(std::size_t x) const { return monads_[x]; }
  const std::vector<PointSet>& monads() const { return monads_; }

  /// "{a, b}".
  std::string format(PointSet a) const;

  friend bool operator==(const FinSpace& a, const FinSpace& b) {
    return a.labels_ == b.labels_ && a.opens_ == b.opens_;
  }

 private:
  FinSpace() = default;
  std::vector<std::string> labels_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> closed_;
  std::vector<PointSet> monads_;
  std::vector<bool> open_table_;
};

/// Intersection of all opens containing a; the empty set for a = {}.
PointSet monad_set(const FinSpace& s, PointSet a);

/// x <= y iff mu(x) is contained in mu(y).
bool leq(const FinSpace& s, std::size_t x, std::size_t y);

PointSet closure_classical(const FinSpace& s, PointSet a);
PointSet interior_classical(const FinSpace& s, PointSet a);
/// {x : a meets mu(x)}.
PointSet closure_robinson(const FinSpace& s, PointSet a);
/// {x : mu(x) inside a}.
PointSet interior_robinson(const FinSpace& s, PointSet a);

/// Counterexample data for a false verdict.
struct Witness {
  std::vector<std::size_t> points;
  std::vector<PointSet> sets;
  std::string description;
};

struct PropertyVerdict {
  std::string property;
  /// The monad-based decision.
  bool holds = false;
  /// Further characterizations, each expected to equal the oracle.
  std::vector<std::pair<std::string, bool>> forms;
  /// The decision straight from the classical definition.
  bool oracle = false;
  /// Side checks that must be true regardless of the verdict.
  std::vector<std::pair<std::string, bool>> checks;
  std::optional<Witness> witness;

  bool consistent() const;
};

PropertyVerdict is_t0(const FinSpace& s);
PropertyVerdict is_t1(const FinSpace& s);
PropertyVerdict is_t2(const FinSpace& s);
PropertyVerdict is_weakly_hausdorff(const FinSpace& s);
PropertyVerdict is_regular(const FinSpace& s);
PropertyVerdict is_normal(const FinSpace& s);
PropertyVerdict is_functionally_separated(const FinSpace& s);
PropertyVerdict is_completely_regular(const FinSpace& s);
/// Oracle: the classical normality oracle.
PropertyVerdict is_z_normal(const FinSpace& s);
PropertyVerdict is_sober(const FinSpace& s);

/// Every property above, in a fixed order.
std::vector<PropertyVerdict> all_properties(const FinSpace& s);
/// Names accepted by check_property: "t0", "t1", "t2", "weakly-hausdorff",
/// "regular", "normal", "functionally-separated", "completely-regular",
/// "z-normal", "sober".
const std::vector<std::string>& property_names();
/// Throws InvalidInput for an unknown name.
PropertyVerdict check_property(const FinSpace& s, std::string_view name);

/// Connected components of the relation "y in mu(x)", ordered by least
/// member.
struct ZPartition {
  std::vector<PointSet> blocks;
  std::vector<std::size_t> block_of;

  PointSet z_monad(std::size_t x) const { return blocks[block_of[x]]; }
  /// Union of the blocks meeting a.
  PointSet z_monad(PointSet a) const;
};

ZPartition z_partition(const FinSpace& s);

/// Sets that are both open and closed.
std::vector<PointSet> clopen_sets(const FinSpace& s);

bool is_irreducible(const FinSpace& s, PointSet closed);
/// Nonempty, and any two members have a common lower bound in the set.
bool is_downward_directed(const FinSpace& s, PointSet a);
std::vector<PointSet> irreducible_closed_sets(const FinSpace& s);

/// The three equivalent generic-point tests for x in a closed set a:
/// a = cl{x}; mu(x) = intersection of mu over a; x in mu(y) for all y in a.
struct GenericPointForms {
  bool closure = false;
  bool monad_intersection = false;
  bool membership = false;
};
GenericPointForms generic_point_forms(const FinSpace& s, PointSet a, std::size_t x);

struct CompactnessReport {
  std::size_t subsets = 0;
  std::size_t covered_by_monads = 0;       // a inside the union of mu(x), x in a
  std::size_t union_over_members = 0;      // union of mu over a, both readings
  std::size_t union_equals_set_monad = 0;  // union of mu(x) = mu(a)
  std::vector<PointSet> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the monad identities for every subset of the space.
CompactnessReport compactness_identities(const FinSpace& s);

/// Images of points 0..n-1.
using Map = std::vector<std::size_t>;

/// Throws NotTotal when f does not send every point of x into y.
bool is_continuous(const Map& f, const FinSpace& x, const FinSpace& y);
std::vector<Map> continuous_maps(const FinSpace& x, const FinSpace& y);
Map compose(const Map& g, const Map& f);

/// Every labelled topology on n points exactly once, sorted by open
/// families. Throws TooLarge for n > kMaxEnumeratedPoints.
std::vector<FinSpace> enumerate_topologies(std::size_t n);
std::vector<FinSpace> enumerate_topologies_serial(std::size_t n);

/// Specialization preorder (edge x -> y when x <= y), transitively reduced.
std::string to_dot(const FinSpace& s);

}  // namespace nsa::fintop
