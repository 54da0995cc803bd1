#pragma once

#include "nsa/fintop.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nsa::audit {

struct TheoremResult {
  std::string name;
  std::string statement;
  /// Descriptive results are reported but never fail the audit.
  bool asserted = true;
  std::size_t checked = 0;
  /// Indices into AuditReport::spaces.
  std::vector<std::size_t> counterexamples;
};

struct AuditReport {
  std::size_t max_points = 0;
  std::vector<fintop::FinSpace> spaces;
  std::vector<std::size_t> spaces_by_size;  // entry n-1 counts spaces on n points
  std::vector<TheoremResult> theorems;

  bool passed() const;
};

/// Runs every theorem over all spaces on 1..max_points points, one OpenMP
/// task per space. Throws TooLarge above the enumeration limit.
AuditReport run_audit(std::size_t max_points, std::uint64_t seed = 1);
/// Same computation on one thread.
AuditReport run_audit_serial(std::size_t max_points, std::uint64_t seed = 1);

}  // namespace nsa::audit
