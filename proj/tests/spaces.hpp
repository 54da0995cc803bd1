#pragma once

#include "nsa/fintop.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace nsa::testing {

/// Opens given as strings of point digits, e.g. {"", "0", "01"}.
inline fintop::FinSpace space(std::size_t n, std::initializer_list<std::string_view> opens) {
  std::vector<fintop::PointSet> out;
  for (auto o : opens) {
    fintop::PointSet p;
    for (char c : o) p.insert(static_cast<std::size_t>(c - '0'));
    out.push_back(p);
  }
  return fintop::FinSpace::validate(n, std::move(out));
}

inline fintop::PointSet pts(std::string_view digits) {
  fintop::PointSet p;
  for (char c : digits) p.insert(static_cast<std::size_t>(c - '0'));
  return p;
}

/// {0, 1, 2} with opens {}, {0}, {0,1}, {0,2}, X.
inline fintop::FinSpace three_point_space() { return space(3, {"", "0", "01", "02", "012"}); }
/// Opens {}, {0}, {0,1}.
inline fintop::FinSpace sierpinski() { return space(2, {"", "0", "01"}); }
inline fintop::FinSpace indiscrete(std::size_t n) {
  return fintop::FinSpace::validate(n, {fintop::PointSet{}, fintop::PointSet::full(n)});
}
inline fintop::FinSpace discrete(std::size_t n) {
  std::vector<fintop::PointSet> opens;
  for (std::uint32_t b = 0; b < (1u << n); ++b) opens.push_back({b});
  return fintop::FinSpace::validate(n, std::move(opens));
}

/// Every space on 1..max_points points.
inline std::vector<fintop::FinSpace> all_spaces(std::size_t max_points = 4) {
  std::vector<fintop::FinSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    auto spaces = fintop::enumerate_topologies(n);
    out.insert(out.end(), spaces.begin(), spaces.end());
  }
  return out;
}

}  // namespace nsa::testing
