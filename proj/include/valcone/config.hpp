#pragma once

#include <vector>

#include "valcone/errors.hpp"
#include "valcone/numeric.hpp"

namespace valcone {

// Point indices are 1-based throughout, matching the blow-up sequence
// p_1, ..., p_m. points[i-1] describes p_i.
struct Point {
  enum class Kind { Origin, Free, Satellite };
  Kind kind = Kind::Free;
  // 1-based index of the second proximity target; only for satellites.
  // Every p_i with i >= 2 is additionally proximate to p_{i-1}.
  int target = 0;

  static Point origin() { return {Kind::Origin, 0}; }
  static Point free_point() { return {Kind::Free, 0}; }
  static Point satellite(int j) { return {Kind::Satellite, j}; }

  bool is_satellite() const { return kind == Kind::Satellite; }
  bool operator==(const Point&) const = default;
};

// Blow-up configuration of a plane divisorial valuation, plus the number s
// of initial points lying on successive strict transforms of the line at
// infinity L.
struct Configuration {
  std::vector<Point> points;
  int s = 1;

  int m() const { return static_cast<int>(points.size()); }
  const Point& point(int i) const { return points[i - 1]; }
  bool operator==(const Configuration&) const = default;
};

// Checks every structural invariant; returns its argument on success.
// Throws Error with IllegalSatelliteTarget, LineThroughSatellite or
// BadLength otherwise.
const Configuration& validate(const Configuration& config);

bool is_valid(const Configuration& config);

// Proximity set of p_j within the first i points: the consecutive indices
// k with j < k <= i and p_k proximate to p_j.
std::vector<int> proximate_points(const Configuration& config, int j, int i);

// m x m unit lower-triangular matrix with P[i][j] = -1 iff p_i -> p_j
// (entries accessed 1-based through a plain vector of rows).
std::vector<std::vector<Int>> proximity_matrix(const Configuration& config);

// Multiplicities (m_1, ..., m_i) of the generic curvette through p_1..p_i:
// m_i = 1 and m_j = sum of m_k over p_k -> p_j, k <= i.
std::vector<Int> multiplicity_vector(const Configuration& config, int i);

// First i points with s clamped to min(s, i).
Configuration truncate(const Configuration& config, int i);

// Length of the initial free chain p_1, p_2, ... (at least 1).
int initial_free_chain(const Configuration& config);

// 1-based indices of the first point of each maximal satellite run.
std::vector<int> satellite_block_starts(const Configuration& config);

// Reconstructs the free/satellite pattern from a curvette multiplicity
// vector (the proximity equalities determine it uniquely). Throws
// InvalidContactSequence if no configuration matches.
Configuration configuration_from_multiplicities(const std::vector<Int>& mult, int s);

}  // namespace valcone
