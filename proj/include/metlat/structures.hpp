#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metlat/weight.hpp"

namespace metlat {

/// The near-top metric structures: zero diagonal, alpha on one symmetric
/// pair, infinity everywhere else. alpha must be positive (infinity gives
/// the top metric structure).
WeightStructure pseudo_anti_atom(std::vector<std::string> labels, Eigen::Index x,
                                 Eigen::Index y, const ExtValue& alpha);

struct CellCheck {
  bool pass = true;
  Eigen::Index row = -1;
  Eigen::Index col = -1;
};

/// Reconstructs d as the Met(X) meet of one pseudo-anti-atom per
/// off-diagonal pair (pairs at distance zero use the degenerate 0/infinity
/// atom) and compares. Returns the first differing cell on failure.
/// Requires d in Met(X).
CellCheck decompose_check(const WeightStructure& d);

struct PairStepWitness {
  PointSet support = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> changed;
};

/// Witnesses d < m with every changed pair inside a support of at most
/// max_points points (the minimal support is returned). Both arguments
/// must be in Met(X) with the same shape.
std::optional<PairStepWitness> elementary_step(const WeightStructure& d,
                                               const WeightStructure& m, int max_points);

struct PairWitness {
  bool pass = true;
  Eigen::Index x = -1;
  Eigen::Index y = -1;
};

/// No single pair's distance can be strictly increased within Met(X):
/// every finite d(x,y) is already pinned to min over other points z of
/// d(x,z) + d(z,y). On two points only infinite distances pass (nothing
/// bounds growth). Returns a raisable pair otherwise. Requires d in Met(X).
PairWitness pair_maximal(const WeightStructure& d);

/// Dual check: every pair with positive distance is pinned from below by
/// some third point z with |d(x,z) - d(y,z)| = d(x,y); zero-distance pairs
/// pass vacuously. Returns a lowerable pair otherwise. Requires d in Met(X).
PairWitness pair_minimal(const WeightStructure& d);

struct MengerWitness {
  bool pass = true;
  Eigen::Index x = -1;
  Eigen::Index y = -1;
  std::optional<ExtValue> radius;  // a split with no intermediate point
};

/// Menger convexity on a finite carrier degenerates: any pair at positive
/// distance L fails, because (0, L) holds infinitely many splits and only
/// finitely many points. Returns such a pair with a concrete unrealized
/// split r. Requires d in Met(X).
MengerWitness menger_convex(const WeightStructure& d);

/// Extension-point property: every pair {x, y} admits a third point z
/// with d(y,z) = d(x,y) + d(x,z) in one of the two orientations. Third
/// points with both legs infinite do not count (the equation then holds
/// by absorption without pinning anything). Requires d in Met(X).
PairWitness menger_star(const WeightStructure& d);

/// Some metric structure strictly between lo and hi (Met(X) has no
/// covers): one differing cell is moved to an intermediate value and the
/// triangle closure restores membership. Requires lo < hi, both in Met(X).
WeightStructure strict_between(const WeightStructure& lo, const WeightStructure& hi);

}  // namespace metlat
