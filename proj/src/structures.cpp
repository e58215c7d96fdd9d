#include "metlat/structures.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "metlat/adjoints.hpp"

namespace metlat {

namespace {

void require_metric(const WeightStructure& d, const char* op) {
  if (!check_axioms(d).contains(AxiomSet::metric()))
    throw std::invalid_argument(std::string(op) + ": argument must satisfy {zero, sym, tri}");
}

WeightStructure symmetric_pair_structure(std::vector<std::string> labels,
                                         Eigen::Index x, Eigen::Index y,
                                         const ExtValue& value) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  WeightMatrix m = WeightMatrix::Constant(n, n, ExtValue::infinity());
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = ExtValue(0);
  m(x, y) = value;
  m(y, x) = value;
  return WeightStructure(std::move(labels), std::move(m));
}

}  // namespace

WeightStructure pseudo_anti_atom(std::vector<std::string> labels, Eigen::Index x,
                                 Eigen::Index y, const ExtValue& alpha) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  if (x == y) throw std::invalid_argument("pseudo_anti_atom: points must be distinct");
  if (x < 0 || y < 0 || x >= n || y >= n)
    throw std::invalid_argument("pseudo_anti_atom: point out of range");
  if (alpha.is_zero())
    throw std::invalid_argument("pseudo_anti_atom: weight must be positive");
  return symmetric_pair_structure(std::move(labels), x, y, alpha);
}

CellCheck decompose_check(const WeightStructure& d) {
  require_metric(d, "decompose_check");
  const Eigen::Index n = d.size();
  if (n == 1) return {};

  std::vector<WeightStructure> atoms;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      atoms.push_back(symmetric_pair_structure(d.labels(), i, j, d(i, j)));

  const WeightStructure rebuilt = metric_meet(atoms);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (rebuilt(i, j) != d(i, j)) return {false, i, j};
  return {};
}

std::optional<PairStepWitness> elementary_step(const WeightStructure& d,
                                               const WeightStructure& m,
                                               int max_points) {
  require_metric(d, "elementary_step");
  require_metric(m, "elementary_step");
  if (!d.same_shape(m)) throw std::invalid_argument("elementary_step: shape mismatch");
  if (d.size() > 64) throw std::invalid_argument("elementary_step: carrier exceeds 64");
  if (!lt(d, m)) return std::nullopt;

  PairStepWitness witness;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    for (Eigen::Index j = 0; j < d.size(); ++j)
      if (d(i, j) != m(i, j)) {
        witness.changed.emplace_back(i, j);
        witness.support |= (PointSet{1} << i) | (PointSet{1} << j);
      }
  if (std::popcount(witness.support) > max_points) return std::nullopt;
  return witness;
}

PairWitness pair_maximal(const WeightStructure& d) {
  require_metric(d, "pair_maximal");
  const Eigen::Index n = d.size();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = x + 1; y < n; ++y) {
      if (d(x, y).is_infinite()) continue;
      if (n == 2) return {false, x, y};
      ExtValue best = ExtValue::infinity();
      for (Eigen::Index z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        best = min(best, d(x, z) + d(z, y));
      }
      if (d(x, y) != best) return {false, x, y};
    }
  return {};
}

namespace {

// |a - b| on [0, inf]: two infinite distances impose no bound on a pair
// being lowered, one infinite side pins it at infinity.
ExtValue lower_bound_gap(const ExtValue& a, const ExtValue& b) {
  if (a.is_infinite() && b.is_infinite()) return ExtValue(0);
  if (a.is_infinite() || b.is_infinite()) return ExtValue::infinity();
  return a < b ? ExtValue(b.value() - a.value()) : ExtValue(a.value() - b.value());
}

}  // namespace

PairWitness pair_minimal(const WeightStructure& d) {
  require_metric(d, "pair_minimal");
  const Eigen::Index n = d.size();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = x + 1; y < n; ++y) {
      if (d(x, y).is_zero()) continue;
      bool pinned = false;
      for (Eigen::Index z = 0; z < n && !pinned; ++z) {
        if (z == x || z == y) continue;
        pinned = lower_bound_gap(d(x, z), d(y, z)) == d(x, y);
      }
      if (!pinned) return {false, x, y};
    }
  return {};
}

MengerWitness menger_convex(const WeightStructure& d) {
  require_metric(d, "menger_convex");
  const Eigen::Index n = d.size();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = x + 1; y < n; ++y) {
      const ExtValue& length = d(x, y);
      if (length.is_zero()) continue;

      // Splits r in (0, length) form a continuum; distances from x are
      // finitely many values, so a gap midpoint below the first attained
      // distance (or between 0 and the length) is never realized.
      std::vector<ExtValue> attained;
      attained.emplace_back(0);
      for (Eigen::Index p = 0; p < n; ++p) {
        const ExtValue& v = d(x, p);
        if (!v.is_infinite() && !v.is_zero() && v < length) attained.push_back(v);
      }
      if (length.is_infinite()) {
        attained.push_back(*std::max_element(attained.begin(), attained.end()) +
                           ExtValue(2));
      } else {
        attained.push_back(length);
      }
      std::sort(attained.begin(), attained.end());
      ExtValue r = midpoint(attained[0], attained[1]);
      return {false, x, y, r};
    }
  return {};
}

PairWitness menger_star(const WeightStructure& d) {
  require_metric(d, "menger_star");
  const Eigen::Index n = d.size();
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = x + 1; y < n; ++y) {
      bool extended = false;
      for (Eigen::Index z = 0; z < n && !extended; ++z) {
        if (z == x || z == y) continue;
        // A z with both legs infinite satisfies the equation by absorption
        // but pins nothing; it does not count as an extension point.
        if (d(x, z).is_infinite() && d(y, z).is_infinite()) continue;
        extended = d(y, z) == d(x, y) + d(x, z) || d(x, z) == d(x, y) + d(y, z);
      }
      if (!extended) return {false, x, y};
    }
  return {};
}

WeightStructure strict_between(const WeightStructure& lo, const WeightStructure& hi) {
  require_metric(lo, "strict_between");
  require_metric(hi, "strict_between");
  if (!lo.same_shape(hi) || !lt(lo, hi))
    throw std::invalid_argument("strict_between: requires lo < hi in Met(X)");

  for (Eigen::Index i = 0; i < lo.size(); ++i)
    for (Eigen::Index j = i + 1; j < lo.size(); ++j) {
      if (lo(i, j) == hi(i, j)) continue;
      const ExtValue target = hi(i, j).is_infinite() ? lo(i, j) + ExtValue(1)
                                                     : midpoint(lo(i, j), hi(i, j));
      WeightMatrix m = hi.matrix();
      m(i, j) = target;
      m(j, i) = target;
      WeightStructure candidate = triangle_closure(hi.with_matrix(std::move(m)));
      if (lt(lo, candidate) && lt(candidate, hi)) return candidate;
    }
  throw std::logic_error("strict_between: no strictly intermediate structure found");
}

}  // namespace metlat
