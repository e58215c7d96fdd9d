#include "metlat/topology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace metlat {

namespace {

bool canonical_less(PointSet a, PointSet b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

std::vector<PointSet> canonicalize(int n, std::vector<PointSet> sets) {
  if (n < 1) throw std::invalid_argument("carrier needs at least one point");
  if (n > 64) throw std::invalid_argument("carrier exceeds 64 points");
  const PointSet full = n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
  for (PointSet s : sets)
    if ((s & ~full) != 0)
      throw std::invalid_argument("set uses points outside the carrier");
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

PointSet full_mask(int n) { return n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

void check_cap(const char* op, int n, int cap) {
  if (n > cap)
    throw std::invalid_argument(std::string(op) + ": carrier of " + std::to_string(n) +
                                " points exceeds the cap of " + std::to_string(cap));
}

}  // namespace

SetCollection::SetCollection(int n, std::vector<PointSet> sets)
    : n_(n), sets_(canonicalize(n, std::move(sets))) {}

PointSet SetCollection::full_set() const { return full_mask(n_); }

CollectionClass classify(const SetCollection& collection) {
  const PointSet full = collection.full_set();
  const std::vector<PointSet>& sets = collection.sets();

  CollectionClass result;
  PointSet covered = 0;
  for (PointSet s : sets) covered |= s;
  result.is_cover = covered == full;

  result.is_base = result.is_cover;
  for (std::size_t a = 0; a < sets.size() && result.is_base; ++a)
    for (std::size_t b = a; b < sets.size() && result.is_base; ++b) {
      const PointSet inter = sets[a] & sets[b];
      PointSet witnessed = 0;
      for (PointSet c : sets)
        if ((c & ~inter) == 0) witnessed |= c;
      result.is_base = (inter & ~witnessed) == 0;
    }

  auto has = [&sets](PointSet s) {
    return std::binary_search(sets.begin(), sets.end(), s, canonical_less);
  };
  result.is_topology = has(0) && has(full);
  for (std::size_t a = 0; a < sets.size() && result.is_topology; ++a)
    for (std::size_t b = a + 1; b < sets.size() && result.is_topology; ++b)
      result.is_topology = has(sets[a] | sets[b]) && has(sets[a] & sets[b]);
  return result;
}

FiniteTopology FiniteTopology::from_opens(int n, std::vector<PointSet> opens) {
  SetCollection canonical(n, std::move(opens));
  if (!classify(canonical).is_topology)
    throw std::invalid_argument("open family is not a topology");
  return FiniteTopology(n, canonical.sets());
}

bool FiniteTopology::contains(PointSet open) const {
  return std::binary_search(opens_.begin(), opens_.end(), open, canonical_less);
}

PointSet FiniteTopology::full_set() const { return full_mask(n_); }

bool FiniteTopology::refines(const FiniteTopology& coarser) const {
  if (n_ != coarser.n_) throw std::invalid_argument("refines: carrier mismatch");
  for (PointSet open : coarser.opens_)
    if (!contains(open)) return false;
  return true;
}

FiniteTopology generate_topology(const SetCollection& collection, int cap) {
  const int n = collection.ground_size();
  check_cap("generate_topology", n, cap);
  const PointSet full = collection.full_set();

  // Minimal neighbourhood of each point: the intersection of every
  // generator containing it (the carrier always does). A subset is open in
  // the generated topology exactly when it contains the minimal
  // neighbourhood of each of its points.
  std::vector<PointSet> minimal(static_cast<std::size_t>(n), full);
  for (int x = 0; x < n; ++x)
    for (PointSet s : collection.sets())
      if (s & (PointSet{1} << x)) minimal[static_cast<std::size_t>(x)] &= s;

  std::vector<PointSet> opens;
  const PointSet count = full;
  for (PointSet candidate = 0;; ++candidate) {
    bool open = true;
    PointSet rest = candidate;
    while (rest) {
      const int x = std::countr_zero(rest);
      rest &= rest - 1;
      if (minimal[static_cast<std::size_t>(x)] & ~candidate) {
        open = false;
        break;
      }
    }
    if (open) opens.push_back(candidate);
    if (candidate == count) break;
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology discrete_topology(int n) {
  check_cap("discrete_topology", n, kDefaultTopologyCap);
  std::vector<PointSet> opens;
  const PointSet full = full_mask(n);
  for (PointSet s = 0;; ++s) {
    opens.push_back(s);
    if (s == full) break;
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology indiscrete_topology(int n) {
  if (n > 64) throw std::invalid_argument("carrier exceeds 64 points");
  return FiniteTopology::from_opens(n, {0, full_mask(n)});
}

FiniteTopology topo_meet(const FiniteTopology& a, const FiniteTopology& b) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("topo_meet: carrier mismatch");
  std::vector<PointSet> common;
  std::set_intersection(a.opens().begin(), a.opens().end(), b.opens().begin(),
                        b.opens().end(), std::back_inserter(common), canonical_less);
  return FiniteTopology(a.ground_size(), std::move(common));
}

FiniteTopology topo_join(const FiniteTopology& a, const FiniteTopology& b, int cap) {
  if (a.ground_size() != b.ground_size())
    throw std::invalid_argument("topo_join: carrier mismatch");
  std::vector<PointSet> all = a.opens();
  all.insert(all.end(), b.opens().begin(), b.opens().end());
  return generate_topology(SetCollection(a.ground_size(), std::move(all)), cap);
}

std::vector<ExtValue> ball_thresholds(const WeightStructure& d) {
  std::vector<ExtValue> values;
  ExtValue max_finite(0);
  for (Eigen::Index i = 0; i < d.size(); ++i)
    for (Eigen::Index j = 0; j < d.size(); ++j) {
      const ExtValue& v = d(i, j);
      if (v.is_infinite()) continue;
      if (max_finite < v) max_finite = v;
      if (!v.is_zero()) values.push_back(v);
    }
  values.push_back(max_finite + ExtValue(1));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

namespace {

void require_zero_diagonal(const WeightStructure& d, const char* op) {
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (!d(i, i).is_zero())
      throw std::invalid_argument(std::string(op) + ": requires a zero diagonal");
}

std::vector<PointSet> all_balls(const WeightStructure& d) {
  std::vector<PointSet> balls;
  const std::vector<ExtValue> thresholds = ball_thresholds(d);
  for (Eigen::Index x = 0; x < d.size(); ++x)
    for (const ExtValue& eps : thresholds)
      balls.push_back(ball(d, x, eps, Side::Left).members);
  return balls;
}

/// Zero-distance neighbourhood of x: the smallest left ball around x.
PointSet zero_set(const WeightStructure& d, Eigen::Index x) {
  PointSet z = 0;
  for (Eigen::Index y = 0; y < d.size(); ++y)
    if (d(x, y).is_zero()) z |= PointSet{1} << y;
  return z;
}

}  // namespace

FiniteTopology ball_cover_topology(const WeightStructure& d, Side side, int cap) {
  if (side == Side::Right) return ball_cover_topology(dual(d), Side::Left, cap);
  require_zero_diagonal(d, "ball_cover_topology");
  const int n = static_cast<int>(d.size());
  check_cap("ball_cover_topology", n, cap);
  return generate_topology(SetCollection(n, all_balls(d)), cap);
}

FiniteTopology neighborhood_topology(const WeightStructure& d, Side side, int cap) {
  if (side == Side::Right) return neighborhood_topology(dual(d), Side::Left, cap);
  require_zero_diagonal(d, "neighborhood_topology");
  const int n = static_cast<int>(d.size());
  check_cap("neighborhood_topology", n, cap);

  std::vector<PointSet> minimal(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) minimal[static_cast<std::size_t>(x)] = zero_set(d, x);

  std::vector<PointSet> opens;
  const PointSet full = full_mask(n);
  for (PointSet candidate = 0;; ++candidate) {
    bool open = true;
    PointSet rest = candidate;
    while (rest) {
      const int x = std::countr_zero(rest);
      rest &= rest - 1;
      if (minimal[static_cast<std::size_t>(x)] & ~candidate) {
        open = false;
        break;
      }
    }
    if (open) opens.push_back(candidate);
    if (candidate == full) break;
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  FiniteTopology result(n, std::move(opens));

  if (n <= kLiteralOpennessCap &&
      result != neighborhood_topology_by_definition(d, Side::Left)) {
    throw std::logic_error(
        "neighborhood_topology: zero-set characterization disagrees with the "
        "literal definition");
  }
  return result;
}

FiniteTopology neighborhood_topology_by_definition(const WeightStructure& d, Side side,
                                                   int cap) {
  if (side == Side::Right)
    return neighborhood_topology_by_definition(dual(d), Side::Left, cap);
  require_zero_diagonal(d, "neighborhood_topology_by_definition");
  const int n = static_cast<int>(d.size());
  check_cap("neighborhood_topology_by_definition", n, cap);

  const std::vector<ExtValue> thresholds = ball_thresholds(d);
  std::vector<PointSet> opens;
  const PointSet full = full_mask(n);
  for (PointSet candidate = 0;; ++candidate) {
    bool open = true;
    PointSet rest = candidate;
    while (rest && open) {
      const Eigen::Index x = std::countr_zero(rest);
      rest &= rest - 1;
      bool has_ball = false;
      for (const ExtValue& eps : thresholds) {
        if ((ball(d, x, eps, Side::Left).members & ~candidate) == 0) {
          has_ball = true;
          break;
        }
      }
      open = has_ball;
    }
    if (open) opens.push_back(candidate);
    if (candidate == full) break;
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  return FiniteTopology::from_opens(n, std::move(opens));
}

std::string to_text(const FiniteTopology& topology) {
  std::string out = "n=" + std::to_string(topology.ground_size()) + "\n";
  for (PointSet open : topology.opens()) {
    for (int x = 0; x < topology.ground_size(); ++x)
      out += (open & (PointSet{1} << x)) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace metlat
