#pragma once

#include <string>
#include <vector>

#include "metlat/weight.hpp"

namespace metlat {

/// Families of point-set balls explode as 2^n; generation refuses larger
/// carriers unless the caller raises the cap explicitly.
inline constexpr int kDefaultTopologyCap = 16;
/// The literal all-subsets reading of openness is only evaluated up to here.
inline constexpr int kLiteralOpennessCap = 8;

/// A finite family of subsets of an n-point carrier, canonicalized:
/// duplicates removed, sorted by (popcount, numeric value).
class SetCollection {
public:
  SetCollection(int n, std::vector<PointSet> sets);

  int ground_size() const { return n_; }
  const std::vector<PointSet>& sets() const { return sets_; }
  PointSet full_set() const;

  friend bool operator==(const SetCollection& a, const SetCollection& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }

private:
  int n_;
  std::vector<PointSet> sets_;
};

struct CollectionClass {
  bool is_cover = false;
  bool is_base = false;
  bool is_topology = false;
};

/// cover: the union is the carrier. base: a cover where every point in a
/// pairwise intersection sits inside a member contained in it. topology:
/// empty set and carrier present, closed under pairwise union and
/// intersection.
CollectionClass classify(const SetCollection& collection);

/// Open-set family of a topology on an n-point carrier, canonicalized like
/// SetCollection. Always contains the empty set and the carrier.
class FiniteTopology {
public:
  static FiniteTopology from_opens(int n, std::vector<PointSet> opens);

  int ground_size() const { return n_; }
  const std::vector<PointSet>& opens() const { return opens_; }
  bool contains(PointSet open) const;
  PointSet full_set() const;

  /// Every open of `coarser` is open here.
  bool refines(const FiniteTopology& coarser) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }
  friend bool operator!=(const FiniteTopology& a, const FiniteTopology& b) {
    return !(a == b);
  }

private:
  // Trusted constructors for operations whose result is a topology by
  // construction; from_opens validates arbitrary input.
  friend FiniteTopology generate_topology(const SetCollection&, int);
  friend FiniteTopology discrete_topology(int);
  friend FiniteTopology topo_meet(const FiniteTopology&, const FiniteTopology&);
  friend FiniteTopology neighborhood_topology(const WeightStructure&, Side, int);
  FiniteTopology(int n, std::vector<PointSet> opens)
      : n_(n), opens_(std::move(opens)) {}

  int n_;
  std::vector<PointSet> opens_;
};

/// Least topology containing the collection: adjoin the carrier, close
/// under finite intersections, then under arbitrary unions.
FiniteTopology generate_topology(const SetCollection& collection,
                                 int cap = kDefaultTopologyCap);

FiniteTopology discrete_topology(int n);
FiniteTopology indiscrete_topology(int n);

/// Intersection of the open families (the lattice meet in Top(X)).
FiniteTopology topo_meet(const FiniteTopology& a, const FiniteTopology& b);
/// Topology generated by the union of the open families (the lattice
/// join). Enumerates subsets, hence the cap.
FiniteTopology topo_join(const FiniteTopology& a, const FiniteTopology& b,
                         int cap = kDefaultTopologyCap);

/// The radii at which ball membership can change: all distinct positive
/// finite entries plus one value beyond every finite entry.
std::vector<ExtValue> ball_thresholds(const WeightStructure& d);

/// Topology generated by the family of all strict balls of the given side
/// (the cover-generated topology). Requires a zero diagonal. The Right
/// side is the Left side of the dual structure.
FiniteTopology ball_cover_topology(const WeightStructure& d, Side side,
                                   int cap = kDefaultTopologyCap);

/// Topology whose opens contain a ball of the given side around each of
/// their points. Computed from the zero-distance neighbourhoods
/// Z(x) = {y : d(x,y) = 0} (the minimal balls); for carriers up to
/// kLiteralOpennessCap the result is cross-checked against the literal
/// all-subsets definition. Requires a zero diagonal. Coarser than (or
/// equal to) ball_cover_topology; equal when d satisfies the triangle
/// inequality.
FiniteTopology neighborhood_topology(const WeightStructure& d, Side side,
                                     int cap = kDefaultTopologyCap);

/// The literal definition evaluated over all 2^n subsets, with ball
/// existence checked over the threshold radii. Oracle for
/// neighborhood_topology.
FiniteTopology neighborhood_topology_by_definition(const WeightStructure& d, Side side,
                                                   int cap = kLiteralOpennessCap);

/// Text form: header "n=<count>", then one open per line as a bit-string
/// (leftmost character = point 0), lines in canonical order.
std::string to_text(const FiniteTopology& topology);

}  // namespace metlat
