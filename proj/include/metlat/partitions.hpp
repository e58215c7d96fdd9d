#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metlat/weight.hpp"

namespace metlat {

/// An equivalence relation on an n-point carrier, stored as a block
/// assignment with blocks numbered by first occurrence (so equality is
/// structural).
class Partition {
public:
  explicit Partition(std::vector<int> block_of);
  static Partition singletons(int n);
  static Partition single_block(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int i) const { return block_of_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& assignment() const { return block_of_; }
  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
  std::vector<int> block_of_;
  int blocks_ = 0;
};

/// Common refinement: i ~ j exactly when both arguments relate them.
Partition part_meet(const Partition& a, const Partition& b);
/// Finest common coarsening: transitive closure of the union.
Partition part_join(const Partition& a, const Partition& b);

/// a <= b in Eq(X): every block of a sits inside a block of b.
bool refines(const Partition& a, const Partition& b);

/// Every partition of an n-point carrier (Bell(n) of them; keep n small).
std::vector<Partition> all_partitions(int n);

/// The map into Met(X): zero diagonal, alpha on distinct equivalent pairs,
/// 1 on distinct non-equivalent pairs. Requires 1 < alpha < 2 so every
/// two-edge path (>= 2) beats every entry and the image is a metric
/// structure whose ball topology is discrete.
WeightStructure embed_partition(const Partition& p, std::vector<std::string> labels,
                                const Rational& alpha);

/// The 0/infinity structure of the partition: 0 inside blocks, infinity
/// across. Generates the partition topology.
WeightStructure partition_structure(const Partition& p, std::vector<std::string> labels);

struct EmbeddingViolation {
  std::size_t first = 0;   // indices into the verified family
  std::size_t second = 0;
  std::string point_a;
  std::string point_b;
  ExtValue embedded;   // entry of the embedded lattice operation
  ExtValue pointwise;  // entry of the operation applied to the images
};

struct EmbeddingReport {
  bool meet_preserved = true;
  std::optional<EmbeddingViolation> meet_witness;
  bool join_preserved = true;
  std::optional<EmbeddingViolation> join_witness;
  bool injective = true;
  bool topology_is_discrete = true;
};

/// Checks, over all pairs from the family, that embedding commutes with
/// meet (against both the pointwise and the Met(X) meet, equal here) and
/// with join (pointwise, which is the Met(X) join); plus injectivity and
/// that every image generates the discrete topology. Join failures are
/// reported, not asserted: the union of two relations need not be
/// transitive.
EmbeddingReport verify_embedding(std::span<const Partition> parts,
                                 std::vector<std::string> labels,
                                 const Rational& alpha);

}  // namespace metlat
