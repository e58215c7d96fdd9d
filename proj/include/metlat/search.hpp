#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metlat/weight.hpp"

namespace metlat {

/// {0, 1/2, 1, 3/2, 2, inf}: exercises both lattice ends.
std::vector<ExtValue> default_value_pool();

/// Draws a structure over the pool and enforces the requested axioms by
/// construction: zero forces the diagonal, sym mirrors the upper triangle,
/// tri applies the triangle relaxation after the draw, sep redraws zero
/// off-diagonal pairs. Deterministic for a fixed seed. Throws when the
/// pool cannot satisfy the request (e.g. sep with an all-zero pool).
WeightStructure random_weight(Eigen::Index n, const AxiomSet& axioms,
                              std::span<const ExtValue> pool, std::uint64_t seed);
WeightStructure random_weight(std::vector<std::string> labels, const AxiomSet& axioms,
                              std::span<const ExtValue> pool, std::uint64_t seed);

/// All structures over the pool satisfying the axioms, ordered by the
/// number of distinct pool values they use (small witnesses surface
/// first). Throws when the enumeration would exceed `limit` candidates.
std::vector<WeightStructure> enumerate_weights(Eigen::Index n, const AxiomSet& axioms,
                                               std::span<const ExtValue> pool,
                                               std::size_t limit = 2'000'000);

enum class Property {
  SigmaJoinPreservesMeet,
  DeltaStarPreservesJoin,
  TriMeetClosed,
  PsiOrderPreserving,
  PsiBinaryJoin,
  PhiBinaryMeet,
  PhiOrderPreserving,
  FiberJoinStability
};

/// Wire names: sigma_join_preserves_meet, delta_star_preserves_join,
/// tri_meet_closed, psi_order_preserving, psi_binary_join, phi_binary_meet,
/// phi_order_preserving, fiber_join_stability.
std::string to_string(Property property);
Property parse_property(std::string_view token);

/// The axiom context a property is probed over when none is given.
AxiomSet default_context(Property property);

struct PropertySpec {
  Property property;
  std::optional<AxiomSet> context;  // default_context(property) when absent
  Eigen::Index n = 3;
  std::vector<ExtValue> pool;  // empty = default pool
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
};

struct SearchWitness {
  std::vector<WeightStructure> inputs;
  std::string lhs;
  std::string rhs;
  std::uint64_t trial = 0;
};

struct SearchReport {
  std::string property;
  AxiomSet context;
  std::uint64_t trials_executed = 0;
  bool exhaustive = false;
  std::vector<std::size_t> enumerated;
  std::string outcome;  // "none-found" | "witness" | "pass" | "fail"
  std::optional<SearchWitness> witness;
  std::string note;
  double elapsed_seconds = 0.0;
};

/// Seeded randomized search (exhaustive over the pool at n == 2) for a
/// counterexample to the named preservation property. Evaluates both sides
/// for any witness it reports.
SearchReport find_counterexample(const PropertySpec& spec);

/// Fixed, named scenarios with asserted verdicts. Names:
/// sigma_meet_gap, delta_join_gap, tri_meet_gap, kelly_join,
/// trivial_topology_limit, ws_not_closed_limit, embedding_join_gap,
/// fiber_partition.
SearchReport run_demo(std::string_view name);

std::vector<std::string> demo_names();

}  // namespace metlat
