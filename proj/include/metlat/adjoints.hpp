#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metlat/weight.hpp"

namespace metlat {

/// A walk through the point set; at least one edge. Lengths are sums of
/// edge weights, so repeated points never shorten anything.
struct Path {
  std::vector<Eigen::Index> points;
};

/// Sum of the edge weights of the path under d.
ExtValue path_length(const WeightStructure& d, const Path& path);

/// Force the diagonal to zero; off-diagonal entries untouched. Right
/// adjoint to forgetting the zero axiom.
WeightStructure with_zero_diagonal(const WeightStructure& d);

/// Force the diagonal to infinity. Defined on zero-diagonal structures,
/// where it is right adjoint to with_zero_diagonal.
WeightStructure with_inf_diagonal(const WeightStructure& d);

/// Entrywise maximum with the transpose: the least symmetric structure
/// above d. Idempotent.
WeightStructure symmetrize_max(const WeightStructure& d);

/// Entrywise minimum with the transpose: the greatest symmetric structure
/// below d. Idempotent.
WeightStructure symmetrize_min(const WeightStructure& d);

/// Shortest-path closure of a zero-diagonal structure: entry (x, y)
/// becomes the minimum, over all paths from x to y, of the sum of edge
/// weights. The greatest triangle-satisfying structure below d; equals d
/// exactly when d already satisfies the triangle inequality. Preserves
/// symmetry and the zero diagonal.
WeightStructure triangle_closure(const WeightStructure& d);

/// The meet inside Met(X): triangle closure of the entrywise minimum.
/// Every member must satisfy {zero, sym, tri}.
WeightStructure metric_meet(std::span<const WeightStructure> family);
WeightStructure metric_meet(const WeightStructure& a, const WeightStructure& b);

namespace detail {
/// Relaxation fixpoint of the triangle inequality without any diagonal
/// precondition: diagonal entries may drop to cycle weights. This is the
/// greatest triangle-satisfying matrix below the input.
WeightMatrix triangle_relax(const WeightMatrix& m);
}  // namespace detail

enum class AdjunctionKind {
  ZeroStar,     // right adjoint to including zero-diagonal structures
  InfShriek,    // right adjoint to ZeroStar itself
  SigmaShriek,  // left adjoint to including symmetric structures
  SigmaStar,    // right adjoint to including symmetric structures
  DeltaStar,    // right adjoint to including triangle structures
  MetMeet       // greatest-lower-bound law of the meet inside Met(X)
};

/// An adjunction claim together with the axiom context it is taken over.
struct AdjunctionId {
  AdjunctionKind kind;
  AxiomSet over;
};

std::string to_string(AdjunctionKind kind);
AdjunctionKind parse_adjunction_kind(std::string_view token);

struct GaloisOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  Eigen::Index n = 3;
  std::vector<ExtValue> pool;  // empty = default pool {0, 1/2, 1, 3/2, 2, inf}
};

struct GaloisWitness {
  std::vector<WeightStructure> inputs;
  bool lower_holds = false;  // left-hand side of the order equivalence
  bool upper_holds = false;  // right-hand side
  std::string note;
};

struct GaloisReport {
  std::string claim;
  AxiomSet over;
  std::uint64_t checked = 0;
  bool exhaustive = false;
  std::vector<std::size_t> enumerated;  // per-operand counts in exhaustive mode
  std::optional<GaloisWitness> witness;

  bool pass() const { return !witness.has_value(); }
};

/// Checks the defining order-equivalence of the named adjunction on seeded
/// samples (exhaustively over the pool when n == 2 and the pool is small).
/// Deterministic for a fixed seed. Returns the first violating pair, if any.
GaloisReport galois_holds(const AdjunctionId& id, const GaloisOptions& options);

enum class AdjointSide { Left, Right };

/// The raw harness behind galois_holds: checks whether `map`, claimed to be
/// a Left or Right adjoint to the inclusion of W_upper into W_lower,
/// satisfies the corresponding order-equivalence on sampled pairs. Useful
/// for exhibiting witnesses against false adjunction claims.
GaloisReport check_adjoint_claim(
    const std::function<WeightStructure(const WeightStructure&)>& map,
    AdjointSide side, const AxiomSet& lower, const AxiomSet& upper,
    const GaloisOptions& options, std::string claim_name = "claim");

}  // namespace metlat
