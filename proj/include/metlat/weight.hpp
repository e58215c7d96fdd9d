#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metlat/ext_value.hpp"

namespace metlat {

/// Subset of the carrier encoded over the label order: bit i = point i.
using PointSet = std::uint64_t;

enum class Side { Left, Right };

std::string to_string(Side side);
Side parse_side(std::string_view token);

/// A subset of the four axioms a weight structure may satisfy:
/// zero: zero diagonal; sep: no two distinct points at mutual distance 0;
/// sym: equal to its transpose; tri: triangle inequality on all triples.
struct AxiomSet {
  bool zero = false;
  bool sep = false;
  bool sym = false;
  bool tri = false;

  static AxiomSet none() { return {}; }
  static AxiomSet all() { return {true, true, true, true}; }
  /// {zero, sym, tri}: the membership test for metric structures.
  static AxiomSet metric() { return {true, false, true, true}; }

  bool contains(const AxiomSet& other) const {
    return (zero || !other.zero) && (sep || !other.sep) && (sym || !other.sym) &&
           (tri || !other.tri);
  }

  AxiomSet united(const AxiomSet& other) const {
    return {zero || other.zero, sep || other.sep, sym || other.sym, tri || other.tri};
  }

  friend bool operator==(const AxiomSet& a, const AxiomSet& b) {
    return a.zero == b.zero && a.sep == b.sep && a.sym == b.sym && a.tri == b.tri;
  }
  friend bool operator!=(const AxiomSet& a, const AxiomSet& b) { return !(a == b); }
};

/// "zero,sep,sym,tri" in that fixed order; "none" for the empty set.
std::string to_string(const AxiomSet& axioms);
/// Parses the comma list produced by to_string (and "none").
AxiomSet parse_axiom_set(std::string_view text);

using WeightMatrix = Eigen::Matrix<ExtValue, Eigen::Dynamic, Eigen::Dynamic>;

/// A distance assignment on a finite labelled point set: an n-by-n matrix
/// of values in [0, inf] with no constraints beyond shape. Entry (i, j) is
/// the weight from point i to point j. Immutable after construction.
class WeightStructure {
public:
  WeightStructure(std::vector<std::string> labels, WeightMatrix entries);

  Eigen::Index size() const { return entries_.rows(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const WeightMatrix& matrix() const { return entries_; }
  const ExtValue& operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_(i, j);
  }

  /// Same point count and identical label sequence.
  bool same_shape(const WeightStructure& other) const;

  /// New structure over the same labels.
  WeightStructure with_matrix(WeightMatrix entries) const;

  Eigen::Index index_of(std::string_view label) const;  // -1 when absent

  friend bool operator==(const WeightStructure& a, const WeightStructure& b);
  friend bool operator!=(const WeightStructure& a, const WeightStructure& b) {
    return !(a == b);
  }

private:
  std::vector<std::string> labels_;
  WeightMatrix entries_;
};

/// x, y, z, u, v, w for n <= 6, else p0, p1, ...
std::vector<std::string> default_labels(Eigen::Index n);

/// The constant-zero structure (the bottom of the ambient lattice).
WeightStructure zero_structure(std::vector<std::string> labels);
/// All entries infinite (the top of the ambient lattice).
WeightStructure top_structure(std::vector<std::string> labels);
/// Zero diagonal, infinity elsewhere: the top metric structure.
WeightStructure top_metric(std::vector<std::string> labels);

/// The maximal axiom set the structure satisfies. sep is checked
/// independently of zero.
AxiomSet check_axioms(const WeightStructure& d);

/// Entrywise minimum / maximum over a non-empty family of identically
/// shaped structures. An empty family is rejected: the correct unit would
/// depend on the ambient axiom class.
WeightStructure pointwise_meet(std::span<const WeightStructure> family);
WeightStructure pointwise_join(std::span<const WeightStructure> family);
WeightStructure pointwise_meet(const WeightStructure& a, const WeightStructure& b);
WeightStructure pointwise_join(const WeightStructure& a, const WeightStructure& b);

/// Transpose. An involutive order isomorphism of the ambient lattice.
WeightStructure dual(const WeightStructure& d);

/// Multiply every finite entry by a positive rational factor.
WeightStructure scale(const WeightStructure& d, const Rational& factor);

/// Entrywise order; both require identical shape.
bool leq(const WeightStructure& a, const WeightStructure& b);
bool lt(const WeightStructure& a, const WeightStructure& b);

struct Ball {
  Eigen::Index center;
  ExtValue radius;
  Side side;
  PointSet members;
};

/// Strict ball: side Left collects {y : d(center,y) < radius}, side Right
/// {y : d(y,center) < radius}. The radius must be finite and positive.
Ball ball(const WeightStructure& d, Eigen::Index center, const ExtValue& radius,
          Side side);

}  // namespace metlat
