#include "metlat/weight.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace metlat {

std::string to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view token) {
  if (token == "left") return Side::Left;
  if (token == "right") return Side::Right;
  throw std::invalid_argument("side must be 'left' or 'right'");
}

std::string to_string(const AxiomSet& axioms) {
  std::string out;
  auto emit = [&out](bool flag, const char* name) {
    if (!flag) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  emit(axioms.zero, "zero");
  emit(axioms.sep, "sep");
  emit(axioms.sym, "sym");
  emit(axioms.tri, "tri");
  return out.empty() ? "none" : out;
}

AxiomSet parse_axiom_set(std::string_view text) {
  AxiomSet axioms;
  if (text == "none" || text.empty()) return axioms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    if (item == "zero") {
      axioms.zero = true;
    } else if (item == "sep") {
      axioms.sep = true;
    } else if (item == "sym") {
      axioms.sym = true;
    } else if (item == "tri") {
      axioms.tri = true;
    } else {
      throw std::invalid_argument("unknown axiom '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return axioms;
}

WeightStructure::WeightStructure(std::vector<std::string> labels, WeightMatrix entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const auto n = static_cast<Eigen::Index>(labels_.size());
  if (n < 1) throw std::invalid_argument("a weight structure needs at least one point");
  if (entries_.rows() != n || entries_.cols() != n)
    throw std::invalid_argument("entry matrix must be square and match the label count");
  std::unordered_set<std::string_view> seen;
  for (const std::string& label : labels_) {
    if (label.empty()) throw std::invalid_argument("empty point label");
    if (label.find_first_of(", \t\r\n") != std::string::npos)
      throw std::invalid_argument("label '" + label + "' contains a comma or whitespace");
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate point label '" + label + "'");
  }
}

bool WeightStructure::same_shape(const WeightStructure& other) const {
  return labels_ == other.labels_;
}

WeightStructure WeightStructure::with_matrix(WeightMatrix entries) const {
  return WeightStructure(labels_, std::move(entries));
}

Eigen::Index WeightStructure::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Eigen::Index>(i);
  return -1;
}

bool operator==(const WeightStructure& a, const WeightStructure& b) {
  return a.labels_ == b.labels_ && a.entries_ == b.entries_;
}

std::vector<std::string> default_labels(Eigen::Index n) {
  static const char* kShort[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    labels.push_back(n <= 6 ? kShort[i] : "p" + std::to_string(i));
  return labels;
}

WeightStructure zero_structure(std::vector<std::string> labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  return WeightStructure(std::move(labels), WeightMatrix::Constant(n, n, ExtValue(0)));
}

WeightStructure top_structure(std::vector<std::string> labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  return WeightStructure(std::move(labels),
                         WeightMatrix::Constant(n, n, ExtValue::infinity()));
}

WeightStructure top_metric(std::vector<std::string> labels) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  WeightMatrix m = WeightMatrix::Constant(n, n, ExtValue::infinity());
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = ExtValue(0);
  return WeightStructure(std::move(labels), std::move(m));
}

AxiomSet check_axioms(const WeightStructure& d) {
  const Eigen::Index n = d.size();
  AxiomSet axioms{true, true, true, true};
  for (Eigen::Index i = 0; i < n && axioms.zero; ++i)
    axioms.zero = d(i, i).is_zero();
  for (Eigen::Index i = 0; i < n && axioms.sep; ++i)
    for (Eigen::Index j = i + 1; j < n && axioms.sep; ++j)
      axioms.sep = !(d(i, j).is_zero() && d(j, i).is_zero());
  for (Eigen::Index i = 0; i < n && axioms.sym; ++i)
    for (Eigen::Index j = i + 1; j < n && axioms.sym; ++j)
      axioms.sym = d(i, j) == d(j, i);
  for (Eigen::Index i = 0; i < n && axioms.tri; ++i)
    for (Eigen::Index j = 0; j < n && axioms.tri; ++j)
      for (Eigen::Index k = 0; k < n && axioms.tri; ++k)
        axioms.tri = d(i, j) + d(j, k) >= d(i, k);
  return axioms;
}

namespace {

const WeightStructure& check_family(std::span<const WeightStructure> family,
                                    const char* op) {
  if (family.empty())
    throw std::invalid_argument(std::string(op) + ": empty family has no unit here");
  for (const WeightStructure& d : family)
    if (!d.same_shape(family.front()))
      throw std::invalid_argument(std::string(op) + ": family members differ in shape");
  return family.front();
}

}  // namespace

WeightStructure pointwise_meet(std::span<const WeightStructure> family) {
  const WeightStructure& first = check_family(family, "pointwise_meet");
  WeightMatrix acc = first.matrix();
  for (std::size_t i = 1; i < family.size(); ++i)
    acc = acc.cwiseMin(family[i].matrix());
  return first.with_matrix(std::move(acc));
}

WeightStructure pointwise_join(std::span<const WeightStructure> family) {
  const WeightStructure& first = check_family(family, "pointwise_join");
  WeightMatrix acc = first.matrix();
  for (std::size_t i = 1; i < family.size(); ++i)
    acc = acc.cwiseMax(family[i].matrix());
  return first.with_matrix(std::move(acc));
}

WeightStructure pointwise_meet(const WeightStructure& a, const WeightStructure& b) {
  const WeightStructure family[] = {a, b};
  return pointwise_meet(std::span<const WeightStructure>(family));
}

WeightStructure pointwise_join(const WeightStructure& a, const WeightStructure& b) {
  const WeightStructure family[] = {a, b};
  return pointwise_join(std::span<const WeightStructure>(family));
}

WeightStructure dual(const WeightStructure& d) {
  return d.with_matrix(d.matrix().transpose());
}

WeightStructure scale(const WeightStructure& d, const Rational& factor) {
  if (factor <= 0) throw std::invalid_argument("scale: factor must be positive");
  return d.with_matrix(
      d.matrix().unaryExpr([&factor](const ExtValue& v) { return scaled(v, factor); }));
}

bool leq(const WeightStructure& a, const WeightStructure& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("leq: shape mismatch");
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < a.size(); ++j)
      if (!(a(i, j) <= b(i, j))) return false;
  return true;
}

bool lt(const WeightStructure& a, const WeightStructure& b) {
  return leq(a, b) && a != b;
}

Ball ball(const WeightStructure& d, Eigen::Index center, const ExtValue& radius,
          Side side) {
  if (center < 0 || center >= d.size())
    throw std::invalid_argument("ball: center out of range");
  if (d.size() > 64) throw std::invalid_argument("ball: point set exceeds 64 points");
  if (radius.is_infinite() || radius.is_zero())
    throw std::invalid_argument("ball: radius must be finite and positive");
  PointSet members = 0;
  for (Eigen::Index y = 0; y < d.size(); ++y) {
    const ExtValue& w = side == Side::Left ? d(center, y) : d(y, center);
    if (w < radius) members |= PointSet{1} << y;
  }
  return Ball{center, radius, side, members};
}

}  // namespace metlat
