#include "metlat/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "metlat/adjoints.hpp"
#include "metlat/topology.hpp"

namespace metlat {

namespace {

std::vector<int> canonical_blocks(std::vector<int> block_of) {
  std::map<int, int> renumber;
  for (int& b : block_of) {
    auto [it, inserted] = renumber.emplace(b, static_cast<int>(renumber.size()));
    b = it->second;
  }
  return block_of;
}

void check_alpha(const Rational& alpha) {
  if (alpha <= 1 || alpha >= 2)
    throw std::invalid_argument("embedding weight alpha must satisfy 1 < alpha < 2");
}

}  // namespace

Partition::Partition(std::vector<int> block_of)
    : block_of_(canonical_blocks(std::move(block_of))) {
  if (block_of_.empty()) throw std::invalid_argument("partition of an empty carrier");
  blocks_ = 1 + *std::max_element(block_of_.begin(), block_of_.end());
}

Partition Partition::singletons(int n) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::single_block(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  int id = 0;
  for (const std::vector<int>& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty partition block");
    for (int i : block) {
      if (i < 0 || i >= n) throw std::invalid_argument("block member out of range");
      if (block_of[static_cast<std::size_t>(i)] != -1)
        throw std::invalid_argument("point appears in two blocks");
      block_of[static_cast<std::size_t>(i)] = id;
    }
    ++id;
  }
  for (int b : block_of)
    if (b == -1) throw std::invalid_argument("point missing from every block");
  return Partition(std::move(block_of));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (int i = 0; i < size(); ++i)
    out[static_cast<std::size_t>(block_of(i))].push_back(i);
  return out;
}

Partition part_meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("part_meet: size mismatch");
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> block_of(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    auto key = std::make_pair(a.block_of(i), b.block_of(i));
    auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
    block_of[static_cast<std::size_t>(i)] = it->second;
  }
  return Partition(std::move(block_of));
}

Partition part_join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("part_join: size mismatch");
  std::vector<int> parent(static_cast<std::size_t>(a.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  auto unite = [&](int i, int j) { parent[static_cast<std::size_t>(find(i))] = find(j); };
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.same_block(i, j) || b.same_block(i, j)) unite(i, j);
  std::vector<int> block_of(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) block_of[static_cast<std::size_t>(i)] = find(i);
  return Partition(std::move(block_of));
}

bool refines(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("refines: size mismatch");
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.same_block(i, j) && !b.same_block(i, j)) return false;
  return true;
}

std::vector<Partition> all_partitions(int n) {
  if (n < 1) throw std::invalid_argument("carrier needs at least one point");
  std::vector<Partition> out;
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  // Restricted growth strings: entry i may open one block beyond the
  // maximum used so far.
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      out.emplace_back(assignment);
      return;
    }
    for (int b = 0; b <= max_used + 1 && b < n; ++b) {
      assignment[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  assignment[0] = 0;
  rec(rec, 1, 0);
  return out;
}

WeightStructure embed_partition(const Partition& p, std::vector<std::string> labels,
                                const Rational& alpha) {
  check_alpha(alpha);
  if (static_cast<int>(labels.size()) != p.size())
    throw std::invalid_argument("embed_partition: label count mismatch");
  const Eigen::Index n = p.size();
  WeightMatrix m(n, n);
  const ExtValue far(1);
  const ExtValue near{alpha};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = i == j ? ExtValue(0)
                       : (p.same_block(static_cast<int>(i), static_cast<int>(j)) ? near
                                                                                 : far);
  return WeightStructure(std::move(labels), std::move(m));
}

WeightStructure partition_structure(const Partition& p,
                                    std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != p.size())
    throw std::invalid_argument("partition_structure: label count mismatch");
  const Eigen::Index n = p.size();
  WeightMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = p.same_block(static_cast<int>(i), static_cast<int>(j))
                    ? ExtValue(0)
                    : ExtValue::infinity();
  return WeightStructure(std::move(labels), std::move(m));
}

namespace {

std::optional<EmbeddingViolation> first_difference(std::size_t a, std::size_t b,
                                                   const WeightStructure& embedded,
                                                   const WeightStructure& pointwise) {
  for (Eigen::Index i = 0; i < embedded.size(); ++i)
    for (Eigen::Index j = 0; j < embedded.size(); ++j)
      if (embedded(i, j) != pointwise(i, j))
        return EmbeddingViolation{a,
                                  b,
                                  embedded.labels()[static_cast<std::size_t>(i)],
                                  embedded.labels()[static_cast<std::size_t>(j)],
                                  embedded(i, j),
                                  pointwise(i, j)};
  return std::nullopt;
}

}  // namespace

EmbeddingReport verify_embedding(std::span<const Partition> parts,
                                 std::vector<std::string> labels,
                                 const Rational& alpha) {
  check_alpha(alpha);
  EmbeddingReport report;
  if (parts.empty()) return report;

  std::vector<WeightStructure> images;
  images.reserve(parts.size());
  for (const Partition& p : parts) images.push_back(embed_partition(p, labels, alpha));

  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (report.meet_preserved) {
        const WeightStructure embedded =
            embed_partition(part_meet(parts[a], parts[b]), labels, alpha);
        const WeightStructure pointwise = pointwise_meet(images[a], images[b]);
        auto violation = first_difference(a, b, embedded, pointwise);
        if (!violation) violation = first_difference(a, b, embedded,
                                                     metric_meet(images[a], images[b]));
        if (violation) {
          report.meet_preserved = false;
          report.meet_witness = violation;
        }
      }
      if (report.join_preserved) {
        const WeightStructure embedded =
            embed_partition(part_join(parts[a], parts[b]), labels, alpha);
        const WeightStructure pointwise = pointwise_join(images[a], images[b]);
        if (auto violation = first_difference(a, b, embedded, pointwise)) {
          report.join_preserved = false;
          report.join_witness = violation;
        }
      }
      if (report.injective && parts[a] != parts[b] && images[a] == images[b])
        report.injective = false;
    }
    if (report.topology_is_discrete &&
        ball_cover_topology(images[a], Side::Left) !=
            discrete_topology(static_cast<int>(images[a].size())))
      report.topology_is_discrete = false;
  }
  return report;
}

}  // namespace metlat
