#include "metlat/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "metlat/adjoints.hpp"
#include "metlat/io.hpp"
#include "metlat/partitions.hpp"
#include "metlat/rng.hpp"
#include "metlat/topology.hpp"

namespace metlat {

std::vector<ExtValue> default_value_pool() {
  return {ExtValue(0),          ExtValue::ratio(1, 2), ExtValue(1),
          ExtValue::ratio(3, 2), ExtValue(2),           ExtValue::infinity()};
}

namespace {

void check_pool(std::span<const ExtValue> pool, const AxiomSet& axioms, Eigen::Index n) {
  if (pool.empty()) throw std::invalid_argument("random_weight: empty value pool");
  if (axioms.sep && n > 1 &&
      std::all_of(pool.begin(), pool.end(), [](const ExtValue& v) { return v.is_zero(); }))
    throw std::invalid_argument("random_weight: sep is unsatisfiable with an all-zero pool");
}

const ExtValue& draw(std::span<const ExtValue> pool, SplitMix64& rng) {
  return pool[rng.below(pool.size())];
}

const ExtValue& draw_nonzero(std::span<const ExtValue> pool, SplitMix64& rng) {
  for (;;) {
    const ExtValue& v = draw(pool, rng);
    if (!v.is_zero()) return v;
  }
}

}  // namespace

WeightStructure random_weight(Eigen::Index n, const AxiomSet& axioms,
                              std::span<const ExtValue> pool, std::uint64_t seed) {
  return random_weight(default_labels(n), axioms, pool, seed);
}

WeightStructure random_weight(std::vector<std::string> labels, const AxiomSet& axioms,
                              std::span<const ExtValue> pool, std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  check_pool(pool, axioms, n);
  SplitMix64 rng(seed);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    WeightMatrix m(n, n);
    if (axioms.sym) {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = draw(pool, rng);
    } else {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = draw(pool, rng);
    }
    if (axioms.zero)
      for (Eigen::Index i = 0; i < n; ++i) m(i, i) = ExtValue(0);
    if (axioms.sep) {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (m(i, j).is_zero() && m(j, i).is_zero()) {
            if (axioms.sym) {
              m(i, j) = m(j, i) = draw_nonzero(pool, rng);
            } else if (rng.below(2) == 0) {
              m(i, j) = draw_nonzero(pool, rng);
            } else {
              m(j, i) = draw_nonzero(pool, rng);
            }
          }
    }
    if (axioms.tri) m = detail::triangle_relax(m);

    WeightStructure candidate(labels, std::move(m));
    if (check_axioms(candidate).contains(axioms)) return candidate;
  }
  throw std::invalid_argument("random_weight: could not satisfy the axioms from the pool");
}

std::vector<WeightStructure> enumerate_weights(Eigen::Index n, const AxiomSet& axioms,
                                               std::span<const ExtValue> pool,
                                               std::size_t limit) {
  if (pool.empty()) throw std::invalid_argument("enumerate_weights: empty value pool");
  std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j && axioms.zero) continue;
      if (axioms.sym && j < i) continue;
      cells.emplace_back(i, j);
    }

  std::size_t total = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (total > limit / pool.size() + 1)
      throw std::invalid_argument("enumerate_weights: pool too large to enumerate");
    total *= pool.size();
  }
  if (total > limit)
    throw std::invalid_argument("enumerate_weights: pool too large to enumerate");

  const std::vector<std::string> labels = default_labels(n);
  std::vector<WeightStructure> out;
  std::vector<std::size_t> odo(cells.size(), 0);
  for (std::size_t step = 0; step < total; ++step) {
    WeightMatrix m = WeightMatrix::Constant(n, n, ExtValue(0));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      m(i, j) = pool[odo[c]];
      if (axioms.sym) m(j, i) = pool[odo[c]];
    }
    WeightStructure candidate(labels, std::move(m));
    if (check_axioms(candidate).contains(axioms)) out.push_back(std::move(candidate));
    for (std::size_t c = 0; c < odo.size(); ++c) {
      if (++odo[c] < pool.size()) break;
      odo[c] = 0;
    }
  }

  auto distinct_values = [](const WeightStructure& d) {
    std::vector<std::string> seen;
    for (Eigen::Index i = 0; i < d.size(); ++i)
      for (Eigen::Index j = 0; j < d.size(); ++j) seen.push_back(to_string(d(i, j)));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size();
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const WeightStructure& a, const WeightStructure& b) {
                     return distinct_values(a) < distinct_values(b);
                   });
  return out;
}

std::string to_string(Property property) {
  switch (property) {
    case Property::SigmaJoinPreservesMeet: return "sigma_join_preserves_meet";
    case Property::DeltaStarPreservesJoin: return "delta_star_preserves_join";
    case Property::TriMeetClosed: return "tri_meet_closed";
    case Property::PsiOrderPreserving: return "psi_order_preserving";
    case Property::PsiBinaryJoin: return "psi_binary_join";
    case Property::PhiBinaryMeet: return "phi_binary_meet";
    case Property::PhiOrderPreserving: return "phi_order_preserving";
    case Property::FiberJoinStability: return "fiber_join_stability";
  }
  throw std::logic_error("unreachable property");
}

Property parse_property(std::string_view token) {
  for (Property p : {Property::SigmaJoinPreservesMeet, Property::DeltaStarPreservesJoin,
                     Property::TriMeetClosed, Property::PsiOrderPreserving,
                     Property::PsiBinaryJoin, Property::PhiBinaryMeet,
                     Property::PhiOrderPreserving, Property::FiberJoinStability})
    if (to_string(p) == token) return p;
  throw std::invalid_argument("unknown property '" + std::string(token) + "'");
}

AxiomSet default_context(Property property) {
  switch (property) {
    case Property::SigmaJoinPreservesMeet: return {true, false, false, false};
    case Property::DeltaStarPreservesJoin: return {true, false, true, false};
    case Property::TriMeetClosed: return AxiomSet::metric();
    case Property::PsiBinaryJoin: return {true, false, false, true};
    case Property::PsiOrderPreserving:
    case Property::PhiBinaryMeet:
    case Property::PhiOrderPreserving:
    case Property::FiberJoinStability: return {true, false, false, false};
  }
  throw std::logic_error("unreachable property");
}

namespace {

struct Evaluated {
  bool violated = false;
  std::string lhs;
  std::string rhs;
};

using PairEval = std::function<Evaluated(const WeightStructure&, const WeightStructure&)>;

constexpr std::size_t kEnumerationLimit = 3000;

std::string topo_or_matrix(const FiniteTopology& t) { return to_text(t); }

/// Runs a binary property over sampled (or, at n == 2, all) pairs from the
/// context; `ordered` also scans (b, a).
SearchReport run_pair_property(const PropertySpec& spec, const AxiomSet& context,
                               const PairEval& eval, bool ordered) {
  SearchReport report;
  report.property = to_string(spec.property);
  report.context = context;
  const std::vector<ExtValue> pool = spec.pool.empty() ? default_value_pool() : spec.pool;

  if (spec.n == 2) {
    std::vector<WeightStructure> all;
    try {
      all = enumerate_weights(spec.n, context, pool, kEnumerationLimit);
    } catch (const std::invalid_argument&) {
      all.clear();
    }
    if (!all.empty()) {
      report.exhaustive = true;
      report.enumerated = {all.size(), all.size()};
      for (std::size_t a = 0; a < all.size(); ++a) {
        const std::size_t b_begin = ordered ? 0 : a;
        for (std::size_t b = b_begin; b < all.size(); ++b) {
          ++report.trials_executed;
          Evaluated e = eval(all[a], all[b]);
          if (e.violated) {
            report.outcome = "witness";
            report.witness = SearchWitness{{all[a], all[b]}, e.lhs, e.rhs, 0};
            return report;
          }
        }
      }
      report.outcome = "none-found";
      return report;
    }
  }

  for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
    const std::uint64_t s = derive_seed(spec.seed, trial);
    WeightStructure a = random_weight(spec.n, context, pool, s);
    WeightStructure b = random_weight(spec.n, context, pool, s ^ 0x6c62272e07bb0142ULL);
    ++report.trials_executed;
    Evaluated e = eval(a, b);
    if (e.violated) {
      report.outcome = "witness";
      report.witness = SearchWitness{{a, b}, e.lhs, e.rhs, trial};
      return report;
    }
  }
  report.outcome = "none-found";
  return report;
}

/// Comparable pairs d <= m: exhaustively filtered at n == 2, otherwise m is
/// sampled as d joined with a second draw.
SearchReport run_monotone_property(const PropertySpec& spec, const AxiomSet& context,
                                   const PairEval& eval) {
  SearchReport report;
  report.property = to_string(spec.property);
  report.context = context;
  const std::vector<ExtValue> pool = spec.pool.empty() ? default_value_pool() : spec.pool;

  if (spec.n == 2) {
    std::vector<WeightStructure> all;
    try {
      all = enumerate_weights(spec.n, context, pool, kEnumerationLimit);
    } catch (const std::invalid_argument&) {
      all.clear();
    }
    if (!all.empty()) {
      report.exhaustive = true;
      report.enumerated = {all.size(), all.size()};
      for (const WeightStructure& d : all)
        for (const WeightStructure& m : all) {
          if (!leq(d, m)) continue;
          ++report.trials_executed;
          Evaluated e = eval(d, m);
          if (e.violated) {
            report.outcome = "witness";
            report.witness = SearchWitness{{d, m}, e.lhs, e.rhs, 0};
            return report;
          }
        }
      report.outcome = "none-found";
      return report;
    }
  }

  for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
    const std::uint64_t s = derive_seed(spec.seed, trial);
    WeightStructure d = random_weight(spec.n, context, pool, s);
    WeightStructure r = random_weight(spec.n, context, pool, s ^ 0x2545f4914f6cdd1dULL);
    WeightStructure m = pointwise_join(d, r);
    ++report.trials_executed;
    Evaluated e = eval(d, m);
    if (e.violated) {
      report.outcome = "witness";
      report.witness = SearchWitness{{d, m}, e.lhs, e.rhs, trial};
      return report;
    }
  }
  report.outcome = "none-found";
  return report;
}

Partition random_partition(int n, SplitMix64& rng) {
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  int max_used = 0;
  for (int i = 1; i < n; ++i) {
    const int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_used) + 2));
    assignment[static_cast<std::size_t>(i)] = b;
    max_used = std::max(max_used, b);
  }
  return Partition(std::move(assignment));
}

/// Block-constant member of the fiber of the partition topology: zero
/// inside blocks, one positive pool value per unordered block pair.
WeightStructure random_fiber_member(const Partition& p,
                                    const std::vector<std::string>& labels,
                                    std::span<const ExtValue> pool, SplitMix64& rng) {
  const int blocks = p.block_count();
  std::vector<std::vector<ExtValue>> cross(static_cast<std::size_t>(blocks));
  for (int a = 0; a < blocks; ++a) {
    cross[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(blocks),
                                              ExtValue(0));
    for (int b = 0; b < blocks; ++b)
      if (a != b)
        cross[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            draw_nonzero(pool, rng);
  }
  const auto n = static_cast<Eigen::Index>(labels.size());
  WeightMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const int bi = p.block_of(static_cast<int>(i));
      const int bj = p.block_of(static_cast<int>(j));
      m(i, j) = cross[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)];
    }
  return WeightStructure(labels, std::move(m));
}

SearchReport run_fiber_join_stability(const PropertySpec& spec, const AxiomSet& context) {
  SearchReport report;
  report.property = to_string(spec.property);
  report.context = context;
  std::vector<ExtValue> pool = spec.pool.empty() ? default_value_pool() : spec.pool;
  if (std::all_of(pool.begin(), pool.end(),
                  [](const ExtValue& v) { return v.is_zero(); }))
    throw std::invalid_argument("fiber_join_stability: pool needs a positive value");

  for (std::uint64_t trial = 0; trial < spec.trials; ++trial) {
    SplitMix64 rng(derive_seed(spec.seed, trial));
    const Partition p = random_partition(static_cast<int>(spec.n), rng);
    const std::vector<std::string> labels = default_labels(spec.n);
    const WeightStructure top = partition_structure(p, labels);
    const FiniteTopology tau = ball_cover_topology(top, Side::Left);
    const WeightStructure d1 = random_fiber_member(p, labels, pool, rng);
    const WeightStructure d2 = random_fiber_member(p, labels, pool, rng);
    ++report.trials_executed;

    auto in_fiber = [&tau](const WeightStructure& d) {
      return ball_cover_topology(d, Side::Left) == tau;
    };
    const WeightStructure join_members = pointwise_join(d1, d2);
    const WeightStructure join_top = pointwise_join(d1, top);
    if (!in_fiber(d1) || !in_fiber(d2) || !in_fiber(join_members) ||
        !in_fiber(join_top)) {
      report.outcome = "witness";
      report.witness =
          SearchWitness{{top, d1, d2}, topo_or_matrix(ball_cover_topology(join_members, Side::Left)),
                        topo_or_matrix(tau), trial};
      return report;
    }
  }
  report.outcome = "none-found";
  return report;
}

}  // namespace

SearchReport find_counterexample(const PropertySpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const AxiomSet context = spec.context.value_or(default_context(spec.property));
  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(to_string(spec.property) + ": " + what);
  };

  SearchReport report;
  switch (spec.property) {
    case Property::SigmaJoinPreservesMeet: {
      require(!context.sym, "context must not already contain sym");
      report = run_pair_property(
          spec, context,
          [](const WeightStructure& a, const WeightStructure& b) {
            const WeightStructure lhs = symmetrize_max(pointwise_meet(a, b));
            const WeightStructure rhs =
                pointwise_meet(symmetrize_max(a), symmetrize_max(b));
            return Evaluated{lhs != rhs, to_wsm(lhs), to_wsm(rhs)};
          },
          false);
      break;
    }
    case Property::DeltaStarPreservesJoin: {
      require(!context.tri, "context must not already contain tri");
      require(context.zero, "context must contain zero");
      report = run_pair_property(
          spec, context,
          [](const WeightStructure& a, const WeightStructure& b) {
            const WeightStructure lhs =
                pointwise_join(triangle_closure(a), triangle_closure(b));
            const WeightStructure rhs = triangle_closure(pointwise_join(a, b));
            return Evaluated{lhs != rhs, to_wsm(lhs), to_wsm(rhs)};
          },
          false);
      break;
    }
    case Property::TriMeetClosed: {
      require(context.tri, "context must contain tri");
      report = run_pair_property(
          spec, context,
          [](const WeightStructure& a, const WeightStructure& b) {
            const WeightStructure meet = pointwise_meet(a, b);
            const AxiomSet axioms = check_axioms(meet);
            return Evaluated{!axioms.tri, to_wsm(meet), "tri expected"};
          },
          false);
      break;
    }
    case Property::PsiOrderPreserving: {
      require(context.zero, "context must contain zero");
      report = run_monotone_property(
          spec, context, [](const WeightStructure& d, const WeightStructure& m) {
            const FiniteTopology td = ball_cover_topology(d, Side::Left);
            const FiniteTopology tm = ball_cover_topology(m, Side::Left);
            return Evaluated{!tm.refines(td), topo_or_matrix(td), topo_or_matrix(tm)};
          });
      if (!context.tri)
        report.note =
            "open probe without the triangle axiom: none-found is evidence, not "
            "proof; any reported witness re-verifies exactly";
      break;
    }
    case Property::PsiBinaryJoin: {
      require(context.zero, "context must contain zero");
      require(context.tri, "context must contain tri");
      report = run_pair_property(
          spec, context,
          [](const WeightStructure& a, const WeightStructure& b) {
            const FiniteTopology lhs = ball_cover_topology(pointwise_join(a, b), Side::Left);
            const FiniteTopology rhs = topo_join(ball_cover_topology(a, Side::Left),
                                                 ball_cover_topology(b, Side::Left));
            return Evaluated{lhs != rhs, topo_or_matrix(lhs), topo_or_matrix(rhs)};
          },
          false);
      break;
    }
    case Property::PhiBinaryMeet: {
      require(context.zero, "context must contain zero");
      report = run_pair_property(
          spec, context,
          [](const WeightStructure& a, const WeightStructure& b) {
            const FiniteTopology lhs =
                neighborhood_topology(pointwise_meet(a, b), Side::Left);
            const FiniteTopology rhs = topo_meet(neighborhood_topology(a, Side::Left),
                                                 neighborhood_topology(b, Side::Left));
            return Evaluated{lhs != rhs, topo_or_matrix(lhs), topo_or_matrix(rhs)};
          },
          false);
      break;
    }
    case Property::PhiOrderPreserving: {
      require(context.zero, "context must contain zero");
      report = run_monotone_property(
          spec, context, [](const WeightStructure& d, const WeightStructure& m) {
            const FiniteTopology td = neighborhood_topology(d, Side::Left);
            const FiniteTopology tm = neighborhood_topology(m, Side::Left);
            return Evaluated{!tm.refines(td), topo_or_matrix(td), topo_or_matrix(tm)};
          });
      break;
    }
    case Property::FiberJoinStability: {
      require(context.zero, "context must contain zero");
      report = run_fiber_join_stability(spec, context);
      break;
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

WeightStructure two_point(const ExtValue& xy, const ExtValue& yx) {
  WeightMatrix m(2, 2);
  m(0, 0) = ExtValue(0);
  m(1, 1) = ExtValue(0);
  m(0, 1) = xy;
  m(1, 0) = yx;
  return WeightStructure(default_labels(2), std::move(m));
}

WeightStructure three_point_symmetric(const ExtValue& xy, const ExtValue& xz,
                                      const ExtValue& yz) {
  WeightMatrix m = WeightMatrix::Constant(3, 3, ExtValue(0));
  m(0, 1) = m(1, 0) = xy;
  m(0, 2) = m(2, 0) = xz;
  m(1, 2) = m(2, 1) = yz;
  return WeightStructure(default_labels(3), std::move(m));
}

SearchReport demo_report(std::string name, bool pass, std::vector<WeightStructure> inputs,
                         std::string lhs, std::string rhs, std::string note) {
  SearchReport report;
  report.property = std::move(name);
  report.outcome = pass ? "pass" : "fail";
  report.witness = SearchWitness{std::move(inputs), std::move(lhs), std::move(rhs), 0};
  report.note = std::move(note);
  return report;
}

SearchReport demo_sigma_meet_gap() {
  // 2 > m(x,y) > d(y,x) > m(y,x) > d(x,y) > 1 forces the gap.
  const WeightStructure m = two_point(ExtValue::ratio(9, 5), ExtValue::ratio(7, 5));
  const WeightStructure d = two_point(ExtValue::ratio(6, 5), ExtValue::ratio(8, 5));
  const bool chain = ExtValue(2) > m(0, 1) && m(0, 1) > d(1, 0) && d(1, 0) > m(1, 0) &&
                     m(1, 0) > d(0, 1) && d(0, 1) > ExtValue(1);
  const ExtValue lhs = symmetrize_max(pointwise_meet(m, d))(0, 1);
  const ExtValue rhs = pointwise_meet(symmetrize_max(m), symmetrize_max(d))(0, 1);
  const bool pass = chain && lhs == ExtValue::ratio(7, 5) && rhs == ExtValue::ratio(8, 5);
  return demo_report("sigma_meet_gap", pass, {m, d}, to_string(lhs), to_string(rhs),
                     "max-symmetrization does not preserve binary meets");
}

SearchReport demo_delta_join_gap() {
  const WeightStructure m = three_point_symmetric(
      ExtValue::ratio(3, 5), ExtValue::ratio(7, 10), ExtValue::ratio(3, 2));
  const WeightStructure d = three_point_symmetric(
      ExtValue::ratio(9, 10), ExtValue::ratio(11, 20), ExtValue::ratio(73, 50));
  const bool bullets = m(0, 1) + m(0, 2) < m(1, 2) && d(0, 1) + d(0, 2) < d(1, 2) &&
                       m(1, 2) < m(0, 2) + d(0, 1) && m(0, 1) < d(0, 1) &&
                       m(0, 2) > d(0, 2) && m(1, 2) > d(1, 2);
  const ExtValue lhs =
      pointwise_join(triangle_closure(m), triangle_closure(d))(1, 2);
  const ExtValue rhs = triangle_closure(pointwise_join(m, d))(1, 2);
  const bool pass =
      bullets && lhs == ExtValue::ratio(29, 20) && rhs == ExtValue::ratio(3, 2);
  return demo_report("delta_join_gap", pass, {m, d}, to_string(lhs), to_string(rhs),
                     "triangle closure does not preserve binary joins");
}

SearchReport demo_tri_meet_gap() {
  const WeightStructure d = three_point_symmetric(ExtValue::ratio(9, 10),
                                                  ExtValue(2), ExtValue::ratio(3, 2));
  const WeightStructure dp = three_point_symmetric(ExtValue::ratio(3, 2), ExtValue(2),
                                                   ExtValue::ratio(9, 10));
  const AxiomSet want = AxiomSet::all();
  const WeightStructure meet = pointwise_meet(d, dp);
  const bool inputs_good =
      check_axioms(d).contains(want) && check_axioms(dp).contains(want);
  const bool gap = meet(0, 1) + meet(1, 2) < meet(0, 2) && !check_axioms(meet).tri;
  return demo_report("tri_meet_gap", inputs_good && gap, {d, dp},
                     to_string(meet(0, 1) + meet(1, 2)), to_string(meet(0, 2)),
                     "the pointwise meet of two separated metrics breaks the triangle");
}

SearchReport demo_kelly_join() {
  WeightMatrix q = WeightMatrix::Constant(3, 3, ExtValue(0));
  q(0, 1) = ExtValue(1);
  q(1, 0) = ExtValue(2);
  q(0, 2) = ExtValue(1);
  q(2, 0) = ExtValue(2);
  q(1, 2) = ExtValue(1);
  q(2, 1) = ExtValue(1);
  const WeightStructure p(default_labels(3), q);
  const AxiomSet axioms = check_axioms(p);
  const bool quasi = axioms.zero && axioms.tri && !axioms.sym;
  const FiniteTopology joined = topo_join(ball_cover_topology(p, Side::Left),
                                          ball_cover_topology(dual(p), Side::Left));
  const FiniteTopology symmetrized =
      ball_cover_topology(symmetrize_max(p), Side::Left);
  return demo_report("kelly_join", quasi && joined == symmetrized, {p},
                     to_text(joined), to_text(symmetrized),
                     "joining the two conjugate topologies matches the "
                     "max-symmetrized structure");
}

SearchReport demo_trivial_topology_limit() {
  constexpr int kSteps = 16;
  bool pass = true;
  for (int k = 1; k <= kSteps && pass; ++k) {
    const WeightStructure dk =
        two_point(ExtValue(Rational(1, k)), ExtValue(Rational(1, k)));
    pass = neighborhood_topology(dk, Side::Left) == discrete_topology(2);
  }
  const WeightStructure limit = two_point(ExtValue(0), ExtValue(0));
  const FiniteTopology limit_topology = neighborhood_topology(limit, Side::Left);
  pass = pass && limit_topology == indiscrete_topology(2);
  return demo_report("trivial_topology_limit", pass, {limit}, to_text(limit_topology),
                     to_text(indiscrete_topology(2)),
                     "every 1/k structure is discrete, the limit structure is trivial");
}

SearchReport demo_ws_not_closed_limit() {
  constexpr int kSteps = 16;
  bool members_separated = true;
  std::vector<WeightStructure> chain;
  for (int k = 1; k <= kSteps; ++k) {
    chain.push_back(two_point(ExtValue(Rational(1, k)), ExtValue(Rational(1, k))));
    members_separated = members_separated && check_axioms(chain.back()).sep;
  }
  const WeightStructure finite_meet =
      pointwise_meet(std::span<const WeightStructure>(chain));
  const bool finite_meet_separated = check_axioms(finite_meet).sep;
  const WeightStructure limit = two_point(ExtValue(0), ExtValue(0));
  const bool limit_separated = check_axioms(limit).sep;
  const bool pass = members_separated && finite_meet_separated && !limit_separated;
  return demo_report("ws_not_closed_limit", pass, {finite_meet, limit},
                     to_string(check_axioms(finite_meet)), to_string(check_axioms(limit)),
                     "finite meets of the chain stay separated; the declared "
                     "infimum does not");
}

SearchReport demo_embedding_join_gap() {
  const std::vector<std::string> labels = {"a", "b", "c"};
  const std::vector<Partition> parts = {Partition({0, 0, 1}), Partition({0, 1, 1})};
  const EmbeddingReport report =
      verify_embedding(parts, labels, Rational(3, 2));
  bool pass = report.meet_preserved && !report.join_preserved && report.injective &&
              report.topology_is_discrete && report.join_witness.has_value();
  if (pass) {
    const EmbeddingViolation& v = *report.join_witness;
    pass = v.point_a == "a" && v.point_b == "c" &&
           v.embedded == ExtValue::ratio(3, 2) && v.pointwise == ExtValue(1);
  }
  return demo_report("embedding_join_gap", pass,
                     {embed_partition(parts[0], labels, Rational(3, 2)),
                      embed_partition(parts[1], labels, Rational(3, 2))},
                     pass ? to_string(report.join_witness->embedded) : "-",
                     pass ? to_string(report.join_witness->pointwise) : "-",
                     "the union of the two relations is not transitive, so the "
                     "embedded join exceeds the pointwise join at (a,c)");
}

SearchReport demo_fiber_partition() {
  const Partition p({0, 0, 1});
  const std::vector<std::string> labels = default_labels(3);
  const WeightStructure top = partition_structure(p, labels);
  const FiniteTopology tau = ball_cover_topology(top, Side::Left);
  const FiniteTopology expected =
      FiniteTopology::from_opens(3, {0b000, 0b011, 0b100, 0b111});

  WeightMatrix m = WeightMatrix::Constant(3, 3, ExtValue(5));
  m(0, 0) = m(1, 1) = m(2, 2) = ExtValue(0);
  m(0, 1) = m(1, 0) = ExtValue(0);
  const WeightStructure member(labels, std::move(m));

  const bool pass = tau == expected &&
                    ball_cover_topology(member, Side::Left) == tau &&
                    ball_cover_topology(pointwise_join(member, top), Side::Left) == tau;
  return demo_report("fiber_partition", pass, {top, member}, to_text(tau),
                     to_text(expected),
                     "the 0/inf structure generates its block topology and joins "
                     "stay inside the fiber");
}

}  // namespace

std::vector<std::string> demo_names() {
  return {"sigma_meet_gap",   "delta_join_gap",        "tri_meet_gap",
          "kelly_join",       "trivial_topology_limit", "ws_not_closed_limit",
          "embedding_join_gap", "fiber_partition"};
}

SearchReport run_demo(std::string_view name) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  if (name == "sigma_meet_gap") {
    report = demo_sigma_meet_gap();
  } else if (name == "delta_join_gap") {
    report = demo_delta_join_gap();
  } else if (name == "tri_meet_gap") {
    report = demo_tri_meet_gap();
  } else if (name == "kelly_join") {
    report = demo_kelly_join();
  } else if (name == "trivial_topology_limit") {
    report = demo_trivial_topology_limit();
  } else if (name == "ws_not_closed_limit") {
    report = demo_ws_not_closed_limit();
  } else if (name == "embedding_join_gap") {
    report = demo_embedding_join_gap();
  } else if (name == "fiber_partition") {
    report = demo_fiber_partition();
  } else {
    throw std::invalid_argument("unknown demo '" + std::string(name) + "'");
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace metlat
