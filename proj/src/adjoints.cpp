#include "metlat/adjoints.hpp"

#include <stdexcept>
#include <utility>

#include "metlat/rng.hpp"
#include "metlat/search.hpp"

namespace metlat {

ExtValue path_length(const WeightStructure& d, const Path& path) {
  if (path.points.size() < 2)
    throw std::invalid_argument("path needs at least one edge");
  ExtValue total(0);
  for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
    total += d(path.points[i], path.points[i + 1]);
  return total;
}

namespace {

void require_zero_diagonal(const WeightStructure& d, const char* op) {
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (!d(i, i).is_zero())
      throw std::invalid_argument(std::string(op) + ": requires a zero diagonal (" +
                                  d.labels()[static_cast<std::size_t>(i)] +
                                  " has nonzero self-distance)");
}

}  // namespace

WeightStructure with_zero_diagonal(const WeightStructure& d) {
  WeightMatrix m = d.matrix();
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = ExtValue(0);
  return d.with_matrix(std::move(m));
}

WeightStructure with_inf_diagonal(const WeightStructure& d) {
  require_zero_diagonal(d, "with_inf_diagonal");
  WeightMatrix m = d.matrix();
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = ExtValue::infinity();
  return d.with_matrix(std::move(m));
}

WeightStructure symmetrize_max(const WeightStructure& d) {
  return d.with_matrix(d.matrix().cwiseMax(d.matrix().transpose()));
}

WeightStructure symmetrize_min(const WeightStructure& d) {
  return d.with_matrix(d.matrix().cwiseMin(d.matrix().transpose()));
}

namespace detail {

WeightMatrix triangle_relax(const WeightMatrix& input) {
  const Eigen::Index n = input.rows();
  WeightMatrix m = input;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
          ExtValue via = m(i, k) + m(k, j);
          if (via < m(i, j)) {
            m(i, j) = std::move(via);
            changed = true;
          }
        }
  }
  return m;
}

}  // namespace detail

WeightStructure triangle_closure(const WeightStructure& d) {
  require_zero_diagonal(d, "triangle_closure");
  return d.with_matrix(detail::triangle_relax(d.matrix()));
}

WeightStructure metric_meet(std::span<const WeightStructure> family) {
  if (family.empty()) throw std::invalid_argument("metric_meet: empty family");
  for (const WeightStructure& d : family)
    if (!check_axioms(d).contains(AxiomSet::metric()))
      throw std::invalid_argument(
          "metric_meet: family member violates {zero, sym, tri}");
  return triangle_closure(pointwise_meet(family));
}

WeightStructure metric_meet(const WeightStructure& a, const WeightStructure& b) {
  const WeightStructure family[] = {a, b};
  return metric_meet(std::span<const WeightStructure>(family));
}

std::string to_string(AdjunctionKind kind) {
  switch (kind) {
    case AdjunctionKind::ZeroStar: return "zero_star";
    case AdjunctionKind::InfShriek: return "inf_shriek";
    case AdjunctionKind::SigmaShriek: return "sigma_shriek";
    case AdjunctionKind::SigmaStar: return "sigma_star";
    case AdjunctionKind::DeltaStar: return "delta_star";
    case AdjunctionKind::MetMeet: return "met_meet";
  }
  throw std::logic_error("unreachable adjunction kind");
}

AdjunctionKind parse_adjunction_kind(std::string_view token) {
  if (token == "zero_star") return AdjunctionKind::ZeroStar;
  if (token == "inf_shriek") return AdjunctionKind::InfShriek;
  if (token == "sigma_shriek") return AdjunctionKind::SigmaShriek;
  if (token == "sigma_star") return AdjunctionKind::SigmaStar;
  if (token == "delta_star") return AdjunctionKind::DeltaStar;
  if (token == "met_meet") return AdjunctionKind::MetMeet;
  throw std::invalid_argument("unknown adjunction id '" + std::string(token) + "'");
}

namespace {

std::vector<ExtValue> pool_or_default(const GaloisOptions& options) {
  return options.pool.empty() ? default_value_pool() : options.pool;
}

/// Exhaustive pair scan is worth it only when both operand sets stay small.
constexpr std::size_t kExhaustiveStructureLimit = 3000;

struct LawCheck {
  AxiomSet lower;
  AxiomSet upper;
  // Evaluates both sides of the order equivalence for a (lower, upper) pair.
  std::function<std::pair<bool, bool>(const WeightStructure&, const WeightStructure&)>
      sides;
};

GaloisReport run_pair_law(const LawCheck& law, const GaloisOptions& options,
                          std::string claim) {
  GaloisReport report;
  report.claim = std::move(claim);
  report.over = law.lower;
  const std::vector<ExtValue> pool = pool_or_default(options);

  if (options.n == 2) {
    std::vector<WeightStructure> lows, ups;
    try {
      lows = enumerate_weights(options.n, law.lower, pool, kExhaustiveStructureLimit);
      ups = enumerate_weights(options.n, law.upper, pool, kExhaustiveStructureLimit);
    } catch (const std::invalid_argument&) {
      lows.clear();
    }
    if (!lows.empty() && !ups.empty()) {
      report.exhaustive = true;
      report.enumerated = {lows.size(), ups.size()};
      for (const WeightStructure& d : lows)
        for (const WeightStructure& dp : ups) {
          ++report.checked;
          auto [lhs, rhs] = law.sides(d, dp);
          if (lhs != rhs) {
            report.witness = GaloisWitness{{d, dp}, lhs, rhs, ""};
            return report;
          }
        }
      return report;
    }
  }

  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t s = derive_seed(options.seed, trial);
    WeightStructure d = random_weight(options.n, law.lower, pool, s);
    WeightStructure dp = random_weight(options.n, law.upper, pool, s ^ 0x5851f42d4c957f2dULL);
    ++report.checked;
    auto [lhs, rhs] = law.sides(d, dp);
    if (lhs != rhs) {
      report.witness = GaloisWitness{{d, dp}, lhs, rhs, "trial " + std::to_string(trial)};
      return report;
    }
  }
  return report;
}

GaloisReport run_met_meet_law(const GaloisOptions& options) {
  GaloisReport report;
  report.claim = "met_meet";
  report.over = AxiomSet::metric();
  const std::vector<ExtValue> pool = pool_or_default(options);
  const AxiomSet met = AxiomSet::metric();

  auto sides = [](const WeightStructure& m, const WeightStructure& a,
                  const WeightStructure& b) {
    bool below_all = leq(m, a) && leq(m, b);
    bool below_meet = leq(m, metric_meet(a, b));
    return std::pair<bool, bool>(below_all, below_meet);
  };

  if (options.n == 2) {
    std::vector<WeightStructure> mets;
    try {
      mets = enumerate_weights(options.n, met, pool, kExhaustiveStructureLimit);
    } catch (const std::invalid_argument&) {
      mets.clear();
    }
    if (!mets.empty()) {
      report.exhaustive = true;
      report.enumerated = {mets.size(), mets.size(), mets.size()};
      for (const WeightStructure& m : mets)
        for (const WeightStructure& a : mets)
          for (const WeightStructure& b : mets) {
            ++report.checked;
            auto [lhs, rhs] = sides(m, a, b);
            if (lhs != rhs) {
              report.witness = GaloisWitness{{m, a, b}, lhs, rhs, ""};
              return report;
            }
          }
      return report;
    }
  }

  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t s = derive_seed(options.seed, trial);
    WeightStructure m = random_weight(options.n, met, pool, s);
    WeightStructure a = random_weight(options.n, met, pool, s ^ 0x9e3779b97f4a7c15ULL);
    WeightStructure b = random_weight(options.n, met, pool, s ^ 0xc2b2ae3d27d4eb4fULL);
    ++report.checked;
    auto [lhs, rhs] = sides(m, a, b);
    if (lhs != rhs) {
      report.witness = GaloisWitness{{m, a, b}, lhs, rhs, "trial " + std::to_string(trial)};
      return report;
    }
  }
  return report;
}

WeightStructure closure_for_context(const WeightStructure& d, bool zero_diagonal) {
  if (zero_diagonal) return triangle_closure(d);
  return d.with_matrix(detail::triangle_relax(d.matrix()));
}

}  // namespace

GaloisReport check_adjoint_claim(
    const std::function<WeightStructure(const WeightStructure&)>& map,
    AdjointSide side, const AxiomSet& lower, const AxiomSet& upper,
    const GaloisOptions& options, std::string claim_name) {
  LawCheck law;
  law.lower = lower;
  law.upper = upper;
  if (side == AdjointSide::Right) {
    law.sides = [&map](const WeightStructure& d, const WeightStructure& dp) {
      return std::pair<bool, bool>(leq(dp, d), leq(dp, map(d)));
    };
  } else {
    law.sides = [&map](const WeightStructure& d, const WeightStructure& dp) {
      return std::pair<bool, bool>(leq(map(d), dp), leq(d, dp));
    };
  }
  return run_pair_law(law, options, std::move(claim_name));
}

GaloisReport galois_holds(const AdjunctionId& id, const GaloisOptions& options) {
  const AxiomSet& over = id.over;
  auto reject = [&](const char* why) {
    throw std::invalid_argument(to_string(id.kind) + std::string(": ") + why);
  };

  switch (id.kind) {
    case AdjunctionKind::ZeroStar: {
      if (over.zero) reject("context already contains zero");
      return check_adjoint_claim(
          [](const WeightStructure& d) { return with_zero_diagonal(d); },
          AdjointSide::Right, over, over.united({true, false, false, false}), options,
          "zero_star over " + to_string(over));
    }
    case AdjunctionKind::InfShriek: {
      // The pair (with_zero_diagonal, with_inf_diagonal) between W_P and
      // W_{P+zero}; the law is zero_fix(d) <= d'  iff  d <= inf_diag(d').
      if (over.tri) reject("no such adjoint once the triangle axiom is present");
      AxiomSet base = over;
      base.zero = false;
      LawCheck law;
      law.lower = base;
      law.upper = base.united({true, false, false, false});
      law.sides = [](const WeightStructure& d, const WeightStructure& dp) {
        return std::pair<bool, bool>(leq(with_zero_diagonal(d), dp),
                                     leq(d, with_inf_diagonal(dp)));
      };
      return run_pair_law(law, options, "inf_shriek over " + to_string(base));
    }
    case AdjunctionKind::SigmaShriek: {
      if (over.sym) reject("context already contains sym");
      return check_adjoint_claim(
          [](const WeightStructure& d) { return symmetrize_max(d); },
          AdjointSide::Left, over, over.united({false, false, true, false}), options,
          "sigma_shriek over " + to_string(over));
    }
    case AdjunctionKind::SigmaStar: {
      if (over.sym) reject("context already contains sym");
      if (over.tri)
        reject("min-symmetrization does not preserve the triangle inequality");
      return check_adjoint_claim(
          [](const WeightStructure& d) { return symmetrize_min(d); },
          AdjointSide::Right, over, over.united({false, false, true, false}), options,
          "sigma_star over " + to_string(over));
    }
    case AdjunctionKind::DeltaStar: {
      if (over.tri) reject("context already contains tri");
      if (over.sep) reject("the shortest-path closure can destroy sep");
      const bool zero_diag = over.zero;
      return check_adjoint_claim(
          [zero_diag](const WeightStructure& d) {
            return closure_for_context(d, zero_diag);
          },
          AdjointSide::Right, over, over.united({false, false, false, true}), options,
          "delta_star over " + to_string(over));
    }
    case AdjunctionKind::MetMeet: {
      if (over.sep) reject("Met(X) here is sep-free");
      return run_met_meet_law(options);
    }
  }
  throw std::logic_error("unreachable adjunction kind");
}

}  // namespace metlat
