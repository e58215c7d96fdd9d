#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "metlat/adjoints.hpp"
#include "metlat/partitions.hpp"
#include "metlat/rng.hpp"
#include "metlat/search.hpp"
#include "metlat/topology.hpp"
#include "oracles.hpp"

using namespace metlat;

namespace {

WeightStructure sym3(const ExtValue& xy, const ExtValue& xz, const ExtValue& yz) {
  WeightMatrix m = WeightMatrix::Constant(3, 3, ExtValue(0));
  m(0, 1) = m(1, 0) = xy;
  m(0, 2) = m(2, 0) = xz;
  m(1, 2) = m(2, 1) = yz;
  return WeightStructure(default_labels(3), std::move(m));
}

WeightStructure two_point(const ExtValue& xy, const ExtValue& yx) {
  WeightMatrix m = WeightMatrix::Constant(2, 2, ExtValue(0));
  m(0, 1) = xy;
  m(1, 0) = yx;
  return WeightStructure(default_labels(2), std::move(m));
}

const ExtValue kInf = ExtValue::infinity();
const AxiomSet kZero{true, false, false, false};
const AxiomSet kZeroSym{true, false, true, false};
const AxiomSet kZeroTri{true, false, false, true};

}  // namespace

TEST_CASE("classify covers, bases, topologies") {
  // {x,y}, {y,z} on three points
  const SetCollection c(3, {0b011, 0b110});
  const CollectionClass flags = classify(c);
  CHECK(flags.is_cover);
  CHECK_FALSE(flags.is_base);  // y lies in the intersection {y}, no member inside
  CHECK_FALSE(flags.is_topology);

  const CollectionClass trivial = classify(SetCollection(3, {0b000, 0b111}));
  CHECK(trivial.is_cover);
  CHECK(trivial.is_base);
  CHECK(trivial.is_topology);

  CHECK_FALSE(classify(SetCollection(1, {})).is_cover);

  // a base that is not yet a topology: {x}, {y}, X on two points
  const CollectionClass base_only = classify(SetCollection(2, {0b01, 0b10, 0b11}));
  CHECK(base_only.is_cover);
  CHECK(base_only.is_base);
  CHECK_FALSE(base_only.is_topology);
}

TEST_CASE("generate_topology on fixed collections") {
  const FiniteTopology generated = generate_topology(SetCollection(3, {0b011, 0b110}));
  CHECK(generated.opens() == std::vector<PointSet>{0b000, 0b010, 0b011, 0b110, 0b111});

  const FiniteTopology already = FiniteTopology::from_opens(2, {0b00, 0b01, 0b11});
  CHECK(generate_topology(SetCollection(2, already.opens())) == already);

  CHECK(generate_topology(SetCollection(1, {})) == discrete_topology(1));
}

TEST_CASE("generate_topology equals the least-containing-topology fixpoint") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const int count = static_cast<int>(rng.below(5));
    std::vector<PointSet> sets;
    const PointSet full = n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
    for (int i = 0; i < count; ++i) sets.push_back(rng.next() & full);
    const SetCollection c(n, std::move(sets));
    const FiniteTopology generated = generate_topology(c);
    CHECK(generated == oracles::generated_by_fixpoint(c));
    // contains the generators
    for (PointSet s : c.sets()) CHECK(generated.contains(s));
    CHECK(classify(SetCollection(n, generated.opens())).is_topology);
  }
}

TEST_CASE("ball-cover topology on fixed structures") {
  CHECK(ball_cover_topology(two_point(ExtValue(0), ExtValue(0)), Side::Left) ==
        indiscrete_topology(2));
  CHECK(ball_cover_topology(two_point(ExtValue(1), ExtValue(1)), Side::Left) ==
        discrete_topology(2));
  CHECK(ball_cover_topology(sym3(ExtValue(1), ExtValue(2), ExtValue(1)), Side::Left) ==
        discrete_topology(3));
  CHECK_THROWS_AS(
      ball_cover_topology(WeightStructure({"x"}, WeightMatrix::Constant(1, 1, ExtValue(1))),
                          Side::Left),
      std::invalid_argument);
}

TEST_CASE("neighborhood topology on fixed structures") {
  const FiniteTopology left =
      neighborhood_topology(two_point(ExtValue(0), ExtValue(1)), Side::Left);
  CHECK(left.opens() == std::vector<PointSet>{0b00, 0b10, 0b11});

  CHECK(neighborhood_topology(two_point(ExtValue(2), ExtValue(1)), Side::Left) ==
        discrete_topology(2));

  const WeightStructure partition_like = sym3(ExtValue(0), kInf, kInf);
  const FiniteTopology blocks = neighborhood_topology(partition_like, Side::Left);
  CHECK(blocks.opens() == std::vector<PointSet>{0b000, 0b100, 0b011, 0b111});
}

TEST_CASE("right-side topologies come from the dual") {
  const WeightStructure d = two_point(ExtValue(0), ExtValue(1));
  CHECK(neighborhood_topology(d, Side::Right) ==
        neighborhood_topology(dual(d), Side::Left));
  CHECK(ball_cover_topology(d, Side::Right) == ball_cover_topology(dual(d), Side::Left));
  CHECK(neighborhood_topology(d, Side::Right).opens() ==
        std::vector<PointSet>{0b00, 0b01, 0b11});
}

TEST_CASE("topology lattice operations") {
  const FiniteTopology a = FiniteTopology::from_opens(2, {0b00, 0b01, 0b11});
  const FiniteTopology b = FiniteTopology::from_opens(2, {0b00, 0b10, 0b11});
  CHECK(topo_meet(a, a) == a);
  CHECK(topo_join(a, a) == a);
  CHECK(topo_meet(discrete_topology(2), indiscrete_topology(2)) == indiscrete_topology(2));
  CHECK(topo_meet(a, b) == indiscrete_topology(2));
  CHECK(topo_join(a, b) == discrete_topology(2));
  CHECK(topo_join(a, discrete_topology(2)) == discrete_topology(2));
  CHECK_THROWS_AS(topo_meet(a, indiscrete_topology(3)), std::invalid_argument);
}

TEST_CASE("threshold radii capture every ball") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const std::uint64_t s = derive_seed(51, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const WeightStructure d = random_weight(n, kZero, pool, s);
    const std::vector<ExtValue> thresholds = ball_thresholds(d);

    // Dense radius sample: midpoints below, between and beyond thresholds.
    std::vector<ExtValue> dense;
    dense.push_back(midpoint(ExtValue(0), thresholds.front()));
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
      dense.push_back(midpoint(thresholds[i], thresholds[i + 1]));
    dense.push_back(thresholds.back() + ExtValue(3));

    for (Eigen::Index x = 0; x < n; ++x) {
      std::set<PointSet> at_thresholds, at_dense;
      for (const ExtValue& eps : thresholds)
        at_thresholds.insert(ball(d, x, eps, Side::Left).members);
      for (const ExtValue& eps : dense)
        at_dense.insert(ball(d, x, eps, Side::Left).members);
      CHECK(at_thresholds == at_dense);
    }
  }
}

TEST_CASE("neighborhood topology is coarser than the ball-cover topology") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    const std::uint64_t s = derive_seed(52, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const AxiomSet axioms = (s & 1) != 0 ? kZeroSym : kZero;
    const WeightStructure d = random_weight(n, axioms, pool, s);
    CHECK(ball_cover_topology(d, Side::Left).refines(neighborhood_topology(d, Side::Left)));
  }
}

TEST_CASE("neighborhood topology is order-preserving") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 500; ++trial) {
    const std::uint64_t s = derive_seed(53, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const WeightStructure d = random_weight(n, kZero, pool, s);
    const WeightStructure m = pointwise_join(d, random_weight(n, kZero, pool, s ^ 0x77));
    CHECK(neighborhood_topology(m, Side::Left).refines(neighborhood_topology(d, Side::Left)));
  }
}

TEST_CASE("under the triangle axiom the two maps agree and balls form a base") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    const std::uint64_t s = derive_seed(54, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const AxiomSet axioms = (s & 1) != 0 ? AxiomSet::metric() : kZeroTri;
    const WeightStructure d = random_weight(n, axioms, pool, s);
    CHECK(ball_cover_topology(d, Side::Left) == neighborhood_topology(d, Side::Left));

    std::vector<PointSet> balls;
    for (const ExtValue& eps : ball_thresholds(d))
      for (Eigen::Index x = 0; x < n; ++x)
        balls.push_back(ball(d, x, eps, Side::Left).members);
    CHECK(classify(SetCollection(static_cast<int>(n), std::move(balls))).is_base);
  }
}

TEST_CASE("ball-cover topology preserves binary joins of triangle structures") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    const std::uint64_t s = derive_seed(55, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const AxiomSet axioms = (s & 1) != 0 ? AxiomSet::metric() : kZeroTri;
    const WeightStructure d = random_weight(n, axioms, pool, s);
    const WeightStructure m = random_weight(n, axioms, pool, s ^ 0x99);
    CHECK(ball_cover_topology(pointwise_join(d, m), Side::Left) ==
          topo_join(ball_cover_topology(d, Side::Left), ball_cover_topology(m, Side::Left)));
  }
}

TEST_CASE("neighborhood topology preserves binary meets") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    const std::uint64_t s = derive_seed(56, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const AxiomSet axioms = (s & 1) != 0 ? kZeroSym : kZero;
    const WeightStructure d = random_weight(n, axioms, pool, s);
    const WeightStructure m = random_weight(n, axioms, pool, s ^ 0xaa);
    CHECK(neighborhood_topology(pointwise_meet(d, m), Side::Left) ==
          topo_meet(neighborhood_topology(d, Side::Left),
                    neighborhood_topology(m, Side::Left)));
  }
}

TEST_CASE("both topology maps are scale-invariant") {
  const std::vector<ExtValue> pool = default_value_pool();
  const std::vector<Rational> factors = {Rational(1, 2), Rational(2), Rational(7, 3)};
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const std::uint64_t s = derive_seed(57, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const WeightStructure d = random_weight(n, kZero, pool, s);
    const Rational& c = factors[trial % factors.size()];
    CHECK(ball_cover_topology(scale(d, c), Side::Left) ==
          ball_cover_topology(d, Side::Left));
    CHECK(neighborhood_topology(scale(d, c), Side::Left) ==
          neighborhood_topology(d, Side::Left));
  }
}

TEST_CASE("conjugate pair: joined topologies match the symmetrized structure") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    const std::uint64_t s = derive_seed(58, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 4);
    const WeightStructure d = random_weight(n, kZeroTri, pool, s);
    CHECK(topo_join(ball_cover_topology(d, Side::Left),
                    ball_cover_topology(dual(d), Side::Left)) ==
          ball_cover_topology(symmetrize_max(d), Side::Left));
  }
}

TEST_CASE("partition structures generate their block topology") {
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& p : all_partitions(n)) {
      const WeightStructure w = partition_structure(p, default_labels(n));
      const FiniteTopology tau = ball_cover_topology(w, Side::Left);

      // expected: opens are exactly the unions of blocks
      std::vector<PointSet> block_masks(static_cast<std::size_t>(p.block_count()), 0);
      for (int i = 0; i < n; ++i)
        block_masks[static_cast<std::size_t>(p.block_of(i))] |= PointSet{1} << i;
      std::vector<PointSet> opens;
      for (PointSet pick = 0; pick < (PointSet{1} << p.block_count()); ++pick) {
        PointSet open = 0;
        for (int b = 0; b < p.block_count(); ++b)
          if (pick & (PointSet{1} << b)) open |= block_masks[static_cast<std::size_t>(b)];
        opens.push_back(open);
      }
      CHECK(tau == FiniteTopology::from_opens(n, std::move(opens)));
      CHECK(neighborhood_topology(w, Side::Left) == tau);
    }
  }
}

TEST_CASE("alexandrov characterization matches the literal definition") {
  const std::vector<ExtValue> pool = default_value_pool();
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const std::uint64_t s = derive_seed(59, trial);
    const auto n = static_cast<Eigen::Index>(2 + s % 5);  // up to 6 points
    const AxiomSet axioms = (s & 1) != 0 ? kZeroSym : kZero;
    const WeightStructure d = random_weight(n, axioms, pool, s);
    CHECK(neighborhood_topology(d, Side::Left) ==
          neighborhood_topology_by_definition(d, Side::Left));
  }
}

TEST_CASE("topology caps are enforced") {
  std::vector<std::string> labels;
  for (int i = 0; i < 17; ++i) labels.push_back("p" + std::to_string(i));
  const WeightStructure big = top_metric(labels);
  CHECK_THROWS_AS(ball_cover_topology(big, Side::Left), std::invalid_argument);
  CHECK_THROWS_AS(neighborhood_topology(big, Side::Left), std::invalid_argument);
  // a raised cap admits the same structure
  CHECK(ball_cover_topology(big, Side::Left, 17).ground_size() == 17);
}

TEST_CASE("topology text output") {
  const FiniteTopology t = FiniteTopology::from_opens(3, {0b000, 0b010, 0b011, 0b111});
  CHECK(to_text(t) == "n=3\n000\n010\n110\n111\n");
}
