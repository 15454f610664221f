#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "sdlab/lab/census.hpp"
#include "sdlab/lab/dimension.hpp"
#include "sdlab/poly/parser.hpp"

namespace sdlab::lab {
namespace {

PointSystem system_in_x(const FieldTower& tower, int slots, const std::vector<std::string>& equations) {
  PointSystem sys;
  const poly::VariableDeclaration decl{slots, -1, 0};
  const auto mode = CoefficientMode::finite_field(tower.base());
  for (const auto& text : equations) sys.equations.push_back(poly::parse_poly(text, decl, mode));
  for (int i = 1; i <= slots; ++i) sys.slots.push_back(Variable::X(static_cast<std::uint32_t>(i)));
  return sys;
}

TEST(PointCount, AgreesWithModularBruteForce) {
  const FieldTower t7(7, 1);
  EXPECT_EQ(count_points(system_in_x(t7, 2, {"X1^2 + X2^2 - 1"}), t7, 1),
            oracle::count_mod_p(7, 2, [](const auto& x) { return (x[0] * x[0] + x[1] * x[1] + 6) % 7; }));
  const FieldTower t5(5, 1);
  EXPECT_EQ(count_points(system_in_x(t5, 3, {"X1*X2*X3 - X1 + 2"}), t5, 1),
            oracle::count_mod_p(5, 3, [](const auto& x) { return (x[0] * x[1] * x[2] + 4 * x[0] + 2) % 5; }));
  const FieldTower t11(11, 1);
  EXPECT_EQ(count_points(system_in_x(t11, 2, {"X2 - X1^3 - 3*X1", "X1^2 - 4"}), t11, 1),
            oracle::count_mod_p(11, 2, [](const auto& x) {
              const std::uint32_t a = (x[1] + 11 * 11 * 11 - (x[0] * x[0] * x[0] + 3 * x[0]) % 1331) % 11;
              const std::uint32_t b = (x[0] * x[0] + 7) % 11;
              return a == 0 && b == 0 ? 0u : 1u;
            }));
}

TEST(PointCount, AgreesWithF9BruteForce) {
  const FieldTower t3(3, 2);
  const auto sys = system_in_x(t3, 2, {"X1^2 + X2^2 - 1"});
  std::uint64_t expected = 0;
  const auto all = oracle::F9::all();
  for (auto x : all) {
    for (auto y : all) {
      if (x * x + y * y + oracle::F9{2, 0} == oracle::F9{}) ++expected;
    }
  }
  EXPECT_EQ(count_points(sys, t3, 2), expected);
  // x^2 + 1 has no root in F_3 but two in F_9
  const auto roots = system_in_x(t3, 1, {"X1^2 + 1"});
  EXPECT_EQ(count_points(roots, t3, 1), 0u);
  EXPECT_EQ(count_points(roots, t3, 2), 2u);
}

TEST(PointCount, EnumerationMatchesCountAndCap) {
  const FieldTower t5(5, 2);
  const auto sys = system_in_x(t5, 2, {"X1*X2 - 1"});
  for (int e = 1; e <= 2; ++e) {
    const auto points = enumerate_points(sys, t5, e);
    EXPECT_EQ(points.size(), count_points(sys, t5, e));
  }
  EXPECT_EQ(count_points(sys, t5, 2), 24u);
  EXPECT_THROW(count_points(sys, t5, 2, 100), CapExceeded);
}

TEST(Dimension, FromCount) {
  EXPECT_EQ(dimension_from_count(125, 5, 1), poly::Degree(3));
  EXPECT_EQ(dimension_from_count(1, 5, 3), poly::Degree(0));
  EXPECT_TRUE(dimension_from_count(0, 5, 2).is_neg_inf());
  EXPECT_EQ(dimension_from_count(2 * 25 - 1, 5, 2), poly::Degree(1));
}

class OracleInstances : public ::testing::Test {
 protected:
  static nlohmann::json load() {
    std::ifstream in(SDLAB_DATA_DIR "/oracles/dimension_instances.json");
    return nlohmann::json::parse(in);
  }
};

TEST_F(OracleInstances, EstimatorIsExactAndStable) {
  const auto doc = load();
  const int max_e = doc["max_e"];
  ASSERT_EQ(max_e, 3);
  ASSERT_GE(doc["instances"].size(), 20u);
  for (const auto& inst : doc["instances"]) {
    const std::uint32_t p = inst["p"];
    const int slots = inst["slots"];
    ASSERT_GE(p, 5u);
    ASSERT_LE(slots, 3);
    const FieldTower tower(p, max_e);
    const auto est = estimate_dimension(system_in_x(tower, slots, inst["equations"]), tower, max_e);
    EXPECT_TRUE(est.stable) << inst["name"];
    EXPECT_EQ(est.dim, poly::Degree(inst["dim"].get<int>())) << inst["name"];
  }
}

TEST(Dimension, SimplexPointsInChartOrder) {
  const auto f5 = poly::FiniteField::build(5, 1);
  const auto pts = simplex_points(2, *f5);
  EXPECT_EQ(pts.size(), 25u);
  for (const auto& y : pts) {
    std::uint32_t sum = 0;
    for (auto c : y) sum += c;
    EXPECT_EQ(sum % 5, 1u);
  }
  EXPECT_EQ(pts.front(), (std::vector<std::uint32_t>{1, 0, 0}));
}

VarietySpec diagonal(std::uint32_t p) {
  return VarietySpec::parse(1, 1, 0, {"T0 - T1"}, poly::FiniteField::build(p, 1));
}

TEST(FaceCondition, DiagonalMissesTheVertices) {
  const FieldTower tower(7, 2);
  const auto report = face_condition_check(diagonal(7), tower, 2);
  EXPECT_EQ(report.status, CheckStatus::pass);
  ASSERT_EQ(report.faces.size(), 2u);
  for (const auto& f : report.faces) EXPECT_TRUE(f.empty);
  EXPECT_EQ(report.total.dim, poly::Degree(1));
}

TEST(FaceCondition, VertexContainingCycleFails) {
  const FieldTower tower(5, 2);
  const auto v = VarietySpec::parse(1, 1, 0, {"T1"}, tower.base());
  const auto report = face_condition_check(v, tower, 2);
  EXPECT_EQ(report.status, CheckStatus::fail);
}

TEST(Equidim, DiagonalFibers) {
  const FieldTower tower(5, 2);
  const auto report = equidim_check(diagonal(5), tower, 2);
  EXPECT_EQ(report.fibers, 5u);
  EXPECT_EQ(report.empty_fibers, 4u);  // only t0 = t1 = 1/2 lies on it
  EXPECT_EQ(report.bad_fibers, 1u);    // and there the fiber is all of A^1
  EXPECT_EQ(report.status, CheckStatus::fail);
}

TEST(Pullback, AlongIdentityIsTheSameVariety) {
  const auto v = diagonal(7);
  const auto id = simplex::identity_map(1, v.mode());
  const auto back = pullback_variety(v, id);
  EXPECT_EQ(back.equations, v.equations);
  const auto symbolic = simplex::subdivision_map(1, simplex::Permutation::identity(1),
                                                 simplex::CenterFamily::symbolic(1));
  EXPECT_THROW(pullback_variety(v, symbolic.converted(v.mode())), std::invalid_argument);
}

class DiagonalCensus : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(DiagonalCensus, MatchesOracleForEveryCenter) {
  const std::uint32_t q = GetParam();
  CensusConfig cfg;
  cfg.N = 1;
  cfg.max_e = 2;
  const auto sigmas = simplex::Permutation::all(1);
  const auto report = bad_center_census(diagonal(q), cfg, sigmas);
  std::uint64_t bad_id = 0;
  std::uint64_t bad_swap = 0;
  std::uint64_t joint = 0;
  for (std::uint32_t c0 = 0; c0 < q; ++c0) {
    for (std::uint32_t c1 = 0; c1 < q; ++c1) {
      const bool a = oracle::diagonal_center_is_bad(q, c0, c1, false);
      const bool b = oracle::diagonal_center_is_bad(q, c0, c1, true);
      bad_id += a;
      bad_swap += b;
      joint += a || b;
    }
  }
  EXPECT_EQ(report.families, std::uint64_t{q} * q);
  EXPECT_TRUE(report.exhaustive);
  ASSERT_EQ(report.per_sigma.size(), 2u);
  EXPECT_EQ(report.per_sigma[0].bad, bad_id);
  EXPECT_EQ(report.per_sigma[1].bad, bad_swap);
  EXPECT_EQ(report.joint_bad, joint);
  EXPECT_EQ(report.joint_unstable, 0u);
  EXPECT_EQ(bad_id, q - 1);
  EXPECT_EQ(joint, q);
}

INSTANTIATE_TEST_SUITE_P(Fields, DiagonalCensus, ::testing::Values(5u, 7u, 11u));

TEST(Census, JointFractionDecreasesWithQ) {
  CensusConfig cfg;
  cfg.N = 1;
  cfg.max_e = 2;
  mpq_class previous(2);
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const auto report = bad_center_census(diagonal(q), cfg, simplex::Permutation::all(1));
    const mpq_class fraction(static_cast<unsigned long>(report.joint_bad), static_cast<unsigned long>(report.families));
    EXPECT_LT(fraction, previous);
    previous = fraction;
  }
}

TEST(Census, CenterSpaceIsDeterministic) {
  CensusConfig cfg;
  cfg.N = 2;
  const CenterSpace space(2, 1, cfg, poly::FiniteField::build(5, 1));
  EXPECT_EQ(space.parameter_count(), 3u * 3u);
  EXPECT_EQ(space.size(), std::optional<std::uint64_t>(1953125));
  EXPECT_EQ(space.family(12345).specialization(), space.family(12345).specialization());
  EXPECT_NE(space.family(1).specialization(), space.family(2).specialization());
  EXPECT_EQ(space.sample(9, 3).specialization(), space.sample(9, 3).specialization());
  EXPECT_NE(space.sample(9, 3).specialization(), space.sample(9, 4).specialization());
  EXPECT_TRUE(space.family(777).is_barycentric());
}

TEST(Census, SampledPlanHonoursSampleSize) {
  CensusConfig cfg;
  cfg.N = 1;
  cfg.max_e = 2;
  cfg.plan = SamplePlan::sampled;
  cfg.sample_size = 10;
  cfg.seed = 4;
  const auto a = bad_center_census(diagonal(7), cfg, simplex::Permutation::all(1));
  const auto b = bad_center_census(diagonal(7), cfg, simplex::Permutation::all(1));
  EXPECT_EQ(a.families, 10u);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.joint_bad, b.joint_bad);
}

// C(X) = a + b X vanishes on W = graph(f) over F_9 iff f(x) = a + b x on F_9.
std::uint64_t brute_force_vanishing(const std::function<oracle::F9(oracle::F9)>& f) {
  std::uint64_t count = 0;
  const auto all = oracle::F9::all();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      bool vanishes = true;
      for (auto x : all) vanishes = vanishes && f(x) == oracle::F9{a, 0} + oracle::F9{b, 0} * x;
      count += vanishes;
    }
  }
  return count;
}

TEST(Vanishing, GraphsAgreeWithF9BruteForce) {
  const auto f3 = poly::FiniteField::build(3, 1);
  const auto square = vanishing_census(VarietySpec::parse(1, 1, 0, {"T1 - X1^2"}, f3), 1, 2);
  EXPECT_EQ(square.candidates, 9u);
  EXPECT_EQ(square.vanishing, brute_force_vanishing([](oracle::F9 x) { return x * x; }));
  EXPECT_EQ(square.vanishing, 0u);
  EXPECT_TRUE(square.within_bound);

  const auto linear = vanishing_census(VarietySpec::parse(1, 1, 0, {"T1 - X1"}, f3), 1, 2);
  EXPECT_EQ(linear.vanishing, brute_force_vanishing([](oracle::F9 x) { return x; }));
  EXPECT_EQ(linear.vanishing, 1u);
  EXPECT_TRUE(linear.within_bound);
}

TEST(Vanishing, EmptyWMakesEverythingVanish) {
  const auto f3 = poly::FiniteField::build(3, 1);
  const auto report = vanishing_census(VarietySpec::parse(1, 1, 0, {"X1^2 - X1 - 1", "X1"}, f3), 1, 2);
  EXPECT_TRUE(report.w_empty);
  EXPECT_EQ(report.vanishing, report.candidates);
}

TEST(HomotopyFace, DiagonalPullbacksKeepTheFaceCondition) {
  CensusConfig cfg;
  cfg.N = 1;
  cfg.max_e = 2;
  cfg.plan = SamplePlan::sampled;
  cfg.sample_size = 3;
  cfg.seed = 7;
  const auto report = homotopy_face_condition_check(diagonal(5), cfg);
  EXPECT_EQ(report.families, 3u);
  EXPECT_EQ(report.maps_per_family, 3u);  // 1! + 2!
  EXPECT_EQ(report.passing + report.unstable, report.families);
}

}  // namespace
}  // namespace sdlab::lab
