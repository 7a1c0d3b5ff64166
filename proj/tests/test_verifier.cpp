#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace su21;
using G = Generator;

namespace {

ModuleParams cone(GaussianRational c, long t) { return ModuleParams::cone(std::move(c), t); }

bool has_failure(const VerificationReport& r, const std::string& relation) {
  for (const auto& f : r.failures)
    if (f.relation == relation) return true;
  return false;
}

}  // namespace

TEST(Verifier, CommutatorsOnTheMinusOneCone) {
  VerificationReport r = check_commutators(build(cone(-1, 0), 8));
  EXPECT_TRUE(r.verified());
  EXPECT_GT(r.checked, 0u);
  EXPECT_GT(r.skipped_boundary, 0u);
}

TEST(Verifier, HBetaEigenvalueFromXBetaYBeta) {
  TruncatedModule mod = build(cone(GaussianRational(Rational(1, 2), Rational(3)), -1), 7);
  for (const BasisIndex& v : mod.basis()) {
    if (!mod.is_interior(v, 2)) continue;
    Vector lhs = mod.apply(G::X_beta, mod.row(G::Y_beta, v)).result - mod.apply(G::Y_beta, mod.row(G::X_beta, v)).result;
    const GaussianRational expected(Rational(v.m() - v.n() - 1 + 2 * v.k, 2));
    EXPECT_EQ(lhs, (expected.is_zero() ? Vector{} : Vector{{v, expected}})) << v.str();
  }
}

TEST(Verifier, XAlphaBetaIsTheCommutatorOnFirstVectors) {
  TruncatedModule mod = build(cone(Rational(7, 4), 3), 7);
  for (const KType& v : members(mod.support(), 5)) {
    const BasisIndex v1(v, 1);
    Vector comm = mod.apply(G::X_alpha, mod.row(G::X_beta, v1)).result -
                  mod.apply(G::X_beta, mod.row(G::X_alpha, v1)).result;
    EXPECT_EQ(comm, mod.row(G::X_alphabeta, v1));
  }
}

TEST(Verifier, DetectsACorruptedCoefficient) {
  TruncatedModule good = build(cone(-1, 0), 6);
  nlohmann::json j = module_to_json(good);
  // Double the first nonzero X_beta coefficient.
  for (auto& row : j["action"]["X_beta"]) {
    if (row["terms"].empty()) continue;
    GaussianRational c(Rational::parse(row["terms"][0][1].get<std::string>()), Rational(0));
    row["terms"][0][1] = (c * GaussianRational(2)).re().str();
    break;
  }
  VerificationReport r = check_commutators(module_from_json(j));
  EXPECT_FALSE(r.verified());
}

TEST(Verifier, VertexRelationAtTheConeVertex) {
  // bc - ad = t at V_{1,2t}.
  std::mt19937 rng(su21::testing::kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    ConeParams cp{su21::testing::random_gaussian(rng), su21::testing::random_int(rng, -6, 6)};
    ProductPair pp = products(cp, {0, 0});
    EXPECT_EQ(pp.bc - pp.ad, GaussianRational(cp.t));
    EXPECT_TRUE(check_coefficient_relations(ModuleParams::cone(cp.c, cp.t), 10).verified());
  }
}

TEST(Verifier, TrivialWall) {
  EXPECT_EQ(products(ConeParams{0, 0}, {0, 0}).ad, GaussianRational(0));
  // The one-dimensional constituent satisfies every relation on its own.
  EXPECT_TRUE(check_coefficient_relations(cone(0, 0), SupportRegion::point(0), 6).verified());
}

TEST(Verifier, GaugeBdAtTheVertex) {
  const ConeParams cp{1, 0};
  const CoefficientQuad here = coeff_quad(cp, {0, 0});
  // n = 1: (n+1) b_{1,0} d_{2,-3} = n d_{1,0} b_{0,..}; the right side vanishes with d_{1,0} = 0.
  EXPECT_EQ(GaussianRational(2) * here.b * coeff_quad(cp, {0, 1}).d, GaussianRational(0));
  EXPECT_TRUE(check_coefficient_relations(cone(1, 0), 8).verified());
}

TEST(Verifier, RelationsFailOnANonClosedRegion) {
  VerificationReport r = check_coefficient_relations(cone(-1, 0), SupportRegion::strip_q(0, 0), 8);
  EXPECT_FALSE(r.verified());
  EXPECT_TRUE(has_failure(r, "edge_vanishing_bc"));
}

TEST(VerifierProperty, RandomPointsCommutatorClean) {
  std::mt19937 rng(su21::testing::kSeed + 5);
  for (int trial = 0; trial < 10; ++trial) {
    ModuleParams p = cone(su21::testing::random_gaussian(rng, 6, 4), su21::testing::random_int(rng, -5, 5));
    VerificationReport r = check_commutators(build(p, 12));
    EXPECT_TRUE(r.verified()) << p.str() << " " << (r.failures.empty() ? "" : r.failures[0].relation);
  }
}

TEST(VerifierProperty, ConstituentSupportsCommutatorClean) {
  struct Case {
    ModuleParams params;
    SupportRegion region;
  };
  std::vector<Case> cases{
      {cone(Rational(-1, 2), 1), SupportRegion::strip_q(1, 0)},
      {ModuleParams::vertex(2, 3), SupportRegion::ray_pos(3)},
      {ModuleParams::vertex(4, 3), SupportRegion::vertex_cone(4, 3)},
      {ModuleParams::vertex(2, -3), SupportRegion::ray_neg(-3)},
  };
  for (const auto& c : cases) {
    EXPECT_TRUE(check_commutators(build(c.params, c.region, 12)).verified()) << c.region.str();
    EXPECT_TRUE(check_coefficient_relations(c.params, c.region, 12).verified()) << c.region.str();
  }
}

TEST(VerifierProperty, RelationsAndCommutatorsAgree) {
  // Every region built from a parameter point: the relation check and the
  // commutator check give the same verdict.
  std::mt19937 rng(su21::testing::kSeed + 6);
  for (int trial = 0; trial < 12; ++trial) {
    const long t = su21::testing::random_int(rng, -3, 3);
    const long l = su21::testing::random_int(rng, 0, 2);
    ModuleParams p = cone(Rational(su21::testing::random_int(rng, -8, 2), 2), t);
    for (const SupportRegion& region : {SupportRegion::full_cone(t), SupportRegion::strip_q(t, l)}) {
      const bool relations = check_coefficient_relations(p, region, 8).verified();
      const bool commutators = check_commutators(build(p, region, 10)).verified();
      if (relations) {
        EXPECT_TRUE(commutators) << p.str() << " " << region.str();
      }
    }
  }
}

TEST(Verifier, ReportJson) {
  nlohmann::json j = check_coefficient_relations(cone(-1, 0), SupportRegion::strip_q(0, 0), 4);
  EXPECT_FALSE(j["verified"].get<bool>());
  EXPECT_FALSE(j["failures"].empty());
  EXPECT_TRUE(j["failures"][0].contains("discrepancy"));
}
