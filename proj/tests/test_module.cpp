#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace su21;
using G = Generator;

namespace {

ModuleParams cone(GaussianRational c, long t) { return ModuleParams::cone(std::move(c), t); }

GaussianRational coeff(const Vector& v, const BasisIndex& idx) {
  auto it = v.find(idx);
  return it == v.end() ? GaussianRational() : it->second;
}

}  // namespace

TEST(Module, TrivialModuleWall) {
  TruncatedModule mod = build(cone(0, 0), 1);
  ASSERT_EQ(mod.basis().size(), 1u);
  // a_{1,0} = 0: X_{alpha+beta} kills v_{1,0}^1.
  EXPECT_TRUE(mod.apply(G::X_alphabeta, unit_vector({1, 0, 1})).result.empty());
}

TEST(Module, XAlphaBetaOnTheFirstBasisVectorIsSingleTerm) {
  const ConeParams cp{GaussianRational(Rational(-7, 3), Rational(1, 2)), 2};
  TruncatedModule mod = build(ModuleParams::cone(cp.c, cp.t), 6);
  for (const KType& v : members(mod.support(), 5)) {
    Vector image = mod.row(G::X_alphabeta, {v, 1});
    ConeCoord x = *from_ktype(cp.t, v);
    ASSERT_EQ(image.size(), 1u);
    EXPECT_EQ(coeff(image, {KType(v.n + 1, v.m + 3), 1}), coeff_a(cp, x.p));
  }
}

TEST(Module, Su2ConventionsWithinAKType) {
  TruncatedModule mod = build(cone(-1, 0), 6);
  for (const BasisIndex& v : mod.basis()) {
    const long n = v.n(), k = v.k;
    EXPECT_EQ(coeff(mod.row(G::H_alpha, v), v), GaussianRational(n + 1 - 2 * k));
    Vector z = mod.row(G::Z, v);
    EXPECT_EQ(coeff(z, v), GaussianRational(v.m()));
    if (k > 1) {
      EXPECT_EQ(coeff(mod.row(G::X_alpha, v), {v.ktype, k - 1}), GaussianRational(-(k - 1)));
    }
    if (k < n) {
      EXPECT_EQ(coeff(mod.row(G::Y_alpha, v), {v.ktype, k + 1}), GaussianRational(-(n - k)));
    }
    // [X_alpha, Y_alpha] v^k = (n + 1 - 2k) v^k
    Vector xy = mod.apply(G::X_alpha, mod.row(G::Y_alpha, v)).result - mod.apply(G::Y_alpha, mod.row(G::X_alpha, v)).result;
    EXPECT_EQ(coeff(xy, v), GaussianRational(n + 1 - 2 * k));
    EXPECT_LE(xy.size(), 1u);
  }
}

TEST(Module, ApplyExamples) {
  TruncatedModule mod = build(cone(Rational(-3, 2), 1), 7);
  const BasisIndex v(5, 2, 2);
  ASSERT_TRUE(mod.is_basis(v));
  EXPECT_EQ(mod.apply(G::H_alpha, unit_vector(v)).result, (Vector{{v, GaussianRational(2)}}));
  EXPECT_EQ(mod.apply(G::Z, unit_vector(v)).result, (Vector{{v, GaussianRational(2)}}));
  AlgebraElement a_ab = AlgebraElement(G::X_alphabeta) + AlgebraElement(G::Y_alphabeta);
  Vector sum = mod.apply(G::X_alphabeta, unit_vector(v)).result;
  axpy(sum, GaussianRational(1), mod.apply(G::Y_alphabeta, unit_vector(v)).result);
  EXPECT_EQ(mod.apply(a_ab, unit_vector(v)).result, sum);
}

TEST(Module, ApplyFlagsTruncationAndRejectsForeignIndices) {
  TruncatedModule mod = build(cone(-1, 0), 3);
  Applied top = mod.apply(G::X_alphabeta, unit_vector({3, 0, 1}));
  EXPECT_TRUE(top.truncated);
  Applied low = mod.apply(G::X_alphabeta, unit_vector({1, 0, 1}));
  EXPECT_FALSE(low.truncated);
  EXPECT_THROW(mod.apply(G::H_alpha, unit_vector({4, 3, 1})), InvalidBasisIndex);
  EXPECT_THROW(mod.apply(G::H_alpha, unit_vector({2, 1, 1})), InvalidBasisIndex);
  EXPECT_THROW(BasisIndex(2, 3, 3), InvalidBasisIndex);
}

TEST(ModuleProperty, ApplyIsLinear) {
  std::mt19937 rng(su21::testing::kSeed);
  TruncatedModule mod = build(cone(GaussianRational(Rational(1, 3), Rational(2)), -2), 6);
  const auto& basis = mod.basis();
  for (int trial = 0; trial < 60; ++trial) {
    Vector u, w;
    for (int i = 0; i < 4; ++i) {
      add_term(u, basis[su21::testing::random_int(rng, 0, basis.size() - 1)], su21::testing::random_gaussian(rng));
      add_term(w, basis[su21::testing::random_int(rng, 0, basis.size() - 1)], su21::testing::random_gaussian(rng));
    }
    AlgebraElement x, y;
    for (G g : kIndependentGenerators) {
      x.add(g, su21::testing::random_gaussian(rng, 3, 2));
      y.add(g, su21::testing::random_gaussian(rng, 3, 2));
    }
    GaussianRational s = su21::testing::random_gaussian(rng);
    Vector uw = u;
    axpy(uw, s, w);
    Vector expected = mod.apply(x, u).result;
    axpy(expected, s, mod.apply(x, w).result);
    EXPECT_EQ(mod.apply(x, uw).result, expected);
    Vector expected2 = mod.apply(x, u).result;
    axpy(expected2, s, mod.apply(y, u).result);
    EXPECT_EQ(mod.apply(x + s * y, u).result, expected2);
  }
}

TEST(ModuleProperty, EigenvalueInvariants) {
  std::mt19937 rng(su21::testing::kSeed + 1);
  for (int trial = 0; trial < 5; ++trial) {
    TruncatedModule mod =
        build(cone(su21::testing::random_gaussian(rng), su21::testing::random_int(rng, -5, 5)), 7);
    for (const BasisIndex& v : mod.basis()) {
      const GaussianRational h(v.n() + 1 - 2 * v.k);
      EXPECT_EQ(mod.apply(G::H_alpha, unit_vector(v)).result, (h.is_zero() ? Vector{} : Vector{{v, h}}));
      const GaussianRational hb(Rational(v.m() - v.n() - 1 + 2 * v.k, 2));
      EXPECT_EQ(mod.apply(G::H_beta, unit_vector(v)).result, (hb.is_zero() ? Vector{} : Vector{{v, hb}}));
      EXPECT_EQ(mod.apply(G::Z, unit_vector(v)).result,
                (v.m() == 0 ? Vector{} : Vector{{v, GaussianRational(v.m())}}));
    }
  }
}

TEST(ModuleProperty, ClosureOnConstituentSupports) {
  struct Case {
    ModuleParams params;
    SupportRegion region;
  };
  std::vector<Case> cases{
      {cone(-1, 0), SupportRegion::full_cone(0)},
      {cone(Rational(-1, 2), 1), SupportRegion::strip_q(1, 0)},
      {cone(Rational(-1, 2), -1), SupportRegion::strip_p(-1, 0)},
      {cone(0, 0), SupportRegion::point(0)},
      {cone(-2, 4), SupportRegion::strip_q(4, 0)},
      {cone(Rational(-5, 2), 4), SupportRegion::strip_q(4, 1)},
  };
  for (const auto& c : cases) {
    TruncatedModule mod = build(c.params, c.region, 10);
    EXPECT_EQ(mod.dropped_terms(), 0u) << c.region.str();
    for (const BasisIndex& v : mod.basis()) {
      if (v.n() > 9) continue;
      for (G g : kAllGenerators) {
        for (const auto& [dst, value] : mod.row(g, v)) EXPECT_TRUE(mod.is_basis(dst)) << dst.str();
      }
    }
  }
}

TEST(ModuleProperty, KRecursionReproducesPrintedRows) {
  // From Y_alpha v^k = -(n-k) v^{k+1}:
  //   X_{ab} v^{k+1} = -1/(n-k) * (Y_alpha X_{ab} v^k - [Y_alpha, X_{ab}] v^k).
  TruncatedModule mod = build(cone(GaussianRational(Rational(2, 3), Rational(-1)), 1), 7);
  const AlgebraElement br = bracket(G::Y_alpha, G::X_alphabeta);
  for (const BasisIndex& v : mod.basis()) {
    if (v.n() > 5 || v.k == v.n()) continue;
    const long n = v.n(), k = v.k;
    Vector derived = mod.apply(G::Y_alpha, mod.row(G::X_alphabeta, v)).result -
                     mod.apply(br, unit_vector(v)).result;
    Vector scaled;
    axpy(scaled, GaussianRational(Rational(-1, n - k)), derived);
    EXPECT_EQ(scaled, mod.row(G::X_alphabeta, {v.ktype, k + 1})) << v.str();
  }
}

TEST(Module, VertexParamsNeedEnoughDepth) {
  EXPECT_THROW(build(ModuleParams::vertex(4, 3), 3), EmptyTruncation);
  TruncatedModule mod = build(ModuleParams::vertex(4, 3), 4);
  EXPECT_EQ(mod.basis().front(), BasisIndex(4, 3, 1));
  EXPECT_THROW(build(cone(-1, 0), SupportRegion::full_cone(1), 4), InvalidParameter);
}

TEST(Module, SupportOfExamples) {
  EXPECT_EQ(support_of(cone(Rational(-1, 2), 1), 10), SupportRegion::strip_q(1, 0));
  EXPECT_EQ(support_of(cone(-1, 0), 10), SupportRegion::full_cone(0));
  EXPECT_EQ(support_of(cone(-2, 4), 10), SupportRegion::strip_q(4, 0));
  EXPECT_EQ(support_of(cone(-1, 2), 10), SupportRegion::strip_q(2, 0));
  EXPECT_EQ(support_of(cone(0, 0), 10), SupportRegion::point(0));
  EXPECT_EQ(support_of(ModuleParams::vertex(4, 3), 12), SupportRegion::vertex_cone(4, 3));
  EXPECT_EQ(support_of(ModuleParams::vertex(2, 3), 12), SupportRegion::ray_pos(3));
  EXPECT_EQ(support_of(ModuleParams::vertex(2, -3), 12), SupportRegion::ray_neg(-3));
}

TEST(Module, SupportOfFiniteDimensionalParallelogram) {
  // t = q0 - p0 and 2c = p0 q0 + p0 + q0 close both edges.
  for (long p0 = 0; p0 <= 3; ++p0) {
    for (long q0 = 0; q0 <= 3; ++q0) {
      ModuleParams params = cone(Rational(p0 * q0 + p0 + q0, 2), q0 - p0);
      SupportRegion expected = (p0 == 0 && q0 == 0) ? SupportRegion::point(0)
                                                     : SupportRegion::parallelogram(q0 - p0, p0, q0);
      EXPECT_EQ(support_of(params, 12), expected) << p0 << "," << q0;
    }
  }
}

TEST(ModuleProperty, JsonRoundTrip) {
  for (const ModuleParams& p : {cone(GaussianRational(Rational(1, 2), Rational(-1, 3)), 2), ModuleParams::vertex(3, 2)}) {
    TruncatedModule mod = build(p, 6);
    nlohmann::json j = module_to_json(mod);
    TruncatedModule back = module_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.params(), mod.params());
    EXPECT_EQ(back.basis(), mod.basis());
    EXPECT_EQ(back.action(), mod.action());
    EXPECT_EQ(module_to_json(back), j);
  }
}

TEST(Module, JsonRejectsForeignTargets) {
  nlohmann::json j = module_to_json(build(cone(-1, 0), 3));
  j["action"]["H_alpha"][0]["terms"][0][0] = {7, 0, 1};
  EXPECT_THROW(module_from_json(j), InvalidBasisIndex);
  EXPECT_THROW(module_from_json(nlohmann::json::object()), ParseError);
}
