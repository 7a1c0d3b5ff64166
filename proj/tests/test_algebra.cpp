#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace su21;
using G = Generator;

namespace {

AlgebraElement random_element(std::mt19937& rng) {
  AlgebraElement x;
  for (Generator g : kIndependentGenerators) x.add(g, su21::testing::random_gaussian(rng, 4, 3));
  return x;
}

// Block matrix J = diag(1, 1, -1) defining su(2,1): X^* J + J X = 0.
bool in_real_form(const Matrix3& m) {
  const int sign[3] = {1, 1, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // (X^* J)_{ij} = conj(X_{ji}) J_jj, (J X)_{ij} = J_ii X_ij
      if (!(m[j][i].conj() * GaussianRational(sign[j]) + GaussianRational(sign[i]) * m[i][j]).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST(Algebra, ZExpandsToHAlphaPlusTwoHBeta) {
  AlgebraElement z(G::Z);
  EXPECT_EQ(z.coefficient(G::H_alpha), GaussianRational(1));
  EXPECT_EQ(z.coefficient(G::H_beta), GaussianRational(2));
  EXPECT_EQ(z.matrix(), defining_matrix(G::Z));
}

TEST(Algebra, DocumentedBrackets) {
  EXPECT_EQ(bracket(G::X_alpha, G::X_beta), AlgebraElement(G::X_alphabeta));
  EXPECT_EQ(bracket(G::Y_alpha, G::Y_beta), -GaussianRational(1) * AlgebraElement(G::Y_alphabeta));
  EXPECT_EQ(bracket(G::X_alpha, G::Y_alpha), AlgebraElement(G::H_alpha));
  EXPECT_EQ(bracket(G::X_beta, G::Y_beta), AlgebraElement(G::H_beta));
  EXPECT_EQ(bracket(G::X_alphabeta, G::Y_alphabeta), AlgebraElement(G::H_alpha) + AlgebraElement(G::H_beta));
  EXPECT_EQ(bracket(G::H_alpha, G::X_alpha), GaussianRational(2) * AlgebraElement(G::X_alpha));
  EXPECT_EQ(bracket(G::H_beta, G::X_alpha), GaussianRational(-1) * AlgebraElement(G::X_alpha));
}

TEST(Algebra, ZCommutesWithTheSu2Factor) {
  for (G g : {G::H_alpha, G::X_alpha, G::Y_alpha}) EXPECT_TRUE(bracket(G::Z, g).is_zero());
}

TEST(AlgebraProperty, BracketMatchesMatrixCommutator) {
  std::mt19937 rng(su21::testing::kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement x = random_element(rng), y = random_element(rng);
    EXPECT_EQ(bracket(x, y).matrix(), commutator(x.matrix(), y.matrix()));
  }
}

TEST(AlgebraProperty, AntisymmetryAndJacobi) {
  std::mt19937 rng(su21::testing::kSeed + 7);
  for (int trial = 0; trial < 60; ++trial) {
    AlgebraElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
    EXPECT_EQ(bracket(x, y), GaussianRational(-1) * bracket(y, x));
    EXPECT_TRUE((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST(AlgebraProperty, MatrixRoundTrip) {
  std::mt19937 rng(su21::testing::kSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement x = random_element(rng);
    EXPECT_EQ(AlgebraElement::from_matrix(x.matrix()), x);
  }
}

TEST(Algebra, RealFormBasisLiesInSu21AndIsIndependent) {
  auto basis = real_form_basis();
  ASSERT_EQ(basis.size(), 8u);
  for (const auto& e : basis) EXPECT_TRUE(in_real_form(e.element.matrix())) << e.name;
  // Real independence: the 16 real coordinates of the 8 matrices have rank 8.
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : basis) {
    std::vector<Rational> row;
    Matrix3 m = e.element.matrix();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        row.push_back(m[i][j].re());
        row.push_back(m[i][j].im());
      }
    rows.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rows[0].size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  EXPECT_EQ(rank, 8u);
}

TEST(Algebra, GeneratorNamesRoundTrip) {
  for (G g : kAllGenerators) EXPECT_EQ(generator_from_string(to_string(g)), g);
  EXPECT_FALSE(generator_from_string("H_gamma").has_value());
}
