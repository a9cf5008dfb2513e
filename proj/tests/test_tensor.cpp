#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "curvop/models.hpp"
#include "curvop/tensor.hpp"
#include "oracles.hpp"

using namespace curvop;

TEST(Validate, ConstantCurvatureHasNoViolations) {
  EXPECT_TRUE(validate(constant_curvature<double>(3, 1.0), 1e-9).empty());
}

TEST(Validate, PerturbedComponentReportsOnlyAntisymmetry) {
  CurvatureTensord t = constant_curvature<double>(3, 1.0);
  t(0, 1, 0, 1) += 1e-3;
  const auto v = validate(t, 1e-9);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], SymmetryViolation::Antisymmetry);
  EXPECT_EQ(to_string(v[0]), "antisymmetry");
}

TEST(Validate, BreakingPairExchangeIsReported) {
  CurvatureTensord t(4);
  // antisymmetric in each pair, not symmetric under exchange
  t(0, 1, 2, 3) = 1;
  t(1, 0, 2, 3) = -1;
  t(0, 1, 3, 2) = -1;
  t(1, 0, 3, 2) = 1;
  const auto v = validate(t, 1e-9);
  EXPECT_NE(std::find(v.begin(), v.end(), SymmetryViolation::PairSymmetry), v.end());
}

TEST(Validate, TotallyAntisymmetricTensorFailsBianchiOnly) {
  CurvatureTensord t(4);
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) inversions += p[x] > p[y];
    t(p[0], p[1], p[2], p[3]) = inversions % 2 ? -1.0 : 1.0;
  } while (std::next_permutation(p.begin(), p.end()));
  const auto v = validate(t, 1e-9);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], SymmetryViolation::Bianchi);
}

TEST(Validate, RandomTensorsAreCurvatureTensors) {
  for (int n = 3; n <= 7; ++n)
    EXPECT_TRUE(validate(random_curvature<double>(n, std::uint64_t(n)), 1e-12).empty()) << n;
}

TEST(Validate, WrongComponentCountIsStructural) {
  std::vector<double> v(15, 0.0);
  EXPECT_THROW(CurvatureTensord(2, v), StructuralError);
  EXPECT_THROW(CurvatureTensord(0), StructuralError);
}

TEST(Projection, IsIdempotent) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal;
  CurvatureTensord raw(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) raw(i, j, k, l) = normal(gen);
  const auto p = project_curvature(raw);
  EXPECT_LT((project_curvature(p) - p).maxAbs(), 1e-14);
  // orthogonal: the removed part is orthogonal to the image
  EXPECT_NEAR(inner(raw - p, p), 0.0, 1e-12);
}

TEST(Ricci, ConstantCurvature) {
  for (int n = 3; n <= 6; ++n) {
    const double c = 0.7;
    const auto ric = ricci(constant_curvature<double>(n, c));
    EXPECT_LT((ric - c * (n - 1) * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(scalar(constant_curvature<double>(n, c)), n * (n - 1) * c, 1e-13);
  }
}

TEST(Ricci, MatchesLoopOracle) {
  const auto t = random_curvature<double>(5, std::uint64_t(11));
  EXPECT_LT((ricci(t) - oracle::ricci(t)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Ricci, WeylPartIsTraceFree) {
  const auto w = weyl_part(random_curvature<double>(6, std::uint64_t(5)));
  EXPECT_LT(ricci(w).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Ricci, Cp2IsEinstein) {
  const auto t = build(ModelSpec::cp2());
  const auto ric = oracle::ricci(t);
  EXPECT_LT((ric - 6.0 * Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Scalar, FlatAndProduct) {
  EXPECT_EQ(scalar(build(ModelSpec::flat(5))), 0.0);
  EXPECT_NEAR(scalar(build(ModelSpec::s2xs2())), 4.0, 1e-14);
}

TEST(Decompose, SpaceFormIsPureScalar) {
  const auto d = decompose(constant_curvature<double>(5, 2.0));
  EXPECT_LT(d.weyl.maxAbs(), 1e-14);
  EXPECT_LT(d.traceless_ricci.cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(d.scalar, 40.0, 1e-12);
}

TEST(Decompose, ProductOfSpheresIsEinsteinWithWeyl) {
  const auto d = decompose(build(ModelSpec::s2xs2()));
  EXPECT_LT(d.traceless_ricci.cwiseAbs().maxCoeff(), 1e-14);
  double w2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) w2 += d.weyl(i, j, k, l) * d.weyl(i, j, k, l);
  EXPECT_NEAR(w2, 16.0 / 3.0, 1e-12);
}

TEST(Decompose, ReassemblesAndIsOrthogonal) {
  for (int n = 3; n <= 7; ++n) {
    const auto t = random_curvature<double>(n, std::uint64_t(100 + n));
    const auto d = decompose(t);
    EXPECT_LT((d.reassemble() - t).maxAbs(), 1e-12) << n;
    EXPECT_NEAR(d.traceless_ricci.trace(), 0.0, 1e-12);
    EXPECT_LT(ricci(d.weyl).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(inner(d.weyl, d.tracelessRicciPart()), 0.0, 1e-10);
    EXPECT_NEAR(inner(d.weyl, d.scalarPart()), 0.0, 1e-10);
    EXPECT_NEAR(inner(d.scalarPart(), d.tracelessRicciPart()), 0.0, 1e-10);
    if (n == 3) EXPECT_LT(d.weyl.maxAbs(), 1e-12);
  }
}

TEST(Decompose, RejectsDimensionTwo) {
  EXPECT_THROW(decompose(constant_curvature<double>(2, 1.0)), PreconditionError);
}

TEST(KulkarniNomizu, ReproducesSpaceForm) {
  const Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  EXPECT_LT((0.5 * kulkarni_nomizu<double>(g, g) - constant_curvature<double>(4, 1.0)).maxAbs(), 1e-15);
  EXPECT_THROW(kulkarni_nomizu<double>(g, Eigen::MatrixXd::Identity(3, 3)), StructuralError);
}

TEST(RandomModes, EinsteinAndWeylOnly) {
  const auto e = random_curvature<double>(5, std::uint64_t(1), RandomMode::Einstein);
  EXPECT_LT(decompose(e).traceless_ricci.cwiseAbs().maxCoeff(), 1e-12);
  const auto w = random_curvature<double>(5, std::uint64_t(1), RandomMode::WeylOnly);
  EXPECT_LT(ricci(w).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Random, SameSeedSameTensor) {
  const auto a = random_curvature<double>(6, std::uint64_t(42));
  const auto b = random_curvature<double>(6, std::uint64_t(42));
  EXPECT_EQ((a - b).maxAbs(), 0.0);
}

TEST(Rotate, PreservesInvariants) {
  std::mt19937_64 gen(9);
  const auto t = random_curvature<double>(5, gen);
  const auto q = random_orthogonal<double>(5, gen);
  EXPECT_LT((q * q.transpose() - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-13);
  const auto r = rotate(t, q);
  EXPECT_TRUE(validate(r, 1e-12).empty());
  EXPECT_NEAR(scalar(r), scalar(t), 1e-12);
  EXPECT_NEAR(weyl_part(r).norm(), weyl_part(t).norm(), 1e-12);
  // R'_0101 from the definition
  double v = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) v += q(0, a) * q(1, b) * q(0, c) * q(1, d) * t(a, b, c, d);
  EXPECT_NEAR(r(0, 1, 0, 1), v, 1e-12);
}

TEST(LongDouble, DecompositionInstantiates) {
  const auto t = random_curvature<long double>(4, std::uint64_t(8));
  const auto d = decompose(t);
  EXPECT_LT(static_cast<double>((d.reassemble() - t).maxAbs()), 1e-15);
  EXPECT_LT(static_cast<double>(ricci(d.weyl).cwiseAbs().maxCoeff()), 1e-15);
}
