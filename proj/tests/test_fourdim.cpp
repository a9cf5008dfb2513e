#include <gtest/gtest.h>

#include <random>

#include "curvop/fourdim.hpp"
#include "curvop/models.hpp"

using namespace curvop;

namespace {

Eigen::Vector3d v3(double a, double b, double c) { return {a, b, c}; }

double max_diff(const Eigen::Vector3d& a, const Eigen::Vector3d& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Hodge, ChangeOfBasisIsOrthogonal) {
  const auto p = hodge_change_of_basis();
  EXPECT_LT((p.transpose() * p - Eigen::Matrix<double, 6, 6>::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Hodge, WeylBlocksAreTraceFreeAndUnmixed) {
  const auto w = weyl_part(random_curvature<double>(4, std::uint64_t(2)));
  const auto h = hodge_split(w);
  EXPECT_NEAR(h.plus.trace(), 0.0, 1e-13);
  EXPECT_NEAR(h.minus.trace(), 0.0, 1e-13);
  EXPECT_LT(h.mixed.cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_THROW(hodge_split(constant_curvature<double>(4, 1.0)), PreconditionError);
}

TEST(Hodge, WeylNormSplits) {
  const auto t = random_curvature<double>(4, std::uint64_t(3));
  const auto h = hodge_split(weyl_part(t));
  EXPECT_NEAR(weyl_part(t).squaredNorm(), 4.0 * (h.plus.squaredNorm() + h.minus.squaredNorm()), 1e-11);
}

TEST(DualWeyl, ModelValues) {
  const auto s2 = dual_weyl_spectrum(build(ModelSpec::s2xs2()));
  EXPECT_NEAR(s2.s, 4.0, 1e-14);
  EXPECT_LT(max_diff(s2.a, v3(-1.0 / 3, -1.0 / 3, 2.0 / 3)), 1e-14);
  EXPECT_LT(max_diff(s2.b, v3(-1.0 / 3, -1.0 / 3, 2.0 / 3)), 1e-14);

  const auto cp2 = dual_weyl_spectrum(build(ModelSpec::cp2()));
  EXPECT_NEAR(cp2.s, 24.0, 1e-13);
  EXPECT_LT(max_diff(cp2.a, v3(-2, -2, 4)), 1e-13);
  EXPECT_LT(cp2.b.cwiseAbs().maxCoeff(), 1e-13);

  const auto sphere = dual_weyl_spectrum(constant_curvature<double>(4, 1.0));
  EXPECT_LT(sphere.a.cwiseAbs().maxCoeff() + sphere.b.cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Lambda, EinsteinSpectrumIsLambdaMultiset) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = random_curvature<double>(4, seed, RandomMode::Einstein);
    const auto sp = spectrum(second_kind(t));
    const auto lam = lambda_spectrum(dual_weyl_spectrum(t));
    EXPECT_LT((sp.values - lam.values).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Lambda, DiagonalInAdaptedBasisForGeneralTensors) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = random_curvature<double>(4, seed);
    const auto basis = adapted_basis(t);
    ASSERT_EQ(basis.size(), 9u);
    const auto lam = lambda_matrix(dual_weyl_spectrum(t));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Eigen::MatrixXd e = basis[3 * i + j];
        EXPECT_NEAR(e.squaredNorm(), 1.0, 1e-12);
        EXPECT_NEAR(e.trace(), 0.0, 1e-12);
        EXPECT_NEAR(quadratic_form(t, e), lam(i, j), 1e-11);
      }
    for (int x = 0; x < 9; ++x)
      for (int y = x + 1; y < 9; ++y) EXPECT_NEAR((basis[x].cwiseProduct(basis[y])).sum(), 0.0, 1e-12);
  }
}

TEST(Cone, Models) {
  const auto cp2 = cone_condition(spectrum(second_kind(build(ModelSpec::cp2()))));
  EXPECT_TRUE(cp2.holds);
  EXPECT_NEAR(cp2.lhs, -6.0, 1e-12);
  EXPECT_NEAR(cp2.rhs, -6.0, 1e-12);
  EXPECT_TRUE(cone_condition(spectrum(second_kind(constant_curvature<double>(4, 1.0)))).holds);
  EXPECT_TRUE(cone_condition(spectrum(second_kind(build(ModelSpec::s2xs2())))).holds);
  EXPECT_THROW(cone_condition(Spectrum<double>(Eigen::Vector3d(1, 2, 3))), StructuralError);
}

TEST(Cone, StrictViolation) {
  Eigen::VectorXd v(9);
  v << -3, -3, -3, 1, 1, 1, 1, 1, 1;
  const auto r = cone_condition(Spectrum<double>(v));
  EXPECT_FALSE(r.holds);
  EXPECT_DOUBLE_EQ(r.lhs, -9.0);
  EXPECT_DOUBLE_EQ(r.rhs, 1.0);
}

TEST(Cone, FourAndHalfImpliesCone) {
  std::mt19937_64 gen(10);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20000; ++trial) {
    Eigen::VectorXd v(9);
    for (int i = 0; i < 9; ++i) v(i) = normal(gen) + (trial % 3);
    std::sort(v.data(), v.data() + 9);
    EXPECT_FALSE(implies_cone(Spectrum<double>(v)).counterexample);
  }
}

TEST(F, FormsAgreeOnZeroSumTriples) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 100; ++i) {
    const double a1 = normal(gen), a2 = normal(gen), s = std::abs(normal(gen)) * 10;
    const Eigen::Vector3d a(a1, a2, -a1 - a2);
    EXPECT_NEAR(f_value(a, s), f_value_product_form(a, s), 1e-10);
  }
  EXPECT_THROW(f_value(v3(1, 1, 1), 1.0), PreconditionError);
}

TEST(F, WeitzenbockQuantityMatchesF) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = random_curvature<double>(4, seed);
    const auto ds = dual_weyl_spectrum(t);
    EXPECT_NEAR(weitzenbock_algebraic(t), f_value(ds.a, ds.s), 1e-10 * std::pow(t.norm(), 3));
  }
}

TEST(F, MinimizeAtTwelve) {
  const auto m = f_minimize(12.0, 400);
  EXPECT_NEAR(m.value, 0.0, 1e-6);
  ASSERT_EQ(m.argmins.size(), 2u);
  EXPECT_LT(max_diff(m.argmins[0], v3(-1, -1, 2)), m.grid_step);
  EXPECT_LT(max_diff(m.argmins[1], v3(0, 0, 0)), m.grid_step);
  EXPECT_THROW(f_minimize(0.0, 400), PreconditionError);
  EXPECT_THROW(f_minimize(1.0, 10), PreconditionError);
}

TEST(F, FeasibleRegionIsNonnegative) {
  // on a_i <= s/6 the cubic is bounded below by 0
  for (int i = 0; i <= 60; ++i)
    for (int j = 0; j <= 60; ++j) {
      const double s = 6.0;
      const double a1 = -2.0 + i * (3.0 / 60), a2 = -2.0 + j * (3.0 / 60);
      const Eigen::Vector3d a(a1, a2, -a1 - a2);
      if (f_feasible(a, s)) EXPECT_GE(f_value(a, s), -1e-12);
    }
}

TEST(ConeBounds, NearSphereSamples) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 50; ++i) {
    auto t = constant_curvature<double>(4, 1.0);
    t += random_curvature<double>(4, gen) * 0.05;
    const auto r = cone_implies_bounds(t);
    if (r.checked) EXPECT_TRUE(r.passed);
  }
}

TEST(Classify, BranchHints) {
  EXPECT_EQ(classify4d(constant_curvature<double>(4, 1.0)).branch_hint, BranchHint::ConformallyFlat);
  EXPECT_EQ(classify4d(build(ModelSpec::cp2())).branch_hint, BranchHint::Cp2Like);
  EXPECT_EQ(classify4d(build(ModelSpec::s2xs2())).branch_hint, BranchHint::ProductLike);
  EXPECT_EQ(classify4d(random_curvature<double>(4, std::uint64_t(1))).branch_hint, BranchHint::None);
  EXPECT_EQ(to_string(BranchHint::Cp2Like), "cp2_like");
  EXPECT_THROW(classify4d(constant_curvature<double>(5, 1.0)), StructuralError);
}
