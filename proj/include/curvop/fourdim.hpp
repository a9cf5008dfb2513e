#pragma once

#include <Eigen/Dense>

#include <array>
#include <string_view>
#include <vector>

#include "curvop/operators.hpp"

namespace curvop {

/// First-kind matrix of a 4-dimensional tensor in the adapted bases of
/// Lambda^+ and Lambda^-:
///   Lambda^+: (e12 + e34)/sqrt2, (e13 - e24)/sqrt2, (e14 + e23)/sqrt2
///   Lambda^-: (e12 - e34)/sqrt2, (e13 + e24)/sqrt2, (e14 - e23)/sqrt2
struct HodgeBlocks {
  Eigen::Matrix3d plus;
  Eigen::Matrix3d minus;
  /// Lambda^+ rows, Lambda^- columns; nonzero only through traceless Ricci.
  Eigen::Matrix3d mixed;
};

/// Change of basis from {e_i ^ e_j}_{i<j} (pair order 12,13,14,23,24,34) to
/// the Lambda^+ (columns 0..2) and Lambda^- (columns 3..5) bases.
Eigen::Matrix<double, 6, 6> hodge_change_of_basis();

HodgeBlocks hodge_blocks(const CurvatureTensord& t);

/// Blocks of a trace-free tensor; throws PreconditionError otherwise.
HodgeBlocks hodge_split(const CurvatureTensord& w, double tol = 1e-9);

struct DualWeylSpectrum {
  Eigen::Vector3d a = Eigen::Vector3d::Zero();  // W+ eigenvalues, ascending
  Eigen::Vector3d b = Eigen::Vector3d::Zero();  // W- eigenvalues, ascending
  double s = 0;
};

DualWeylSpectrum dual_weyl_spectrum(const CurvatureTensord& t);

/// lambda_ij = s/12 - a_i - b_j
Eigen::Matrix3d lambda_matrix(const DualWeylSpectrum& ds);

/// Sorted multiset {lambda_ij}.
Spectrum<double> lambda_spectrum(const DualWeylSpectrum& ds);

/// Orthonormal basis {omega_i eta_j} of trace-free symmetric 4x4 matrices
/// built from W+ and W- eigenvectors (as 2-forms); index 3 i + j. In this
/// basis the diagonal of the second-kind form is lambda_ij.
std::vector<Eigen::Matrix4d> adapted_basis(const CurvatureTensord& t);

struct ConeCheckResult {
  double lhs = 0;  // l1 + l2 + l3
  double rhs = 0;  // -3 mean
  bool holds = false;
};

/// holds <=> lhs >= rhs - tol * max(1, max |l|)
ConeCheckResult cone_condition(const Spectrum<double>& sp, double tol = 1e-9);

struct ConeImplication {
  KnnResult<double> four_and_half;
  ConeCheckResult cone;
  /// 4.5-nonnegative but the cone condition fails.
  bool counterexample = false;
};

ConeImplication implies_cone(const Spectrum<double>& sp, double tol = 1e-9);

/// 2 [s sum a^2 - 12 sum a^3] for a zero-sum triple.
double f_value(const Eigen::Vector3d& a, double s, double tol = 1e-9);

/// 2 [s sum a^2 - 36 a1 a2 a3]; agrees with f_value when sum a = 0.
double f_value_product_form(const Eigen::Vector3d& a, double s);

/// sum a = 0 (implicitly) and every a_i <= s/6.
bool f_feasible(const Eigen::Vector3d& a, double s, double tol = 0.0);

struct FMinimum {
  double value = 0;
  /// Distinct minimizers, each sorted ascending, in lexicographic order.
  std::vector<Eigen::Vector3d> argmins;
  double grid_step = 0;
};

/// Grid search over (a1, a2) with a3 = -a1 - a2 on {a_i <= s/6}, followed
/// by compass-search refinement of every discrete local minimum.
FMinimum f_minimize(double s, int grid);

struct ConeBoundsReport {
  ConeCheckResult cone;
  DualWeylSpectrum dual;
  double a3_margin = 0;  // s/6 - a3
  double b3_margin = 0;  // s/6 - b3
  bool checked = false;  // cone held, so the bounds were asserted
  bool passed = true;
  double max_violation = 0;  // relative to scale
};

ConeBoundsReport cone_implies_bounds(const CurvatureTensord& t, double tol = 1e-9);

/// s/2 |W+|^2 - 72 det W+, with |W+|^2 the tensor norm (4 tr of the block squared).
double weitzenbock_algebraic(const CurvatureTensord& t);

enum class BranchHint { ConformallyFlat, Cp2Like, ProductLike, None };

std::string_view to_string(BranchHint h);

struct Classify4dReport {
  DualWeylSpectrum dual;
  bool cone_holds = false;
  BranchHint branch_hint = BranchHint::None;
};

/// Pointwise pattern match of (a, b) against (0,0,0) and (-s/12, -s/12, s/6).
Classify4dReport classify4d(const CurvatureTensord& t, double tol = 1e-9);

}  // namespace curvop
