#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvop/operators.hpp"

namespace curvop {

/// Two independently computed sides of one identity or inequality, plus the
/// norm scale they are compared at.
struct Sides {
  double lhs = 0;
  double rhs = 0;
  double scale = 1;
};

/// |lhs - rhs| / scale (absolute when scale is 0).
double equality_residual(const Sides& s);
/// max(0, rhs - lhs) / scale for a claim lhs >= rhs.
double inequality_violation(const Sides& s);

struct IdentityReport {
  std::string name;
  int n = 0;
  int trials = 0;
  double max_relative_residual = 0;
  bool passed = true;
  /// Informational checks are measured but never fail a suite.
  bool asserted = true;
  std::string error;
};

/// Folds `other` into `into`: trials add, residuals take the max, passed ANDs.
void merge(IdentityReport& into, const IdentityReport& other);

/// 2 R_lt W_ijkl W_ijkt - alpha(W) - 4 beta(W), with W the Weyl part of t.
double bochner_lhs(const CurvatureTensord& t);

/// <R(U^{S0}), U^{S0}> = sum_a lambda_a |S^a U|^2 with R built from t.
double weyl_action_form(const CurvatureTensord& t, const CurvatureTensord& u);

/// sum_ij <R(S^ij), S^ij> by direct contraction.
double sij_form(const CurvatureTensord& t, const CurvatureTensord& w);

// Per-tensor sides. Each returns every equality the check asserts.
std::vector<Sides> laplacian_contraction_sides(const CurvatureTensord& t);
Sides sij_form_sides(const CurvatureTensord& t);
Sides pro1_sides(const CurvatureTensord& t, const CurvatureTensord& u);
Sides pro2_sides(const CurvatureTensord& t);
/// reference: norm of the tensor w came from; floors the comparison scale.
Sides jack_parker_sides(const CurvatureTensord& w, double reference = 0);
std::vector<Sides> n5_reduction_sides(const CurvatureTensord& t);
Sides weyl_action_sum_sides(const CurvatureTensord& t);
/// max_a |S^a W|^2 <= 8(n-2)/n |W|^2 as lhs = bound, rhs = max.
Sides weyl_action_max_sides(const CurvatureTensord& t);
Sides sij_total_sides(const CurvatureTensord& t);
/// One equality per distinguished direction e_d: sum over k<l, k,l != d of
/// R_klkl (via psi_kl quadratic forms) = s/2 - Ric_dd.
std::vector<Sides> psi_sum_sides(const CurvatureTensord& t);
Sides scalar_bound_sides(const CurvatureTensord& t);
Sides ricci_bound_sides(const CurvatureTensord& t);
Sides bochner_inequality_sides(const CurvatureTensord& t);

IdentityReport check_laplacian_contraction(const CurvatureTensord& t, double tol = 1e-9);
IdentityReport check_sij_form(const CurvatureTensord& t, double tol = 1e-9);
IdentityReport check_pro1(const CurvatureTensord& t, const CurvatureTensord& u, double tol = 1e-9);
IdentityReport check_pro2(const CurvatureTensord& t, double tol = 1e-9);
/// Asserted for n <= 5, informational for n >= 6.
IdentityReport check_jack_parker(const CurvatureTensord& w, double tol = 1e-9, double reference = 0);
/// Precondition n in {4, 5}.
IdentityReport check_n5_reductions(const CurvatureTensord& t, double tol = 1e-9);
IdentityReport check_weyl_action_sum(const CurvatureTensord& t, double tol = 1e-9);
IdentityReport check_weyl_action_max(const CurvatureTensord& t, double tol = 1e-9);
IdentityReport check_sij_total(const CurvatureTensord& t, double tol = 1e-9);
IdentityReport check_scalar_ricci_bounds(const CurvatureTensord& t, double tol = 1e-9);
/// Precondition n >= 8.
IdentityReport check_bochner_inequality(const CurvatureTensord& t, double tol = 1e-9);
/// The psi_kl identity for every direction; when the second-kind operator
/// is ((n-1)(n-2)/2)-nonnegative also Ric <= s/2.
IdentityReport check_ric_upper(const CurvatureTensord& t, double tol = 1e-9);

enum class SuiteSelection { All, Equalities, Inequalities, Models };

bool parse_suite_selection(const std::string& s, SuiteSelection& out);

/// Runs every check applicable in dimension n over `trials` independently
/// seeded random tensors (plus the model tensors for equalities). Reports
/// are sorted by name; per-check exceptions become failed reports.
std::vector<IdentityReport> run_suite(int n, int trials, std::uint64_t seed, double tol,
                                      SuiteSelection selection = SuiteSelection::All);

/// True when every asserted report passed.
bool suite_passed(const std::vector<IdentityReport>& reports);

/// Deterministic per-trial generator seeded from (seed, stream, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// sphere + eps G with G a unit-norm random curvature tensor (scaled to the
/// sphere's norm), halving eps from 1 until accept(t) holds. Returns the
/// accepted tensor, or the last candidate when max_halvings is exhausted.
template <typename Accept, typename Generator>
CurvatureTensord sample_near_sphere(int n, Generator& gen, Accept accept, int max_halvings = 40) {
  const CurvatureTensord sphere = constant_curvature<double>(n, 1.0);
  CurvatureTensord g = random_curvature<double>(n, gen);
  g *= sphere.norm() / g.norm();
  double eps = 1.0;
  CurvatureTensord t = sphere + eps * g;
  for (int i = 0; i < max_halvings && !accept(t); ++i) {
    eps *= 0.5;
    t = sphere + eps * g;
  }
  return t;
}

}  // namespace curvop
