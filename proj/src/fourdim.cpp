#include "curvop/fourdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvop {

namespace {

constexpr int kPairIndex[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};

void require_four(const CurvatureTensord& t) {
  if (t.dim() != 4) throw StructuralError("four-dimensional operation called with n != 4");
}

double spectrum_scale(const Spectrum<double>& sp) {
  return std::max(1.0, sp.values.size() ? sp.values.cwiseAbs().maxCoeff() : 0.0);
}

/// 2-form with coordinates c in the pair basis as an antisymmetric 4x4 matrix.
Eigen::Matrix4d two_form(const Eigen::Matrix<double, 6, 1>& c) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      m(i, j) = c(kPairIndex[i][j]);
      m(j, i) = -c(kPairIndex[i][j]);
    }
  return m;
}

Eigen::Vector3d sorted_eigenvalues(const Eigen::Matrix3d& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("3x3 eigensolver failed");
  return solver.eigenvalues();
}

}  // namespace

Eigen::Matrix<double, 6, 6> hodge_change_of_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<double, 6, 6> p = Eigen::Matrix<double, 6, 6>::Zero();
  // pair order: 12 13 14 23 24 34
  p(0, 0) = r; p(5, 0) = r;    // e12 + e34
  p(1, 1) = r; p(4, 1) = -r;   // e13 - e24
  p(2, 2) = r; p(3, 2) = r;    // e14 + e23
  p(0, 3) = r; p(5, 3) = -r;   // e12 - e34
  p(1, 4) = r; p(4, 4) = r;    // e13 + e24
  p(2, 5) = r; p(3, 5) = -r;   // e14 - e23
  return p;
}

HodgeBlocks hodge_blocks(const CurvatureTensord& t) {
  require_four(t);
  const Eigen::Matrix<double, 6, 6> p = hodge_change_of_basis();
  const Eigen::Matrix<double, 6, 6> first = first_kind(t);
  const Eigen::Matrix<double, 6, 6> m = p.transpose() * first * p;
  return {m.topLeftCorner<3, 3>(), m.bottomRightCorner<3, 3>(), m.topRightCorner<3, 3>()};
}

HodgeBlocks hodge_split(const CurvatureTensord& w, double tol) {
  require_four(w);
  if (trace_residual(w) > tol) throw PreconditionError("hodge_split needs a trace-free tensor");
  return hodge_blocks(w);
}

DualWeylSpectrum dual_weyl_spectrum(const CurvatureTensord& t) {
  require_four(t);
  const auto parts = decompose(t);
  const HodgeBlocks blocks = hodge_blocks(parts.weyl);
  return {sorted_eigenvalues(blocks.plus), sorted_eigenvalues(blocks.minus), parts.scalar};
}

Eigen::Matrix3d lambda_matrix(const DualWeylSpectrum& ds) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = ds.s / 12.0 - ds.a(i) - ds.b(j);
  return m;
}

Spectrum<double> lambda_spectrum(const DualWeylSpectrum& ds) {
  const Eigen::Matrix3d m = lambda_matrix(ds);
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(m.data(), 9);
  std::sort(v.data(), v.data() + v.size());
  return Spectrum<double>(v);
}

std::vector<Eigen::Matrix4d> adapted_basis(const CurvatureTensord& t) {
  require_four(t);
  const HodgeBlocks blocks = hodge_blocks(decompose(t).weyl);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> plus(blocks.plus), minus(blocks.minus);
  const Eigen::Matrix<double, 6, 6> p = hodge_change_of_basis();
  std::vector<Eigen::Matrix4d> out;
  out.reserve(9);
  for (int i = 0; i < 3; ++i) {
    const Eigen::Matrix4d omega = two_form(p.leftCols<3>() * plus.eigenvectors().col(i));
    for (int j = 0; j < 3; ++j) {
      const Eigen::Matrix4d eta = two_form(p.rightCols<3>() * minus.eigenvectors().col(j));
      Eigen::Matrix4d x = omega * eta;
      // Self-dual and anti-self-dual forms commute, so x is symmetric; clean rounding.
      x = 0.5 * (x + x.transpose()).eval();
      out.push_back(x / x.norm());
    }
  }
  return out;
}

ConeCheckResult cone_condition(const Spectrum<double>& sp, double tol) {
  if (sp.size() != 9) throw StructuralError("cone condition needs the 9 eigenvalues of a 4D operator");
  ConeCheckResult r;
  r.lhs = sp[0] + sp[1] + sp[2];
  r.rhs = -3.0 * sp.mean;
  r.holds = r.lhs >= r.rhs - tol * spectrum_scale(sp);
  return r;
}

ConeImplication implies_cone(const Spectrum<double>& sp, double tol) {
  ConeImplication r;
  r.cone = cone_condition(sp, tol);
  r.four_and_half = k_nonnegative(sp, 4.5, tol * spectrum_scale(sp));
  r.counterexample = r.four_and_half.holds && !r.cone.holds;
  return r;
}

double f_value(const Eigen::Vector3d& a, double s, double tol) {
  if (std::abs(a.sum()) > tol * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw PreconditionError("f_value needs a1 + a2 + a3 = 0");
  return 2.0 * (s * a.squaredNorm() - 12.0 * a.array().cube().sum());
}

double f_value_product_form(const Eigen::Vector3d& a, double s) {
  return 2.0 * (s * a.squaredNorm() - 36.0 * a.prod());
}

bool f_feasible(const Eigen::Vector3d& a, double s, double tol) {
  return a.maxCoeff() <= s / 6.0 + tol;
}

namespace {

double f_plane(double a1, double a2, double s) {
  const Eigen::Vector3d a(a1, a2, -a1 - a2);
  return 2.0 * (s * a.squaredNorm() - 12.0 * a.array().cube().sum());
}

bool feasible_plane(double a1, double a2, double s) {
  const double cap = s / 6.0;
  return a1 <= cap && a2 <= cap && -a1 - a2 <= cap;
}

/// Compass search over 8 directions, which include the tangents of all
/// three constraint lines, so it can slide along the boundary.
Eigen::Vector2d compass_refine(Eigen::Vector2d x, double step, double s) {
  static const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2d dirs[8] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {r, r}, {-r, -r}, {r, -r}, {-r, r}};
  double fx = f_plane(x(0), x(1), s);
  const double min_step = 1e-14 * s;
  while (step > min_step) {
    bool improved = false;
    for (const auto& d : dirs) {
      Eigen::Vector2d y = x + step * d;
      // Snap onto the active constraint when a step overshoots it.
      const double cap = s / 6.0;
      y(0) = std::min(y(0), cap);
      y(1) = std::min(y(1), cap);
      if (-y(0) - y(1) > cap) {
        const double excess = (-y(0) - y(1) - cap) / 2.0;
        y.array() += excess;
      }
      if (!feasible_plane(y(0), y(1), s)) continue;
      const double fy = f_plane(y(0), y(1), s);
      if (fy < fx) {
        x = y;
        fx = fy;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return x;
}

}  // namespace

FMinimum f_minimize(double s, int grid) {
  if (!(s > 0)) throw PreconditionError("f_minimize needs s > 0");
  if (grid < 100) throw PreconditionError("f_minimize needs grid >= 100");
  const double lo = -s / 3.0, hi = s / 6.0;
  const double h = (hi - lo) / grid;
  const int pts = grid + 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> values(static_cast<std::size_t>(pts) * pts, inf);
  auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * pts + j]; };
  for (int i = 0; i < pts; ++i)
    for (int j = 0; j < pts; ++j) {
      const double a1 = lo + i * h, a2 = lo + j * h;
      if (feasible_plane(a1, a2, s)) at(i, j) = f_plane(a1, a2, s);
    }

  std::vector<Eigen::Vector3d> candidates;
  std::vector<double> candidate_values;
  for (int i = 0; i < pts; ++i)
    for (int j = 0; j < pts; ++j) {
      const double v = at(i, j);
      if (v == inf) continue;
      bool local_min = true;
      for (int di = -1; di <= 1 && local_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (!di && !dj) continue;
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= pts || jj >= pts) continue;
          // Ties resolve toward the lexicographically smaller grid point.
          const double w = at(ii, jj);
          if (w < v || (w == v && (ii < i || (ii == i && jj < j)))) {
            local_min = false;
            break;
          }
        }
      if (!local_min) continue;
      const Eigen::Vector2d x = compass_refine({lo + i * h, lo + j * h}, h, s);
      Eigen::Vector3d a(x(0), x(1), -x(0) - x(1));
      std::sort(a.data(), a.data() + 3);
      candidates.push_back(a);
      candidate_values.push_back(f_plane(x(0), x(1), s));
    }
  if (candidates.empty()) throw NumericalError("f_minimize found no feasible grid point");

  FMinimum out;
  out.grid_step = h;
  out.value = *std::min_element(candidate_values.begin(), candidate_values.end());
  const double accept = out.value + 1e-9 * s * s * s;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (candidate_values[c] > accept) continue;
    const bool seen = std::any_of(out.argmins.begin(), out.argmins.end(), [&](const Eigen::Vector3d& m) {
      return (m - candidates[c]).cwiseAbs().maxCoeff() <= 2.0 * h;
    });
    if (!seen) out.argmins.push_back(candidates[c]);
  }
  std::sort(out.argmins.begin(), out.argmins.end(), [](const Eigen::Vector3d& x, const Eigen::Vector3d& y) {
    return std::lexicographical_compare(x.data(), x.data() + 3, y.data(), y.data() + 3);
  });
  return out;
}

ConeBoundsReport cone_implies_bounds(const CurvatureTensord& t, double tol) {
  require_four(t);
  ConeBoundsReport r;
  const Spectrum<double> sp = spectrum(second_kind(t));
  r.cone = cone_condition(sp, tol);
  r.dual = dual_weyl_spectrum(t);
  const double s = r.dual.s;
  r.a3_margin = s / 6.0 - r.dual.a(2);
  r.b3_margin = s / 6.0 - r.dual.b(2);
  if (!r.cone.holds) return r;
  r.checked = true;
  const double scale = std::max({1.0, std::abs(s), sp.values.cwiseAbs().maxCoeff()});
  const double slack = tol * scale;
  r.max_violation = std::max({0.0, -r.a3_margin, -r.b3_margin, -s}) / scale;
  if (std::abs(s) <= slack) {
    // s = 0 forces W+ = W- = 0.
    const double weyl = std::max(r.dual.a.cwiseAbs().maxCoeff(), r.dual.b.cwiseAbs().maxCoeff());
    r.max_violation = std::max(r.max_violation, std::max(0.0, weyl - 10.0 * slack) / scale);
  }
  r.passed = r.max_violation <= tol;
  return r;
}

double weitzenbock_algebraic(const CurvatureTensord& t) {
  require_four(t);
  const auto parts = decompose(t);
  const Eigen::Matrix3d plus = hodge_blocks(parts.weyl).plus;
  const double norm_sq = 4.0 * (plus * plus).trace();
  return parts.scalar / 2.0 * norm_sq - 72.0 * plus.determinant();
}

std::string_view to_string(BranchHint h) {
  switch (h) {
    case BranchHint::ConformallyFlat: return "conformally_flat";
    case BranchHint::Cp2Like: return "cp2_like";
    case BranchHint::ProductLike: return "product_like";
    case BranchHint::None: return "none";
  }
  return "none";
}

Classify4dReport classify4d(const CurvatureTensord& t, double tol) {
  require_four(t);
  Classify4dReport r;
  const Spectrum<double> sp = spectrum(second_kind(t));
  r.cone_holds = cone_condition(sp, tol).holds;
  r.dual = dual_weyl_spectrum(t);
  const double s = r.dual.s;
  const double slack = tol * std::max({1.0, std::abs(s), t.maxAbs()});
  const Eigen::Vector3d pattern(-s / 12.0, -s / 12.0, s / 6.0);
  auto is_zero = [&](const Eigen::Vector3d& v) { return v.cwiseAbs().maxCoeff() <= slack; };
  auto is_pattern = [&](const Eigen::Vector3d& v) {
    return s > slack && (v - pattern).cwiseAbs().maxCoeff() <= slack;
  };
  const bool a0 = is_zero(r.dual.a), b0 = is_zero(r.dual.b);
  const bool ap = is_pattern(r.dual.a), bp = is_pattern(r.dual.b);
  if (a0 && b0)
    r.branch_hint = BranchHint::ConformallyFlat;
  else if ((a0 && bp) || (ap && b0))
    r.branch_hint = BranchHint::Cp2Like;
  else if (ap && bp)
    r.branch_hint = BranchHint::ProductLike;
  return r;
}

}  // namespace curvop
