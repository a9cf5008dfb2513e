#include "curvop/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "curvop/fourdim.hpp"
#include "curvop/models.hpp"
#include "curvop/weighted.hpp"

namespace curvop {

double equality_residual(const Sides& s) {
  const double diff = std::abs(s.lhs - s.rhs);
  return s.scale > 0 ? diff / s.scale : diff;
}

double inequality_violation(const Sides& s) {
  const double v = std::max(0.0, s.rhs - s.lhs);
  return s.scale > 0 ? v / s.scale : v;
}

void merge(IdentityReport& into, const IdentityReport& other) {
  into.trials += other.trials;
  if (std::isnan(other.max_relative_residual) || std::isnan(into.max_relative_residual))
    into.max_relative_residual = std::numeric_limits<double>::quiet_NaN();
  else
    into.max_relative_residual = std::max(into.max_relative_residual, other.max_relative_residual);
  into.passed = into.passed && other.passed;
  if (into.error.empty()) into.error = other.error;
}

namespace {

IdentityReport report_from(std::string name, int n, double residual, double tol, bool asserted = true) {
  IdentityReport r;
  r.name = std::move(name);
  r.n = n;
  r.trials = 1;
  r.max_relative_residual = residual;
  r.passed = residual <= tol;
  r.asserted = asserted;
  return r;
}

double max_equality(const std::vector<Sides>& sides) {
  double m = 0;
  for (const auto& s : sides) m = std::max(m, equality_residual(s));
  return m;
}

/// Relative floor of every scale, so roundoff-sized Weyl parts compare absolutely.
constexpr double kScaleFloor = 1e-12;

double cubic_scale(const CurvatureTensord& r, const CurvatureTensord& u) {
  const double rn = r.norm();
  return std::max(rn * u.squaredNorm(), kScaleFloor * rn * rn * rn);
}

double quadratic_scale(const CurvatureTensord& t, const CurvatureTensord& w) {
  return std::max(w.squaredNorm(), kScaleFloor * t.squaredNorm());
}

/// Quantities shared by the Weyl-based identities.
struct WeylContext {
  int n;
  CurvatureTensord t;
  CurvatureTensord w;
  double s;
  double w2;
  double rww;
  AlphaBeta<double> ab;

  explicit WeylContext(const CurvatureTensord& t_)
      : n(t_.dim()), t(t_), w(weyl_part(t_)), s(scalar(t_)), w2(w.squaredNorm()),
        rww(ricci_contraction(t_, w)), ab(alpha_beta(t_, w)) {}

  double scale() const { return cubic_scale(t, w); }
};

/// |S^a U|^2 for each orthonormal eigentensor S^a.
std::vector<double> action_norms(const SpectralDecomposition<double>& eig, const CurvatureTensord& u) {
  std::vector<double> out;
  out.reserve(eig.eigentensors.size());
  for (const auto& s : eig.eigentensors) out.push_back(s_action(s, u).squaredNorm());
  return out;
}

}  // namespace

double bochner_lhs(const CurvatureTensord& t) {
  const WeylContext c(t);
  return 2.0 * c.rww - c.ab.alpha - 4.0 * c.ab.beta;
}

double weyl_action_form(const CurvatureTensord& t, const CurvatureTensord& u) {
  const auto eig = eigendecompose(second_kind(t));
  const auto norms = action_norms(eig, u);
  double v = 0;
  for (std::size_t a = 0; a < norms.size(); ++a) v += eig.spectrum[static_cast<int>(a)] * norms[a];
  return v;
}

double sij_form(const CurvatureTensord& t, const CurvatureTensord& w) {
  double v = 0;
  for (const auto& s : sij_family(w)) v += quadratic_form(t, s);
  return v;
}

std::vector<Sides> laplacian_contraction_sides(const CurvatureTensord& t) {
  const WeylContext c(t);
  const int n = c.n;
  const CurvatureTensord& r = c.t;
  const CurvatureTensord& w = c.w;
  const SymTwoTensor<double> ric = ricci(r);
  // 4 R_lsti W_ijkl W_tjks + 2 R_lstk W_ijkl W_ijts + 2 R_lt W_ijkl W_ijkt, summed in
  // a different order from alpha/beta.
  double first = 0, second = 0, third = 0;
  for (int l = 0; l < n; ++l)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        for (int i = 0; i < n; ++i) {
          const double rlsti = r(l, s, t, i);
          double acc = 0;
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) acc += w(i, j, k, l) * w(t, j, k, s);
          first += rlsti * acc;
        }
  for (int l = 0; l < n; ++l)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        for (int k = 0; k < n; ++k) {
          const double rlstk = r(l, s, t, k);
          double acc = 0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += w(i, j, k, l) * w(i, j, t, s);
          second += rlstk * acc;
        }
  for (int l = 0; l < n; ++l)
    for (int t = 0; t < n; ++t) {
      double acc = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) acc += w(i, j, k, l) * w(i, j, k, t);
      third += ric(l, t) * acc;
    }
  const double expanded = 4.0 * first + 2.0 * second + 2.0 * third;
  return {{2.0 * c.rww - c.ab.alpha - 4.0 * c.ab.beta, expanded, c.scale()}};
}

Sides sij_form_sides(const CurvatureTensord& t) {
  const WeylContext c(t);
  return {sij_form(t, c.w), 0.5 * c.ab.alpha - 4.0 * c.ab.beta, c.scale()};
}

Sides pro1_sides(const CurvatureTensord& t, const CurvatureTensord& u) {
  if (t.dim() != u.dim()) throw StructuralError("pro1: dimension mismatch");
  const double n = t.dim();
  const AlphaBeta<double> ab = alpha_beta(t, u);
  const double rhs = (2.0 * n + 32.0) / n * ricci_contraction(t, u) - 5.0 * ab.alpha +
                     4.0 * ab.beta - 16.0 / (n * n) * scalar(t) * u.squaredNorm();
  return {weyl_action_form(t, u), rhs, cubic_scale(t, u)};
}

Sides pro2_sides(const CurvatureTensord& t) {
  const WeylContext c(t);
  const double n = c.n;
  const double lhs = 3.0 * (2.0 * c.rww - c.ab.alpha - 4.0 * c.ab.beta);
  const double rhs = weyl_action_form(t, c.w) + 4.0 * (n - 8.0) / n * c.rww +
                     4.0 * sij_form(t, c.w) + 16.0 / (n * n) * c.s * c.w2;
  return {lhs, rhs, c.scale()};
}

Sides jack_parker_sides(const CurvatureTensord& w, double reference) {
  const AlphaBeta<double> ab = alpha_beta(w, w);
  const double r = std::max(reference, w.norm());
  return {ab.alpha, 2.0 * ab.beta, std::max(w.norm() * w.squaredNorm(), kScaleFloor * r * r * r)};
}

std::vector<Sides> n5_reduction_sides(const CurvatureTensord& t) {
  const int dim = t.dim();
  if (dim != 4 && dim != 5) throw PreconditionError("n5 reductions need n in {4, 5}");
  const WeylContext c(t);
  const double n = dim, s = c.s, w2 = c.w2, rww = c.rww, beta = c.ab.beta;
  const double scale = c.scale();
  const double boch = 2.0 * rww - c.ab.alpha - 4.0 * beta;
  const double action = weyl_action_form(t, c.w);
  const double sij = sij_form(t, c.w);
  std::vector<Sides> out;
  // alpha in terms of beta once the cubic Weyl terms are related
  out.push_back({c.ab.alpha,
                 2.0 * beta + 6.0 / (n - 2.0) * rww - 3.0 / ((n - 1.0) * (n - 2.0)) * s * w2, scale});
  // The Ricci coefficient follows from substituting alpha into the Laplacian
  // expansion; it vanishes at n = 5.
  out.push_back({boch,
                 -6.0 * beta + 2.0 * (n - 5.0) / (n - 2.0) * rww +
                     3.0 / ((n - 1.0) * (n - 2.0)) * s * w2,
                 scale});
  out.push_back({sij,
                 -3.0 * beta + 3.0 / (n - 2.0) * rww - 3.0 / (2.0 * (n - 1.0) * (n - 2.0)) * s * w2,
                 scale});
  out.push_back({action,
                 -6.0 * beta + 2.0 * (n * n - n - 32.0) / (n * (n - 2.0)) * rww -
                     (n * n - 48.0 * n + 32.0) / (n * n * (n - 1.0) * (n - 2.0)) * s * w2,
                 scale});
  if (dim == 5) out.push_back({boch, 5.0 / 9.0 * action + 8.0 / 9.0 * sij + s * w2 / 45.0, scale});
  return out;
}

Sides weyl_action_sum_sides(const CurvatureTensord& t) {
  const CurvatureTensord w = weyl_part(t);
  const double n = t.dim();
  const auto norms = action_norms(eigendecompose(second_kind(t)), w);
  double sum = 0;
  for (double v : norms) sum += v;
  return {sum, 2.0 * (n * n + n - 8.0) / n * w.squaredNorm(), quadratic_scale(t, w)};
}

Sides weyl_action_max_sides(const CurvatureTensord& t) {
  const CurvatureTensord w = weyl_part(t);
  const double n = t.dim();
  const auto norms = action_norms(eigendecompose(second_kind(t)), w);
  const double mx = norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
  return {8.0 * (n - 2.0) / n * w.squaredNorm(), mx, quadratic_scale(t, w)};
}

Sides sij_total_sides(const CurvatureTensord& t) {
  const CurvatureTensord w = weyl_part(t);
  const TraceFreeSymBasis<double> basis = build_basis<double>(t.dim());
  double total = 0;
  for (const auto& s : sij_family(w)) total += basis.coordinates(s).squaredNorm();
  return {total, 3.0 * w.squaredNorm(), quadratic_scale(t, w)};
}

std::vector<Sides> psi_sum_sides(const CurvatureTensord& t) {
  const int n = t.dim();
  const SymTwoTensor<double> ric = ricci(t);
  const double s = ric.trace();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Quadratic forms of psi_kl = (e_k (.) e_l)/sqrt(2) for every pair.
  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      SymTwoTensor<double> psi = SymTwoTensor<double>::Zero(n, n);
      psi(k, l) = psi(l, k) = inv_sqrt2;
      form(k, l) = quadratic_form(t, psi);
    }
  std::vector<Sides> out;
  for (int d = 0; d < n; ++d) {
    double lhs = 0;
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        if (k != d && l != d) lhs += form(k, l);
    out.push_back({lhs, s / 2.0 - ric(d, d), t.norm()});
  }
  return out;
}

Sides scalar_bound_sides(const CurvatureTensord& t) {
  const int n = t.dim();
  const Spectrum<double> sp = spectrum(second_kind(t));
  const double bound = best_lower_bound(sp, scalar_weight_spec<double>(n)).value;
  return {scalar(t), 2.0 * n / (n + 2.0) * bound, t.norm()};
}

Sides ricci_bound_sides(const CurvatureTensord& t) {
  const int n = t.dim();
  const Spectrum<double> sp = spectrum(second_kind(t));
  const double bound = best_lower_bound(sp, ricci_weight_spec<double>(n)).value;
  return {spectrum<double>(ricci(t))[0], bound, t.norm()};
}

Sides bochner_inequality_sides(const CurvatureTensord& t) {
  const int n = t.dim();
  if (n < 8) throw PreconditionError("bochner inequality needs n >= 8");
  const WeylContext c(t);
  const Spectrum<double> sp = spectrum(second_kind(t));
  const double bound = best_lower_bound(sp, bochner_weight_spec<double>(n)).value;
  return {3.0 * (2.0 * c.rww - c.ab.alpha - 4.0 * c.ab.beta), bound * c.w2, c.scale()};
}

IdentityReport check_laplacian_contraction(const CurvatureTensord& t, double tol) {
  return report_from("laplacian_contraction", t.dim(), max_equality(laplacian_contraction_sides(t)), tol);
}

IdentityReport check_sij_form(const CurvatureTensord& t, double tol) {
  return report_from("sij_form", t.dim(), equality_residual(sij_form_sides(t)), tol);
}

IdentityReport check_pro1(const CurvatureTensord& t, const CurvatureTensord& u, double tol) {
  return report_from("pro1", t.dim(), equality_residual(pro1_sides(t, u)), tol);
}

IdentityReport check_pro2(const CurvatureTensord& t, double tol) {
  return report_from("pro2", t.dim(), equality_residual(pro2_sides(t)), tol);
}

IdentityReport check_jack_parker(const CurvatureTensord& w, double tol, double reference) {
  const int n = w.dim();
  if (trace_residual(w) > tol) throw PreconditionError("jack_parker needs a trace-free tensor");
  const bool asserted = n <= 5;
  return report_from(asserted ? "jack_parker" : "jack_parker_informational", n,
                     equality_residual(jack_parker_sides(w, reference)), tol, asserted);
}

IdentityReport check_n5_reductions(const CurvatureTensord& t, double tol) {
  return report_from("n5_reductions", t.dim(), max_equality(n5_reduction_sides(t)), tol);
}

IdentityReport check_weyl_action_sum(const CurvatureTensord& t, double tol) {
  return report_from("weyl_action_sum", t.dim(), equality_residual(weyl_action_sum_sides(t)), tol);
}

IdentityReport check_weyl_action_max(const CurvatureTensord& t, double tol) {
  return report_from("weyl_action_max", t.dim(), inequality_violation(weyl_action_max_sides(t)), tol);
}

IdentityReport check_sij_total(const CurvatureTensord& t, double tol) {
  return report_from("sij_total", t.dim(), equality_residual(sij_total_sides(t)), tol);
}

IdentityReport check_scalar_ricci_bounds(const CurvatureTensord& t, double tol) {
  const double v = std::max(inequality_violation(scalar_bound_sides(t)),
                            inequality_violation(ricci_bound_sides(t)));
  return report_from("scalar_ricci_bounds", t.dim(), v, tol);
}

IdentityReport check_bochner_inequality(const CurvatureTensord& t, double tol) {
  return report_from("bochner_inequality", t.dim(), inequality_violation(bochner_inequality_sides(t)), tol);
}

IdentityReport check_ric_upper(const CurvatureTensord& t, double tol) {
  const int n = t.dim();
  double residual = max_equality(psi_sum_sides(t));
  const Spectrum<double> sp = spectrum(second_kind(t));
  const double k = (n - 1) * (n - 2) / 2.0;
  if (k >= 1.0 && k_nonnegative(sp, k).holds) {
    const SymTwoTensor<double> ric = ricci(t);
    const Sides upper{ric.trace() / 2.0, spectrum<double>(ric)[n - 1], t.norm()};
    residual = std::max(residual, inequality_violation(upper));
  }
  return report_from("ric_upper", n, residual, tol);
}

bool parse_suite_selection(const std::string& s, SuiteSelection& out) {
  if (s == "all") out = SuiteSelection::All;
  else if (s == "equalities") out = SuiteSelection::Equalities;
  else if (s == "inequalities") out = SuiteSelection::Inequalities;
  else if (s == "models") out = SuiteSelection::Models;
  else return false;
  return true;
}

bool suite_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return !r.asserted || r.passed; });
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

namespace {

enum Stream : std::uint64_t {
  kMain = 0,
  kPartner = 1,
  kRotation = 2,
  kNearSphere = 3,
  kEinstein = 4,
  kCone = 5,
};

class SuiteRunner {
 public:
  SuiteRunner(int n, int trials, std::uint64_t seed, double tol)
      : n_(n), trials_(trials), seed_(seed), tol_(tol) {}

  using TrialCheck = std::function<IdentityReport(int trial)>;

  /// Runs check for each trial index and folds the per-trial reports.
  void run(const std::string& name, int count, const TrialCheck& check, bool asserted = true) {
    IdentityReport total;
    total.name = name;
    total.n = n_;
    total.asserted = asserted;
    for (int i = 0; i < count; ++i) {
      IdentityReport one;
      try {
        one = check(i);
      } catch (const std::exception& e) {
        one = report_from(name, n_, std::numeric_limits<double>::infinity(), tol_, asserted);
        one.error = e.what();
      }
      one.asserted = asserted;
      merge(total, one);
    }
    reports_[name] = total;
  }

  std::mt19937_64 gen(Stream stream, int trial) const {
    return std::mt19937_64(trial_seed(seed_, stream, static_cast<std::uint64_t>(trial)));
  }

  CurvatureTensord random(Stream stream, int trial, RandomMode mode = RandomMode::Full) const {
    auto g = gen(stream, trial);
    return random_curvature<double>(n_, g, mode);
  }

  std::vector<IdentityReport> reports() const {
    std::vector<IdentityReport> out;
    for (const auto& [name, r] : reports_) out.push_back(r);
    return out;
  }

  int n_;
  int trials_;
  std::uint64_t seed_;
  double tol_;

 private:
  std::map<std::string, IdentityReport> reports_;
};

void run_equalities(SuiteRunner& run) {
  const int n = run.n_;
  const double tol = run.tol_;
  const auto models = model_catalog(n);
  const int count = run.trials_ + static_cast<int>(models.size());
  // Trials beyond the random ones walk through the model catalog.
  auto tensor = [&](int i) {
    return i < run.trials_ ? run.random(kMain, i) : models[i - run.trials_].second;
  };

  run.run("laplacian_contraction", count, [&](int i) { return check_laplacian_contraction(tensor(i), tol); });
  run.run("sij_form", count, [&](int i) { return check_sij_form(tensor(i), tol); });
  run.run("pro1", count, [&](int i) {
    const auto t = tensor(i);
    return check_pro1(t, t, tol);
  });
  run.run("pro1_weyl_partner", count, [&](int i) {
    return check_pro1(tensor(i), weyl_part(run.random(kPartner, i)), tol);
  });
  run.run("pro2", count, [&](int i) { return check_pro2(tensor(i), tol); });
  run.run("weyl_action_sum", count, [&](int i) { return check_weyl_action_sum(tensor(i), tol); });
  run.run("weyl_action_max", count, [&](int i) { return check_weyl_action_max(tensor(i), tol); });
  run.run("sij_total", count, [&](int i) { return check_sij_total(tensor(i), tol); });
  run.run("psi_sum", count, [&](int i) {
    auto g = run.gen(kRotation, i);
    const auto q = random_orthogonal<double>(n, g);
    IdentityReport r = report_from("psi_sum", n, max_equality(psi_sum_sides(rotate(tensor(i), q))), tol);
    return r;
  });
  run.run(n <= 5 ? "jack_parker" : "jack_parker_informational", count,
          [&](int i) {
            const auto t = tensor(i);
            return check_jack_parker(weyl_part(t), tol, t.norm());
          },
          n <= 5);
  if (n == 4 || n == 5)
    run.run("n5_reductions", count, [&](int i) { return check_n5_reductions(tensor(i), tol); });

  if (n == 4) {
    run.run("fourdim_lambda_einstein", run.trials_, [&](int i) {
      const auto t = run.random(kEinstein, i, RandomMode::Einstein);
      const auto sp = spectrum(second_kind(t));
      const auto lam = lambda_spectrum(dual_weyl_spectrum(t));
      const double scale = std::max(1.0, t.norm());
      return report_from("", n, (sp.values - lam.values).cwiseAbs().maxCoeff() / scale, tol);
    });
    run.run("fourdim_lambda_diagonal", count, [&](int i) {
      const auto t = tensor(i);
      const auto basis = adapted_basis(t);
      const Eigen::Matrix3d lam = lambda_matrix(dual_weyl_spectrum(t));
      double worst = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          worst = std::max(worst, std::abs(quadratic_form(t, SymTwoTensor<double>(basis[3 * a + b])) - lam(a, b)));
      return report_from("", n, worst / std::max(1.0, t.norm()), tol);
    });
    run.run("fourdim_weitzenbock_f", count, [&](int i) {
      const auto t = tensor(i);
      const auto ds = dual_weyl_spectrum(t);
      const double scale = std::max(1.0, std::pow(t.norm(), 3));
      return report_from("", n, std::abs(weitzenbock_algebraic(t) - f_value(ds.a, ds.s)) / scale, tol);
    });
    run.run("fourdim_hodge_blocks", count, [&](int i) {
      const auto w = weyl_part(tensor(i));
      const HodgeBlocks h = hodge_split(w);
      const double v = std::max({std::abs(h.plus.trace()), std::abs(h.minus.trace()),
                                 h.mixed.norm()});
      return report_from("", n, v / std::max(1.0, w.norm()), tol);
    });
  }
}

void run_inequalities(SuiteRunner& run) {
  const int n = run.n_;
  const double tol = run.tol_;
  run.run("scalar_ricci_bounds", run.trials_,
          [&](int i) { return check_scalar_ricci_bounds(run.random(kMain, i), tol); });
  if (n >= 8)
    run.run("bochner_inequality", run.trials_,
            [&](int i) { return check_bochner_inequality(run.random(kMain, i), tol); });
  const double k = (n - 1) * (n - 2) / 2.0;
  run.run("ric_upper", run.trials_, [&](int i) {
    auto g = run.gen(kNearSphere, i);
    const auto t = sample_near_sphere(n, g, [&](const CurvatureTensord& c) {
      return k_nonnegative(spectrum(second_kind(c)), std::max(1.0, k)).holds;
    });
    auto rg = run.gen(kRotation, i);
    return check_ric_upper(rotate(t, random_orthogonal<double>(n, rg)), tol);
  });
  if (n == 4) {
    auto cone_sample = [&](int i) {
      auto g = run.gen(kCone, i);
      return sample_near_sphere(4, g, [&](const CurvatureTensord& c) {
        return cone_condition(spectrum(second_kind(c)), tol).holds;
      });
    };
    run.run("fourdim_cone_bounds", run.trials_, [&](int i) {
      const ConeBoundsReport r = cone_implies_bounds(cone_sample(i), tol);
      IdentityReport rep = report_from("", n, r.max_violation, tol);
      if (!r.checked) {
        rep.passed = false;
        rep.error = "sampler did not reach the cone condition";
      }
      return rep;
    });
    run.run("fourdim_weitzenbock_nonnegative", run.trials_, [&](int i) {
      const auto t = cone_sample(i);
      const double scale = std::max(1.0, std::pow(std::abs(scalar(t)), 3));
      return report_from("", n, std::max(0.0, -weitzenbock_algebraic(t)) / scale, tol);
    });
  }
}

void run_models(SuiteRunner& run) {
  const int n = run.n_;
  const double tol = run.tol_;
  run.run("model_sphere_positive_definite", 1, [&](int) {
    const auto sp = spectrum(second_kind(build(ModelSpec::sphere(n))));
    return report_from("", n, std::max(0.0, -sp[0]), tol);
  });
  run.run("model_flat_zero", 1, [&](int) {
    const auto sp = spectrum(second_kind(build(ModelSpec::flat(n))));
    return report_from("", n, sp.values.cwiseAbs().maxCoeff(), tol);
  });
  if (n == 4)
    for (const ModelClaim& claim : verify_model_claims(tol))
      run.run("model_" + claim.name, 1, [&](int) {
        IdentityReport r = report_from("", n, claim.violation, tol);
        r.passed = claim.passed;
        if (!claim.passed) r.error = claim.detail;
        return r;
      });
}

}  // namespace

std::vector<IdentityReport> run_suite(int n, int trials, std::uint64_t seed, double tol,
                                      SuiteSelection selection) {
  if (n < 3) throw PreconditionError("run_suite needs n >= 3");
  if (trials < 1) throw PreconditionError("run_suite needs trials >= 1");
  SuiteRunner runner(n, trials, seed, tol);
  const bool all = selection == SuiteSelection::All;
  if (all || selection == SuiteSelection::Equalities) run_equalities(runner);
  if (all || selection == SuiteSelection::Inequalities) run_inequalities(runner);
  if (all || selection == SuiteSelection::Models) run_models(runner);
  return runner.reports();
}

}  // namespace curvop
