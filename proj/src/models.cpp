#include "curvop/models.hpp"

#include <cmath>
#include <sstream>

#include "curvop/fourdim.hpp"
#include "curvop/operators.hpp"

namespace curvop {

std::string_view to_string(ModelName m) {
  switch (m) {
    case ModelName::Sphere: return "sphere";
    case ModelName::Flat: return "flat";
    case ModelName::Hyperbolic: return "hyperbolic";
    case ModelName::ProductSpheres: return "product_spheres";
    case ModelName::S1xS3: return "s1_x_s3";
    case ModelName::Cp2: return "cp2";
  }
  return "unknown";
}

std::optional<ModelName> parse_model_name(std::string_view s) {
  if (s == "sphere") return ModelName::Sphere;
  if (s == "flat") return ModelName::Flat;
  if (s == "hyperbolic") return ModelName::Hyperbolic;
  if (s == "product_spheres" || s == "s2xs2") return ModelName::ProductSpheres;
  if (s == "s1_x_s3" || s == "s1xs3") return ModelName::S1xS3;
  if (s == "cp2") return ModelName::Cp2;
  return std::nullopt;
}

namespace {

/// Constant curvature k on coordinates [begin, end), zero elsewhere.
void add_block(CurvatureTensord& t, int begin, int end, double k) {
  for (int i = begin; i < end; ++i)
    for (int j = begin; j < end; ++j) {
      if (i == j) continue;
      t(i, j, i, j) += k;
      t(i, j, j, i) -= k;
    }
}

}  // namespace

CurvatureTensord build(const ModelSpec& spec) {
  const int n = spec.n;
  switch (spec.name) {
    case ModelName::Sphere:
      if (n < 2 || !(spec.c > 0)) throw PreconditionError("sphere needs n >= 2 and c > 0");
      return constant_curvature<double>(n, spec.c);
    case ModelName::Hyperbolic:
      if (n < 2 || !(spec.c < 0)) throw PreconditionError("hyperbolic needs n >= 2 and c < 0");
      return constant_curvature<double>(n, spec.c);
    case ModelName::Flat:
      if (n < 1) throw PreconditionError("flat needs n >= 1");
      return CurvatureTensord(n);
    case ModelName::ProductSpheres: {
      if (spec.split < 1 || spec.split >= n)
        throw PreconditionError("product needs 1 <= split < n");
      CurvatureTensord t(n);
      add_block(t, 0, spec.split, spec.k1);
      add_block(t, spec.split, n, spec.k2);
      return t;
    }
    case ModelName::S1xS3: {
      if (n != 4) throw PreconditionError("s1_x_s3 is four-dimensional");
      CurvatureTensord t(4);
      add_block(t, 1, 4, spec.k2);
      return t;
    }
    case ModelName::Cp2: {
      if (n != 4 || !(spec.c > 0)) throw PreconditionError("cp2 needs n = 4 and c > 0");
      // J e1 = e2, J e3 = e4; jg(i, k) = <J e_i, e_k>.
      Eigen::Matrix4d jg = Eigen::Matrix4d::Zero();
      jg(0, 1) = 1; jg(1, 0) = -1; jg(2, 3) = 1; jg(3, 2) = -1;
      CurvatureTensord t(4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
              const double g = (i == k) * (j == l) - (i == l) * (j == k);
              const double jj = jg(i, k) * jg(j, l) - jg(i, l) * jg(j, k) + 2.0 * jg(i, j) * jg(k, l);
              t(i, j, k, l) = spec.c / 4.0 * (g + jj);
            }
      return t;
    }
  }
  throw PreconditionError("unknown model");
}

namespace {

std::string describe(const Spectrum<double>& sp) {
  std::ostringstream os;
  os.precision(12);
  os << "spectrum [";
  for (int i = 0; i < sp.size(); ++i) os << (i ? ", " : "") << sp[i];
  os << "]";
  return os.str();
}

}  // namespace

std::vector<ModelClaim> verify_model_claims(double tol) {
  std::vector<ModelClaim> claims;

  {
    const Spectrum<double> sp = spectrum(second_kind(build(ModelSpec::s2xs2())));
    const auto knn = k_nonnegative(sp, 4.5);
    ModelClaim c{"s2xs2_four_and_half_negative", knn.sum < 0 && !knn.holds, knn.sum, 0, describe(sp)};
    c.violation = c.passed ? 0.0 : std::max(0.0, knn.sum);
    if (!c.passed && c.violation == 0.0) c.violation = 1.0;
    claims.push_back(c);
  }
  {
    const Spectrum<double> sp = spectrum(second_kind(build(ModelSpec::sphere(4))));
    ModelClaim c{"sphere_positive_definite", sp[0] > 0, sp[0], std::max(0.0, -sp[0]), describe(sp)};
    if (!c.passed && c.violation == 0.0) c.violation = 1.0;
    claims.push_back(c);
  }
  {
    const CurvatureTensord flat = build(ModelSpec::flat(4));
    const Spectrum<double> sp = spectrum(second_kind(flat));
    const double m = std::max(flat.maxAbs(), sp.values.cwiseAbs().maxCoeff());
    claims.push_back({"flat_zero", m == 0.0, m, m, describe(sp)});
  }
  {
    const Spectrum<double> sp = spectrum(second_kind(build(ModelSpec::cp2())));
    const ConeCheckResult cone = cone_condition(sp, tol);
    const double scale = std::max(1.0, sp.values.cwiseAbs().maxCoeff());
    claims.push_back({"cp2_cone_condition", cone.holds, cone.lhs - cone.rhs,
                      std::max(0.0, cone.rhs - cone.lhs) / scale, describe(sp)});
  }
  for (const auto& [label, spec] : {std::pair{"product_s2xs2_weyl_pattern", ModelSpec::s2xs2()},
                                    std::pair{"product_k1_2_k2_1_weyl_pattern",
                                              ModelSpec::product_spheres(4, 2, 2.0, 1.0)},
                                    std::pair{"product_k1_3_k2_-1_weyl_pattern",
                                              ModelSpec::product_spheres(4, 2, 3.0, -1.0)}}) {
    const DualWeylSpectrum ds = dual_weyl_spectrum(build(spec));
    const Eigen::Vector3d pattern(-ds.s / 12.0, -ds.s / 12.0, ds.s / 6.0);
    const double scale = std::max(1.0, std::abs(ds.s));
    const double dev = std::max((ds.a - pattern).cwiseAbs().maxCoeff(),
                                (ds.b - pattern).cwiseAbs().maxCoeff()) / scale;
    std::ostringstream os;
    os.precision(12);
    os << "s " << ds.s << " a [" << ds.a.transpose() << "] b [" << ds.b.transpose() << "]";
    claims.push_back({label, ds.s > 0 && dev <= tol, dev, dev, os.str()});
  }
  return claims;
}

std::vector<std::pair<std::string, CurvatureTensord>> model_catalog(int n) {
  std::vector<std::pair<std::string, CurvatureTensord>> out;
  out.emplace_back("sphere", build(ModelSpec::sphere(n)));
  out.emplace_back("hyperbolic", build(ModelSpec::hyperbolic(n)));
  out.emplace_back("flat", build(ModelSpec::flat(n)));
  out.emplace_back("product_spheres", build(ModelSpec::product_spheres(n, n / 2, 1.0, 1.0)));
  out.emplace_back("product_flat_sphere", build(ModelSpec::product_spheres(n, 1, 0.0, 1.0)));
  if (n == 4) out.emplace_back("cp2", build(ModelSpec::cp2()));
  return out;
}

}  // namespace curvop
