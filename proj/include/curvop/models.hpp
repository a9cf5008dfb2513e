#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvop/tensor.hpp"

namespace curvop {

enum class ModelName { Sphere, Flat, Hyperbolic, ProductSpheres, S1xS3, Cp2 };

std::string_view to_string(ModelName m);
/// Accepts the canonical names plus the aliases "s2xs2" and "s1xs3".
std::optional<ModelName> parse_model_name(std::string_view s);

/// Parameters of a model curvature tensor at a point.
///
/// sphere/hyperbolic use c (sign-checked); product_spheres uses k1 on the
/// first `split` coordinates and k2 on the rest; s1_x_s3 uses k2 on the
/// 3-dimensional factor; cp2 uses c as the holomorphic sectional curvature.
struct ModelSpec {
  ModelName name = ModelName::Sphere;
  int n = 4;
  double c = 1.0;
  double k1 = 1.0;
  double k2 = 1.0;
  int split = 2;

  static ModelSpec sphere(int n, double c = 1.0) { return {ModelName::Sphere, n, c}; }
  static ModelSpec flat(int n) { return {ModelName::Flat, n, 0.0}; }
  static ModelSpec hyperbolic(int n, double c = -1.0) { return {ModelName::Hyperbolic, n, c}; }
  static ModelSpec product_spheres(int n, int split, double k1, double k2) {
    return {ModelName::ProductSpheres, n, 0.0, k1, k2, split};
  }
  static ModelSpec s2xs2(double k = 1.0) { return product_spheres(4, 2, k, k); }
  static ModelSpec s1_x_s3(double k = 1.0) { return {ModelName::S1xS3, 4, 0.0, 0.0, k, 1}; }
  static ModelSpec cp2(double c = 4.0) { return {ModelName::Cp2, 4, c}; }
};

/// Throws PreconditionError on out-of-range parameters.
CurvatureTensord build(const ModelSpec& spec);

struct ModelClaim {
  std::string name;
  bool passed = false;
  /// Quantity the claim is about (weighted sum, cone margin, ...).
  double value = 0;
  /// How far the claim is from holding, relative to the model's scale; 0 when it holds.
  double violation = 0;
  std::string detail;
};

/// The named spectral facts about the model geometries:
/// S2xS2 is 4.5-negative, the round S4 has positive-definite second-kind
/// operator, flat is zero, CP2 satisfies the cone condition, and a product
/// of surfaces has the (-s/12, -s/12, s/6) self-dual Weyl pattern.
std::vector<ModelClaim> verify_model_claims(double tol = 1e-9);

/// Models available in dimension n, used by the identity suite.
std::vector<std::pair<std::string, CurvatureTensord>> model_catalog(int n);

}  // namespace curvop
