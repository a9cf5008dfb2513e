// curvop: batch front end for the curvature operator library.
//
// Exit codes: 0 ok, 1 a checked condition failed, 2 bad flags or input,
// 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "curvop/fourdim.hpp"
#include "curvop/identities.hpp"
#include "curvop/io.hpp"
#include "curvop/models.hpp"
#include "curvop/weighted.hpp"

using namespace curvop;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kNumerical = 3;

/// Decimal or "p/q".
double parse_number(const std::string& text) {
  std::size_t used = 0;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw StructuralError("");
      return v;
    }
    const std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    const long long num = std::stoll(p, &used);
    if (used != p.size()) throw StructuralError("");
    const long long den = std::stoll(q, &used);
    if (used != q.size() || den == 0) throw StructuralError("");
    return to_double(Rational(num, den));
  } catch (const std::exception&) {
    throw StructuralError("not a number or ratio: " + text);
  }
}

double default_tol() {
  if (const char* env = std::getenv("CURVOP_TOL")) return parse_number(env);
  return 1e-9;
}

/// Either a spectrum document or a tensor whose second-kind spectrum is taken.
Spectrum<double> spectrum_of_input(const std::string& text, double tol) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_object() && j.contains("eigenvalues")) return spectrum_from_json(text);
  return spectrum(second_kind(tensor_from_json(text, tol)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic curvature tensors and the curvature operator of the second kind"};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::string input = "-";

  auto* model = app.add_subcommand("model", "Emit a model tensor as JSON");
  std::string model_name;
  int model_n = 4;
  std::optional<double> model_c;
  double model_k1 = 1.0, model_k2 = 1.0;
  std::optional<int> model_split;
  model->add_option("--name", model_name, "sphere | flat | hyperbolic | product_spheres | s2xs2 | s1_x_s3 | cp2")
      ->required();
  model->add_option("--n", model_n, "Dimension");
  model->add_option("--c", model_c, "Sectional curvature (holomorphic for cp2)");
  model->add_option("--k1", model_k1, "Curvature of the first product factor");
  model->add_option("--k2", model_k2, "Curvature of the second product factor");
  model->add_option("--split", model_split, "Dimension of the first product factor");

  auto* spec_cmd = app.add_subcommand("spectrum", "Sorted spectrum of the second-kind operator");
  spec_cmd->add_option("--input", input, "Tensor JSON file, - for stdin");

  auto* knn = app.add_subcommand("check-knn", "Fractional k-nonnegativity");
  std::string k_text;
  knn->add_option("--input", input, "Tensor or spectrum JSON, - for stdin");
  knn->add_option("--k", k_text, "k as a decimal or p/q")->required();

  auto* cone = app.add_subcommand("cone", "Four-dimensional cone condition");
  cone->add_option("--input", input, "Tensor or spectrum JSON, - for stdin");

  auto* classify = app.add_subcommand("classify4d", "Self-dual and anti-self-dual Weyl report");
  classify->add_option("--input", input, "Tensor JSON, - for stdin");

  auto* bound = app.add_subcommand("bound", "Best lower bound of a weighted eigenvalue sum");
  std::string omega_text, total_text;
  bound->add_option("--spectrum", input, "Spectrum or tensor JSON, - for stdin")->required();
  bound->add_option("--omega", omega_text, "Highest weight")->required();
  bound->add_option("--total", total_text, "Total weight")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  int verify_n = 4, trials = 10;
  std::uint64_t seed = 0;
  std::string suite_name = "all";
  verify->add_option("--n", verify_n, "Dimension")->required();
  verify->add_option("--trials", trials, "Random tensors per check");
  verify->add_option("--seed", seed, "Seed");
  verify->add_option("--suite", suite_name, "all | equalities | inequalities | models");

  std::optional<double> tol_flag;
  for (auto* sub : {spec_cmd, knn, cone, classify, bound, verify})
    sub->add_option("--tol", tol_flag, "Tolerance (default CURVOP_TOL or 1e-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    tol = tol_flag ? *tol_flag : default_tol();
    if (!(tol >= 0)) throw StructuralError("tolerance must be nonnegative");

    if (*model) {
      const auto name = parse_model_name(model_name);
      if (!name) throw StructuralError("unknown model " + model_name);
      ModelSpec spec;
      switch (*name) {
        case ModelName::Sphere: spec = ModelSpec::sphere(model_n, model_c.value_or(1.0)); break;
        case ModelName::Flat: spec = ModelSpec::flat(model_n); break;
        case ModelName::Hyperbolic: spec = ModelSpec::hyperbolic(model_n, model_c.value_or(-1.0)); break;
        case ModelName::ProductSpheres:
          spec = ModelSpec::product_spheres(model_n, model_split.value_or(model_n / 2), model_k1, model_k2);
          break;
        case ModelName::S1xS3: spec = ModelSpec::s1_x_s3(model_k2); break;
        case ModelName::Cp2: spec = ModelSpec::cp2(model_c.value_or(4.0)); break;
      }
      if (*name == ModelName::S1xS3 || *name == ModelName::Cp2) spec.n = model_n;
      std::cout << tensor_to_json(build(spec)) << "\n";
      return kOk;
    }

    if (*spec_cmd) {
      const CurvatureTensord t = tensor_from_json(read_input(input), tol);
      std::cout << spectrum_to_json(spectrum(second_kind(t)), t.dim()) << "\n";
      return kOk;
    }

    if (*knn) {
      const double k = parse_number(k_text);
      const Spectrum<double> sp = spectrum_of_input(read_input(input), tol);
      if (!(k >= 1 && k <= sp.size())) throw PreconditionError("k must lie in [1, N]");
      const auto scale = std::max(1.0, sp.values.cwiseAbs().maxCoeff());
      const KnnResult<double> r = k_nonnegative(sp, k, tol * scale);
      json j;
      j["k"] = k;
      j["holds"] = r.holds;
      j["weighted_sum"] = r.sum;
      std::cout << j.dump() << "\n";
      return r.holds ? kOk : kFailed;
    }

    if (*cone) {
      const ConeCheckResult r = cone_condition(spectrum_of_input(read_input(input), tol), tol);
      json j;
      j["lhs"] = r.lhs;
      j["rhs"] = r.rhs;
      j["holds"] = r.holds;
      std::cout << j.dump() << "\n";
      return r.holds ? kOk : kFailed;
    }

    if (*classify) {
      const CurvatureTensord t = tensor_from_json(read_input(input), tol);
      if (t.dim() != 4) throw StructuralError("classify4d needs n = 4");
      std::cout << classify4d_to_json(classify4d(t, tol)) << "\n";
      return kOk;
    }

    if (*bound) {
      const Spectrum<double> sp = spectrum_of_input(read_input(input), tol);
      const WeightedSumSpec<double> spec(parse_number(omega_text), parse_number(total_text));
      const BestLowerBound b = best_lower_bound(sp, spec);
      json j;
      j["omega"] = spec.omega;
      j["total"] = spec.total;
      j["value"] = b.value;
      j["certified_nonnegative"] = b.certified_nonnegative;
      std::cout << j.dump() << "\n";
      return kOk;
    }

    if (*verify) {
      SuiteSelection selection;
      if (!parse_suite_selection(suite_name, selection)) throw StructuralError("unknown suite " + suite_name);
      const auto reports = run_suite(verify_n, trials, seed, tol, selection);
      std::cout << suite_report_to_json(verify_n, seed, reports) << "\n";
      return suite_passed(reports) ? kOk : kFailed;
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
