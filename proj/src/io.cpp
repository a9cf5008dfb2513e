#include "curvop/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace curvop {

using nlohmann::json;

namespace {

json number_array(const double* begin, std::size_t count) { return json(std::vector<double>(begin, begin + count)); }

std::vector<double> read_numbers(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw StructuralError(std::string("missing array \"") + key + "\"");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw StructuralError(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(v.get<double>());
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
}

int int_root(std::size_t size, int power) {
  const int r = static_cast<int>(std::lround(std::pow(static_cast<double>(size), 1.0 / power)));
  std::size_t back = 1;
  for (int i = 0; i < power; ++i) back *= static_cast<std::size_t>(r);
  if (back != size) throw StructuralError("array length is not a perfect power");
  return r;
}

}  // namespace

std::string tensor_to_json(const CurvatureTensord& t) {
  json j;
  j["n"] = t.dim();
  j["format"] = "dense";
  j["components"] = number_array(t.flat().data(), t.flat().size());
  return j.dump();
}

CurvatureTensord tensor_from_json(const std::string& text, double tol) {
  const json j = parse(text);
  if (!j.is_object()) throw StructuralError("tensor JSON must be an object");
  const std::string format = j.value("format", std::string("dense"));
  std::optional<CurvatureTensord> parsed;
  if (format == "dense") {
    const auto comps = read_numbers(j, "components");
    const int n = j.contains("n") ? j.at("n").get<int>() : int_root(comps.size(), 4);
    if (n < 1 || comps.size() != static_cast<std::size_t>(n) * n * n * n)
      throw StructuralError("components must hold n^4 entries");
    parsed.emplace(n, comps);
  } else if (format == "parts") {
    const auto weyl = read_numbers(j, "weyl");
    const auto ric = read_numbers(j, "traceless_ricci");
    if (!j.contains("scalar") || !j.at("scalar").is_number()) throw StructuralError("missing \"scalar\"");
    const int n = j.contains("n") ? j.at("n").get<int>() : int_root(weyl.size(), 4);
    if (n < 3) throw StructuralError("parts format needs n >= 3");
    if (weyl.size() != static_cast<std::size_t>(n) * n * n * n || ric.size() != static_cast<std::size_t>(n) * n)
      throw StructuralError("parts have inconsistent sizes");
    CurvatureDecomposition<double> d;
    d.scalar = j.at("scalar").get<double>();
    d.traceless_ricci = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        ric.data(), n, n);
    d.weyl = CurvatureTensord(n, weyl);
    const double scale = std::max(1.0, d.traceless_ricci.norm());
    if ((d.traceless_ricci - d.traceless_ricci.transpose()).cwiseAbs().maxCoeff() > tol * scale ||
        std::abs(d.traceless_ricci.trace()) > tol * scale)
      throw StructuralError("traceless_ricci must be symmetric and trace-free");
    parsed = d.reassemble();
  } else {
    throw StructuralError("unknown tensor format \"" + format + "\"");
  }
  const CurvatureTensord& t = *parsed;
  const auto bad = validate(t, tol * std::max(1.0, t.norm()));
  if (!bad.empty()) {
    std::string msg = "tensor violates";
    for (auto v : bad) msg += std::string(" ") + std::string(to_string(v));
    throw StructuralError(msg);
  }
  return *parsed;
}

std::string spectrum_to_json(const Spectrum<double>& sp, int n) {
  json j;
  j["n"] = n;
  j["N"] = sp.size();
  j["eigenvalues"] = number_array(sp.values.data(), static_cast<std::size_t>(sp.size()));
  j["mean"] = sp.mean;
  return j.dump();
}

Spectrum<double> spectrum_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw StructuralError("spectrum JSON must be an object");
  auto values = read_numbers(j, "eigenvalues");
  if (values.empty()) throw StructuralError("empty spectrum");
  if (j.contains("N") && j.at("N").get<std::size_t>() != values.size())
    throw StructuralError("N does not match the eigenvalue count");
  std::sort(values.begin(), values.end());
  Spectrum<double> sp;
  sp.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  sp.mean = sp.values.mean();
  return sp;
}

std::string suite_report_to_json(int n, std::uint64_t seed, const std::vector<IdentityReport>& reports) {
  json checks = json::array();
  for (const auto& r : reports) {
    json c;
    c["name"] = r.name;
    c["trials"] = r.trials;
    // JSON has no infinity; failed checks with an exception report null.
    if (std::isfinite(r.max_relative_residual))
      c["max_relative_residual"] = r.max_relative_residual;
    else
      c["max_relative_residual"] = nullptr;
    c["passed"] = r.passed;
    c["asserted"] = r.asserted;
    if (!r.error.empty()) c["error"] = r.error;
    checks.push_back(c);
  }
  json j;
  j["n"] = n;
  j["seed"] = seed;
  j["checks"] = checks;
  return j.dump(2);
}

std::string classify4d_to_json(const Classify4dReport& r) {
  json j;
  j["a"] = number_array(r.dual.a.data(), 3);
  j["b"] = number_array(r.dual.b.data(), 3);
  j["s"] = r.dual.s;
  j["cone_holds"] = r.cone_holds;
  j["branch_hint"] = std::string(to_string(r.branch_hint));
  return j.dump();
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace curvop
