#pragma once

#include <iosfwd>
#include <string>

#include "curvop/fourdim.hpp"
#include "curvop/identities.hpp"

namespace curvop {

/// Dense JSON: {"n", "format": "dense", "components": [n^4 row-major]}.
std::string tensor_to_json(const CurvatureTensord& t);

/// Reads the dense or parts format. Throws StructuralError on malformed
/// input and when a symmetry residual exceeds tol * max(1, |T|).
CurvatureTensord tensor_from_json(const std::string& text, double tol = 1e-9);

std::string spectrum_to_json(const Spectrum<double>& sp, int n);

/// Accepts {"eigenvalues": [...]} with optional "N"; values are sorted.
Spectrum<double> spectrum_from_json(const std::string& text);

std::string suite_report_to_json(int n, std::uint64_t seed, const std::vector<IdentityReport>& reports);

std::string classify4d_to_json(const Classify4dReport& r);

/// Whole stream, or stdin when path is "-".
std::string read_input(const std::string& path);

}  // namespace curvop
