#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "spherecert/certifier.hpp"
#include "spherecert/forms.hpp"
#include "spherecert/harmonics.hpp"
#include "spherecert/sphere_poly.hpp"

namespace spherecert {

using json = nlohmann::json;

/// Polynomial wire encoding shared by every module: a list of
/// {"exp": [a_1, ..., a_{m+1}], "coeff": "p/q"} with reduced fraction strings.
json poly_to_json(const SpherePoly& p);
SpherePoly poly_from_json(const json& j, int expected_dim = -1);

json rational_vector_to_json(const RationalVector& v);
json rational_matrix_to_json(const RationalMatrix& M);

/// Calibration spec file: {"m":3, "n":3, "rank":4, "terms":[{"idx":[...],
/// "coeff":"1"}, ...]}. "kahler3" is built in.
struct CalibrationSpec {
    int m = 3;
    int n = 3;
    ConstantForm omega;
};

json calibration_to_json(const CalibrationSpec& spec);
CalibrationSpec calibration_from_json(const json& j);

/// Resolves a --omega argument: the built-in name "kahler3" or a file path.
CalibrationSpec load_calibration(const std::string& name_or_path);

json harmonic_space_to_json(const HarmonicSpace& space);
json degree_report_to_json(const DegreeReport& rep);
json tail_bound_to_json(const TailBound& t);
json theorem11_report_to_json(const Theorem11Report& rep);
json bundle_to_json(const CertificateBundle& bundle, const CalibrationSpec& spec);

}  // namespace spherecert
