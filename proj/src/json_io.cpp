#include "spherecert/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace spherecert {

json poly_to_json(const SpherePoly& p) {
    json terms = json::array();
    for (const auto& [a, c] : p.terms())
        terms.push_back(json{{"exp", a.exponents()}, {"coeff", c.str()}});
    return terms;
}

SpherePoly poly_from_json(const json& j, int expected_dim) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected a list of terms");
    int dim = expected_dim;
    if (dim < 0) {
        if (j.empty())
            throw std::invalid_argument("poly_from_json: dimension of empty polynomial unknown");
        dim = static_cast<int>(j.front().at("exp").size());
    }
    SpherePoly p(dim);
    for (const auto& t : j) {
        std::vector<int> exp = t.at("exp").get<std::vector<int>>();
        if (static_cast<int>(exp.size()) != dim)
            throw std::invalid_argument("poly_from_json: inconsistent exponent length");
        p.add_term(MultiIndex(std::move(exp)), Rational::parse(t.at("coeff").get<std::string>()));
    }
    return p;
}

json rational_vector_to_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json rational_matrix_to_json(const RationalMatrix& M) {
    json out = json::array();
    for (const auto& row : M) out.push_back(rational_vector_to_json(row));
    return out;
}

json calibration_to_json(const CalibrationSpec& spec) {
    json terms = json::array();
    for (const auto& [idx, c] : spec.omega.terms)
        terms.push_back(json{{"idx", idx}, {"coeff", c.str()}});
    return json{{"m", spec.m}, {"n", spec.n}, {"rank", spec.omega.rank}, {"terms", terms}};
}

CalibrationSpec calibration_from_json(const json& j) {
    CalibrationSpec spec;
    spec.m = j.at("m").get<int>();
    spec.n = j.at("n").get<int>();
    int rank = j.at("rank").get<int>();
    if (spec.m < 2) throw std::invalid_argument("calibration: m must be >= 2");
    if (rank != spec.m + 1) throw std::invalid_argument("calibration: rank must equal m + 1");
    spec.omega = ConstantForm(spec.m + spec.n, rank);
    for (const auto& t : j.at("terms")) {
        spec.omega.add_term(t.at("idx").get<std::vector<int>>(),
                            Rational::parse(t.at("coeff").get<std::string>()));
    }
    return spec;
}

CalibrationSpec load_calibration(const std::string& name_or_path) {
    if (name_or_path == "kahler3") return CalibrationSpec{3, 3, kahler3_calibration()};
    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("cannot open calibration file: " + name_or_path);
    json j;
    in >> j;
    return calibration_from_json(j);
}

json harmonic_space_to_json(const HarmonicSpace& space) {
    json basis = json::array();
    for (const auto& b : space.basis) basis.push_back(poly_to_json(b));
    return json{{"m", space.sphere_dim},
                {"l", space.degree},
                {"lambda", space.eigenvalue},
                {"dim", space.dim()},
                {"basis", basis}};
}

json degree_report_to_json(const DegreeReport& rep) {
    json j{{"l", rep.l},
           {"lambda", rep.lambda},
           {"dim", rep.dim},
           {"status", to_string(rep.psd.status)},
           {"kernel_dim", rep.psd.kernel_dim},
           {"G", rational_matrix_to_json(rep.G)},
           {"K", rational_matrix_to_json(rep.K)}};
    if (!rep.psd.pivots.empty()) {
        j["min_pivot"] = rep.psd.min_pivot().str();
        json pivots = json::array();
        for (const auto& p : rep.psd.pivots) pivots.push_back(p.str());
        j["pivots"] = pivots;
    }
    if (!rep.psd.kernel.empty()) {
        json kernel = json::array();
        for (const auto& v : rep.psd.kernel) kernel.push_back(rational_vector_to_json(v));
        j["kernel_basis"] = kernel;
    }
    if (rep.psd.witness) {
        j["witness"] = rational_vector_to_json(*rep.psd.witness);
        j["witness_value"] = rep.psd.witness_value.str();
    }
    return j;
}

json tail_bound_to_json(const TailBound& t) {
    return json{{"l", t.l},
                {"threshold_m_squared", t.threshold},
                {"lambda", t.lambda},
                {"strict", t.strict}};
}

json theorem11_report_to_json(const Theorem11Report& rep) {
    json j{{"l", rep.l}, {"ok", rep.ok}, {"checked", rep.checked}};
    if (!rep.failures.empty()) {
        json f = json::array();
        for (const auto& e : rep.failures)
            f.push_back(json{{"basis_index", e.basis_index},
                             {"in_eigenspace", e.in_eigenspace},
                             {"l2_orthogonal", e.l2_orthogonal}});
        j["failures"] = f;
    }
    return j;
}

json bundle_to_json(const CertificateBundle& bundle, const CalibrationSpec& spec) {
    json degrees = json::array();
    for (const auto& rep : bundle.degrees) degrees.push_back(degree_report_to_json(rep));
    json theorem11 = json::array();
    for (const auto& rep : bundle.theorem11) theorem11.push_back(theorem11_report_to_json(rep));

    json j{{"normalization", "Vol(S^m)=1"},
           {"calibration", calibration_to_json(spec)},
           {"omega_scale", bundle.omega_scale.str()},
           {"L_exact", bundle.L_exact},
           {"degrees", degrees},
           {"tail", tail_bound_to_json(bundle.tail)},
           {"cross_degree_zero", bundle.cross_degree_zero},
           {"theorem11", theorem11},
           {"constants",
            {{"short_coefficient", bundle.constants.short_coefficient.str()},
             {"omega_varpi_factor", bundle.constants.omega_varpi_factor.str()},
             {"corollary_constant", bundle.constants.corollary_constant.str()}}},
           {"verdict", bundle.certified ? "certified" : "not_certified"}};
    if (!bundle.cross_degree_failures.empty()) {
        json f = json::array();
        for (auto [l, s] : bundle.cross_degree_failures) f.push_back(json::array({l, s}));
        j["cross_degree_failures"] = f;
    }
    if (bundle.equality_family) {
        json fam{{"l", bundle.equality_family->l}};
        if (!bundle.equality_family->relation.empty())
            fam["relation"] = bundle.equality_family->relation;
        json kernel = json::array();
        for (const auto& v : bundle.equality_family->kernel)
            kernel.push_back(rational_vector_to_json(v));
        fam["kernel_basis"] = kernel;
        j["equality_family"] = fam;
    }
    if (!bundle.redundant.empty()) {
        json red = json::array();
        for (const auto& rep : bundle.redundant) red.push_back(degree_report_to_json(rep));
        j["redundant_exact"] = red;
    }
    return j;
}

}  // namespace spherecert
