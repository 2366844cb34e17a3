// spherecert CLI: exact moment tables, harmonic bases, the integral-identity
// table, and the degree-by-degree stability certification, all emitted as
// deterministic JSON/CSV with rationals as "p/q" strings.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <string>

#include "spherecert/certifier.hpp"
#include "spherecert/forms.hpp"
#include "spherecert/harmonics.hpp"
#include "spherecert/json_io.hpp"
#include "spherecert/moments.hpp"
#include "spherecert/sampling.hpp"

namespace {

using namespace spherecert;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void enumerate_even_rows(std::vector<int>& e, int pos, int remaining, const MomentTable& table,
                         bool volume_tag, std::ostream& out) {
    if (pos == static_cast<int>(e.size())) {
        MultiIndex a(e);
        std::string val = table.monomial_moment(a).str();
        if (volume_tag) val += "*|S^" + std::to_string(table.sphere_dim()) + "|";
        for (int i = 0; i < a.dim(); ++i) out << a[i] << ",";
        out << val << "\n";
        return;
    }
    for (int v = 0; v <= remaining; v += 2) {
        e[pos] = v;
        enumerate_even_rows(e, pos + 1, remaining - v, table, volume_tag, out);
    }
    e[pos] = 0;
}

int run_moments(int m, int max_degree, bool volume_tag, const std::string& out_path) {
    MomentTable table(m);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    for (int i = 1; i <= m + 1; ++i) out << "a" << i << ",";
    out << "moment\n";
    std::vector<int> e(m + 1, 0);
    enumerate_even_rows(e, 0, max_degree, table, volume_tag, out);
    return kExitOk;
}

int run_basis(int m, int l, const std::string& out_path) {
    HarmonicSpace space = harmonic_basis(m, l);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << harmonic_space_to_json(space).dump(2) << "\n";
    return kExitOk;
}

// Every integral identity of the S^3 pairing table, one CSV row each.
int run_table_lemma42(const std::string& out_path) {
    MomentTable table(3);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "weight,pair,value,expected,status\n";
    bool all_match = true;
    for (const auto& row : s3_pairing_integral_table(table)) {
        all_match = all_match && row.match;
        out << row.weight << ",(" << row.i << "&" << row.j << ")," << row.value.str() << ","
            << row.expected.str() << "," << (row.match ? "MATCH" : "MISMATCH") << "\n";
    }
    return all_match ? kExitOk : kExitViolation;
}

int run_certify(const std::string& omega_arg, int L, const std::string& scale_str,
                int redundant_max, int jobs, const std::string& out_path) {
    CalibrationSpec spec = load_calibration(omega_arg);
    Rational omega_scale = Rational::parse(scale_str);
    StabilityProblem prob =
        StabilityProblem::from_calibration(spec.omega, spec.m, spec.n, omega_scale);
    CertifyOptions opt;
    opt.L_exact = L;
    opt.redundant_exact_max = redundant_max;
    opt.jobs = jobs;
    CertificateBundle bundle = certify_stability(prob, opt);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << bundle_to_json(bundle, spec).dump(2) << "\n";
    return bundle.certified ? kExitOk : kExitViolation;
}

int run_theorem11(const std::string& omega_arg, int L, const std::string& out_path) {
    CalibrationSpec spec = load_calibration(omega_arg);
    StabilityProblem prob = StabilityProblem::from_calibration(spec.omega, spec.m, spec.n);
    json reports = json::array();
    bool ok = true;
    for (int l = 0; l <= L; ++l) {
        Theorem11Report rep = theorem11_check(prob, l);
        ok = ok && rep.ok;
        reports.push_back(theorem11_report_to_json(rep));
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << json{{"normalization", "Vol(S^m)=1"}, {"reports", reports}, {"ok", ok}}.dump(2) << "\n";
    return ok ? kExitOk : kExitViolation;
}

// Randomized exact checks of the weak co-exactness identity
// int f xi(grad h) = int omega(grad f, grad h) = -int h xi(grad f)
// and of the commutation Delta(xi(grad f)) = xi(grad Delta f).
int run_verify_identities(std::uint64_t seed, int trials, int max_degree,
                          const std::string& out_path) {
    auto table = std::make_shared<MomentTable>(3);
    PolyOneForm xi = kahler3_xi();
    PolyTwoForm omega = kahler3_omega();
    Rng rng(seed);

    json failures = json::array();
    for (int t = 0; t < trials; ++t) {
        SpherePoly f = random_poly(rng, 4, max_degree, 4);
        SpherePoly h = random_poly(rng, 4, max_degree, 4);
        Rational lhs = table->integral(f * xi_apply(xi, h));
        Rational mid = table->integral(omega_pair(omega, f, h));
        Rational rhs = -table->integral(h * xi_apply(xi, f));
        bool coexact = lhs == mid && mid == rhs;

        SpherePoly left = sphere_laplacian(xi_apply(xi, f));
        SpherePoly right = xi_apply(xi, sphere_laplacian(f));
        bool commutes = left == right;

        if (!coexact || !commutes) {
            failures.push_back(json{{"trial", t},
                                    {"coexactness", coexact},
                                    {"laplacian_commutes", commutes},
                                    {"f", poly_to_json(f)},
                                    {"h", poly_to_json(h)}});
        }
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    json j{{"normalization", "Vol(S^m)=1"},
           {"seed", seed},
           {"trials", trials},
           {"max_degree", max_degree},
           {"ok", failures.empty()}};
    if (!failures.empty()) j["failures"] = failures;
    out << j.dump(2) << "\n";
    return failures.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic stability certification on round spheres"};
    app.require_subcommand(1);

    auto* moments_cmd = app.add_subcommand("moments", "Exact monomial moments over S^m as CSV");
    int m = 3, max_degree = 4;
    bool volume_tag = false;
    std::string out_path;
    moments_cmd->add_option("--m", m, "Sphere dimension")->check(CLI::Range(2, 16));
    moments_cmd->add_option("--max-degree", max_degree, "Max total degree")
        ->check(CLI::Range(0, 64));
    moments_cmd->add_flag("--volume-tag", volume_tag,
                          "Append the symbolic |S^m| factor to each moment");
    moments_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* basis_cmd = app.add_subcommand("basis", "Harmonic eigenspace basis as JSON");
    int basis_m = 3, basis_l = 2;
    std::string basis_out;
    basis_cmd->add_option("--m", basis_m, "Sphere dimension")->check(CLI::Range(1, 16));
    basis_cmd->add_option("--l", basis_l, "Degree")->check(CLI::Range(0, 32));
    basis_cmd->add_option("-o,--output", basis_out, "Output file (default stdout)");

    auto* table_cmd =
        app.add_subcommand("table-lemma42", "Integral identity table for the S^3 pairing as CSV");
    std::string table_out;
    table_cmd->add_option("-o,--output", table_out, "Output file (default stdout)");

    auto* certify_cmd =
        app.add_subcommand("certify", "Degree-by-degree stability certification as JSON");
    std::string omega_arg = "kahler3", scale_str = "1", certify_out;
    int L = 2, redundant_max = 0, jobs = 1;
    certify_cmd->add_option("--omega", omega_arg, "Built-in name (kahler3) or calibration file");
    certify_cmd->add_option("--L", L, "Highest degree certified exactly")->check(CLI::Range(2, 16));
    certify_cmd->add_option("--scale", scale_str,
                            "Rational scale applied to omega (2 breaks the calibration)");
    certify_cmd->add_option("--redundant-exact", redundant_max,
                            "Also run exact PSD checks for degrees up to this bound");
    certify_cmd->add_option("--jobs", jobs, "Degree reports computed in parallel")
        ->check(CLI::Range(1, 64));
    certify_cmd->add_option("-o,--output", certify_out, "Output file (default stdout)");

    auto* thm_cmd = app.add_subcommand("theorem11", "Degree preservation and orthogonality report");
    std::string thm_omega = "kahler3", thm_out;
    int thm_L = 4;
    thm_cmd->add_option("--omega", thm_omega, "Built-in name (kahler3) or calibration file");
    thm_cmd->add_option("--L", thm_L, "Check all degrees up to L")->check(CLI::Range(0, 12));
    thm_cmd->add_option("-o,--output", thm_out, "Output file (default stdout)");

    auto* verify_cmd =
        app.add_subcommand("verify-identities", "Seeded randomized exact identity checks");
    std::uint64_t seed = 0;
    int trials = 25, verify_degree = 5;
    std::string verify_out;
    verify_cmd->add_option("--seed", seed, "RNG seed")->required();
    verify_cmd->add_option("--trials", trials, "Number of random polynomial pairs")
        ->check(CLI::Range(1, 100000));
    verify_cmd->add_option("--max-degree", verify_degree, "Max degree of random polynomials")
        ->check(CLI::Range(1, 12));
    verify_cmd->add_option("-o,--output", verify_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (moments_cmd->parsed()) return run_moments(m, max_degree, volume_tag, out_path);
        if (basis_cmd->parsed()) return run_basis(basis_m, basis_l, basis_out);
        if (table_cmd->parsed()) return run_table_lemma42(table_out);
        if (certify_cmd->parsed())
            return run_certify(omega_arg, L, scale_str, redundant_max, jobs, certify_out);
        if (thm_cmd->parsed()) return run_theorem11(thm_omega, thm_L, thm_out);
        if (verify_cmd->parsed())
            return run_verify_identities(seed, trials, verify_degree, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
