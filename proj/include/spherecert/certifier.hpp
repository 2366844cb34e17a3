#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spherecert/forms.hpp"
#include "spherecert/harmonics.hpp"
#include "spherecert/moments.hpp"

namespace spherecert {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

enum class PsdStatus { positive_definite, psd_with_kernel, tail_bounded, not_psd };

std::string to_string(PsdStatus s);

/// Outcome of the exact block factorization of [[G, -K], [K, G]].
struct PsdResult {
    PsdStatus status = PsdStatus::not_psd;
    int kernel_dim = 0;
    /// Kernel vectors of the block matrix, content-normalized integers.
    std::vector<RationalVector> kernel;
    /// When not PSD: an explicit x with x^T [[G,-K],[K,G]] x < 0.
    std::optional<RationalVector> witness;
    Rational witness_value;
    /// The pivots d_k = D_k / D_{k-1} of the factorization, in elimination
    /// order, expressed for the unscaled rational block matrix.
    std::vector<Rational> pivots;

    Rational min_pivot() const;
};

/// Exact PSD certification of the stability block matrix [[G, -K], [K, G]]
/// by fraction-free symmetric elimination with exact pivot signs.
/// Preconditions: G symmetric, K antisymmetric, same square size.
PsdResult psd_certificate(const RationalMatrix& G, const RationalMatrix& K);

/// Per-degree certification record for the inequality
/// -6 int omega(grad f, grad h) <= |grad f|^2 + |grad h|^2 over E_{lambda_l}.
struct DegreeReport {
    int l = 0;
    long long lambda = 0;
    int dim = 0;
    /// Dirichlet Gram matrix G_ab = int <grad b_a, grad b_b>.
    RationalMatrix G;
    /// Skew pairing K_ab = -3 int omega(grad b_a, grad b_b).
    RationalMatrix K;
    PsdResult psd;
    std::vector<SpherePoly> basis;
};

/// Exact comparison record behind the Rayleigh tail argument: the chain
/// |-3 int f xi(grad h)| <= 3|f| |grad h| <= (3/sqrt(lambda_l))|grad f| |grad h|
/// is strict for every degree with m^2 < lambda_l.
struct TailBound {
    int l = 0;
    long long threshold = 0;  // m^2
    long long lambda = 0;     // l(l+m-1)
    bool strict = false;      // threshold < lambda
};

TailBound rayleigh_tail_bound(int l, int sphere_dim = 3);

struct Theorem11Entry {
    int basis_index = 0;
    bool in_eigenspace = false;
    bool l2_orthogonal = false;
};

/// Degree-preservation and orthogonality report: for every basis f of
/// E_{lambda_l}, h = xi(grad f) satisfies Delta_S h = lambda_l h and
/// int f h = 0.
struct Theorem11Report {
    int l = 0;
    bool ok = false;
    std::vector<Theorem11Entry> failures;
    int checked = 0;
};

/// Fixed configuration the certifier runs against: the calibration data on
/// S^m and a shared moment table.
struct StabilityProblem {
    int m = 3;
    int n = 3;
    ConstantForm omega_ambient;
    ConstantForm xi_hat;
    PolyOneForm xi;
    PolyTwoForm omega;
    /// Scale applied to omega (1 for the genuine calibration; the negative
    /// control scales by 2).
    Rational omega_scale = 1;
    std::shared_ptr<MomentTable> moments;

    static StabilityProblem kahler3(const Rational& omega_scale = 1);
    /// Builds the pipeline Omega -> hat{xi}_{alpha beta} -> xi -> omega for
    /// the single normal pair (m+2, m+3); requires n = 3 and m = 3.
    static StabilityProblem from_calibration(const ConstantForm& omega_amb, int m, int n,
                                             const Rational& omega_scale = 1);
};

DegreeReport assemble_matrices(const StabilityProblem& prob, int l);

bool cross_degree_check(const StabilityProblem& prob, int l, int s);

Theorem11Report theorem11_check(const StabilityProblem& prob, int l);

/// Conversion between the two statements of the sharp constant:
/// the short inequality -m int omega <= |grad f| |grad h| with omega =
/// (1/2) phi^* varpi is the same as -int varpi <= (2/m) |grad f| |grad h|.
struct ConstantBookkeeping {
    Rational short_coefficient;   // m, multiplying -int omega
    Rational omega_varpi_factor;  // 1/2: omega = factor * phi^* varpi
    Rational corollary_constant;  // 2/m
};

ConstantBookkeeping stability_constants(int sphere_dim);

struct EqualityFamily {
    int l = 1;
    /// Human-readable relation when the kernel matches the reference family.
    std::string relation;
    std::vector<RationalVector> kernel;
};

struct CertificateBundle {
    int L_exact = 2;
    Rational omega_scale = 1;
    std::vector<DegreeReport> degrees;
    TailBound tail;
    bool cross_degree_zero = false;
    std::vector<std::pair<int, int>> cross_degree_failures;
    std::vector<Theorem11Report> theorem11;
    std::optional<EqualityFamily> equality_family;
    ConstantBookkeeping constants;
    /// Exact confirmations beyond L_exact, when requested.
    std::vector<DegreeReport> redundant;
    bool certified = false;
};

struct CertifyOptions {
    int L_exact = 2;
    /// Highest degree for optional exact PSD confirmation past L_exact
    /// (0 disables; the tail bound already covers l >= 3).
    int redundant_exact_max = 0;
    int jobs = 1;
};

/// Runs assemble+psd for l = 1..L_exact, the Rayleigh tail comparison at
/// l = 3, cross-degree checks for all pairs <= L_exact, and the
/// degree-preservation report. Verdict certified iff all pass.
CertificateBundle certify_stability(const StabilityProblem& prob, const CertifyOptions& opt);

}  // namespace spherecert
