#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spherecert/rational.hpp"
#include "spherecert/sphere_poly.hpp"

namespace spherecert {

/// Constant alternating form of fixed rank on R^{m+n} with rational
/// coefficients. Index tuples are strictly increasing and 1-based, matching
/// the dx^{i...j} notation (dx^{1234} is stored as {1,2,3,4}).
struct ConstantForm {
    int ambient_dim = 0;
    int rank = 0;
    std::map<std::vector<int>, Rational> terms;

    ConstantForm() = default;  // empty form; populate via the (dim, rank) ctor
    ConstantForm(int ambient_dim, int rank);

    /// Adds c * dx^idx, combining with an existing term.
    ConstantForm& add_term(std::vector<int> idx, const Rational& c);

    bool is_zero() const { return terms.empty(); }
};

/// The rank-4 Kaehler calibration of R^6 = C^3:
/// Omega = dx^{1234} + dx^{1256} + dx^{3456} (one half of the squared
/// Kaehler form dx^{12} + dx^{34} + dx^{56}).
ConstantForm kahler3_calibration();

/// Double normal contraction i_{W_beta} i_{W_alpha} Omega producing the
/// constant (m-1)-form hat{xi}_{alpha beta}. Axes are 1-based and must be
/// distinct normal directions, i.e. in m+2..m+n.
ConstantForm interior_product(const ConstantForm& omega_amb, int sphere_dim, int axis_alpha,
                              int axis_beta);

/// 1-form on S^m with polynomial coefficients, kept as the m+1 ambient
/// components c_i of dphi^i modulo the normal covector sum phi_i dphi^i.
struct PolyOneForm {
    std::vector<SpherePoly> components;

    PolyOneForm() = default;
    explicit PolyOneForm(int ambient_dim);

    int ambient_dim() const { return static_cast<int>(components.size()); }
    bool is_zero() const;

    /// Pointwise tangential norm squared as a polynomial:
    /// sum c_i^2 - (sum phi_i c_i)^2, well defined under the modulus.
    SpherePoly tangential_norm_sq() const;
};

/// 2-form on S^m with polynomial coefficients of dphi^i wedge dphi^j, i < j
/// (1-based), modulo the normal covector.
struct PolyTwoForm {
    int ambient_dim = 0;
    std::map<std::pair<int, int>, SpherePoly> components;

    PolyTwoForm() = default;
    explicit PolyTwoForm(int ambient_dim);

    PolyTwoForm& add_component(int i, int j, const SpherePoly& c);
};

PolyTwoForm scale(const PolyTwoForm& w, const Rational& c);

/// xi = * phi^* hat{xi}: closed-form star rule. A term c dx^J with
/// J subset {1..m+1} of size m-1 and complement {i<j} maps to
/// c * sgn(J,i,j) * (phi_i dphi^j - phi_j dphi^i); terms touching a normal
/// index pull back to zero. sgn is the sign of the permutation (J,i,j) of
/// (1..m+1). Exact for m = 3; for other m the same rule is used and is
/// validated against the pointwise numeric star oracle.
PolyOneForm star_pullback(const ConstantForm& xi_hat, int sphere_dim);

/// omega = 1/2 phi^* hat{xi} restricted to the sphere; requires the rank-2
/// case (sphere_dim = 3).
PolyTwoForm omega_from_xi(const ConstantForm& xi_hat, int sphere_dim);

/// xi evaluated on the tangential gradient of f, reduced on the sphere.
SpherePoly xi_apply(const PolyOneForm& xi, const SpherePoly& f);

/// omega evaluated on the tangential gradients of f and h, reduced.
SpherePoly omega_pair(const PolyTwoForm& w, const SpherePoly& f, const SpherePoly& h);

/// Built-in Kaehler data on S^3: hat{xi} = dx^{12} + dx^{34},
/// xi = phi_1 dphi^2 - phi_2 dphi^1 + phi_3 dphi^4 - phi_4 dphi^3,
/// omega = 1/2 (dphi^1 ^ dphi^2 + dphi^3 ^ dphi^4).
ConstantForm kahler3_xi_hat();
PolyOneForm kahler3_xi();
PolyTwoForm kahler3_omega();

class MomentTable;

/// One row of the S^3 pairing integral table:
/// -3 int w * omega(grad phi_i, grad phi_j) computed exactly and compared
/// with its known multiple of int phi^2, over every weight w in
/// {1, phi_k, phi_k phi_s} and every pair i < j. Unlisted combinations
/// must vanish.
struct PairingTableRow {
    std::string weight;
    int i = 0;
    int j = 0;
    Rational value;
    Rational expected;
    bool match = false;
};

std::vector<PairingTableRow> s3_pairing_integral_table(const MomentTable& table);

}  // namespace spherecert
