#pragma once

#include <map>
#include <string>
#include <vector>

#include "spherecert/multi_index.hpp"
#include "spherecert/rational.hpp"

namespace spherecert {

/// Sparse multivariate polynomial with exact rational coefficients in the
/// m+1 ambient variables phi_1..phi_{m+1}, representing a function on S^m
/// modulo the relation sum phi_i^2 = 1.
///
/// The term map never stores zero coefficients. Two SpherePolys are equal as
/// functions on the sphere iff their difference reduces to zero under
/// reduce_on_sphere (see equal_on_sphere).
class SpherePoly {
public:
    explicit SpherePoly(int ambient_dim);
    SpherePoly(int ambient_dim, const Rational& constant);

    /// phi_{pos+1}, pos in 0..ambient_dim-1.
    static SpherePoly variable(int ambient_dim, int pos);
    static SpherePoly monomial(MultiIndex a, Rational c);

    int ambient_dim() const { return ambient_dim_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; 0 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    Rational coeff(const MultiIndex& a) const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Adds c*phi^a in place, dropping the term if it cancels.
    SpherePoly& add_term(const MultiIndex& a, const Rational& c);

    SpherePoly operator-() const;
    SpherePoly& operator+=(const SpherePoly& o);
    SpherePoly& operator-=(const SpherePoly& o);
    friend SpherePoly operator+(SpherePoly a, const SpherePoly& b) { return a += b; }
    friend SpherePoly operator-(SpherePoly a, const SpherePoly& b) { return a -= b; }
    friend SpherePoly operator*(const SpherePoly& a, const SpherePoly& b);
    friend SpherePoly operator*(const Rational& c, const SpherePoly& p);
    friend SpherePoly operator*(const SpherePoly& p, const Rational& c) { return c * p; }

    /// Exact equality of representatives (not equality on the sphere).
    friend bool operator==(const SpherePoly& a, const SpherePoly& b);
    friend bool operator!=(const SpherePoly& a, const SpherePoly& b) { return !(a == b); }

    /// d/dphi_{pos+1}.
    SpherePoly derivative(int pos) const;

    std::map<int, SpherePoly> homogeneous_components() const;

    std::string str() const;

private:
    int ambient_dim_ = 0;
    std::map<MultiIndex, Rational> terms_;
};

/// sum phi_i^2, the sphere relation polynomial.
SpherePoly radius_squared(int ambient_dim);

/// Delta^0 p = sum_i d^2 p / dphi_i^2 on the ambient representative.
SpherePoly euclidean_laplacian(const SpherePoly& p);

/// Radial (Euler) derivative sum_i phi_i * dp/dphi_i.
SpherePoly radial_derivative(const SpherePoly& p);

/// Components of the tangential gradient of f on S^m:
/// (grad f)_i = d_i f - phi_i * sum_j phi_j d_j f.
std::vector<SpherePoly> tangential_gradient(const SpherePoly& f);

/// Tangential pairing <grad f, grad h> on S^m as an ambient polynomial:
/// sum_i d_i f d_i h - (sum_i phi_i d_i f)(sum_j phi_j d_j h).
SpherePoly grad_pairing(const SpherePoly& f, const SpherePoly& h);

/// Canonical representative of p modulo sum phi_i^2 = 1: the unique sum of
/// harmonic homogeneous polynomials equal to p on the sphere.
/// Implemented in harmonics.cpp via the harmonic decomposition.
SpherePoly reduce_on_sphere(const SpherePoly& p);

/// True iff p and q agree as functions on the sphere.
bool equal_on_sphere(const SpherePoly& p, const SpherePoly& q);

}  // namespace spherecert
