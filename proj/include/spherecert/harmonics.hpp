#pragma once

#include <utility>
#include <vector>

#include "spherecert/sphere_poly.hpp"

namespace spherecert {

/// lambda_l = l(l+m-1), the sphere Laplacian eigenvalue (positive spectrum).
long long sphere_eigenvalue(int sphere_dim, int l);

/// dim E_{lambda_l} = C(m+l, m) - C(m+l-2, m).
long long harmonic_space_dim(int sphere_dim, int l);

/// All degree-`degree` multi-indices over `dim` variables, enumerated with
/// the leading variable's exponent descending (so degree 1 lists
/// phi_1, phi_2, ... in order).
std::vector<MultiIndex> monomials_of_degree(int dim, int degree);

/// Exact rational basis of the degree-l eigenspace: harmonic homogeneous
/// polynomials of degree l in m+1 variables.
struct HarmonicSpace {
    int sphere_dim = 0;
    int degree = 0;
    long long eigenvalue = 0;
    std::vector<SpherePoly> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// Kernel of the Euclidean Laplacian on homogeneous degree-l polynomials,
/// computed by fraction-free elimination of the integer coefficient matrix.
/// Basis vectors are content-normalized integer polynomials.
HarmonicSpace harmonic_basis(int sphere_dim, int l);

/// Unique decomposition of a homogeneous p of degree l as
/// p = sum_k |x|^{l-k} H_k with H_k harmonic homogeneous of degree k
/// (k = l, l-2, ...). Returns the (k, H_k) pairs with nonzero H_k,
/// highest degree first. Throws on non-homogeneous input.
std::vector<std::pair<int, SpherePoly>> harmonic_decompose(const SpherePoly& p);

/// Spectrally defined sphere Laplacian: reduce f to sum_l H_l and return
/// sum_l lambda_l H_l.
SpherePoly sphere_laplacian(const SpherePoly& f);

/// Degree-l harmonic component of f's canonical expansion.
SpherePoly eigen_project(const SpherePoly& f, int l);

}  // namespace spherecert
