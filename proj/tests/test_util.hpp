#pragma once

// Shared helpers for the test suites. The checks here are deliberately
// independent of the library's canonicalization path so they can serve as
// oracles against it.

#include <vector>

#include "spherecert/rational.hpp"
#include "spherecert/sphere_poly.hpp"

namespace spherecert::testutil {

// Euclidean division remainder of p along phi_1 by the sphere relation
// g = sum phi_i^2 - 1. Since g is monic of degree 2 in phi_1, p lies in the
// ideal (g) iff the remainder is zero. This walks the division manually and
// never calls reduce_on_sphere.
inline SpherePoly sphere_relation_remainder(const SpherePoly& p) {
    int dim = p.ambient_dim();
    SpherePoly g = radius_squared(dim) - SpherePoly(dim, 1);
    SpherePoly r = p;
    for (;;) {
        const MultiIndex* pick = nullptr;
        const Rational* coeff = nullptr;
        for (const auto& [a, c] : r.terms()) {
            if (a[0] >= 2) {
                pick = &a;
                coeff = &c;
                break;
            }
        }
        if (!pick) return r;
        // Subtract c * phi^{a - 2 e_1} * g, cancelling the picked term.
        SpherePoly q = SpherePoly::monomial(pick->bump(0, -2), *coeff);
        r -= q * g;
    }
}

inline bool in_sphere_ideal(const SpherePoly& p) {
    return sphere_relation_remainder(p).is_zero();
}

// phi^a as a polynomial.
inline SpherePoly mono(std::vector<int> exp, Rational c = 1) {
    return SpherePoly::monomial(MultiIndex(std::move(exp)), std::move(c));
}

}  // namespace spherecert::testutil
