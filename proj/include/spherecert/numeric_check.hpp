#pragma once

#include <gmpxx.h>

#include <vector>

#include "spherecert/forms.hpp"
#include "spherecert/sphere_poly.hpp"

namespace spherecert {

/// High-precision floating point used only by the numeric validation hooks;
/// the core never touches it. 512 bits is ~154 decimal digits.
using BigFloat = mpf_class;

inline constexpr int kNumericPrecisionBits = 512;

BigFloat make_big(long v);
BigFloat make_big(const Rational& v);

/// v / |v| evaluated in high precision; v must be nonzero.
std::vector<BigFloat> unit_point(const std::vector<Rational>& v);

BigFloat eval_poly(const SpherePoly& p, const std::vector<BigFloat>& x);

/// Max |p(x) - q(x)| over the given unit points.
BigFloat max_eval_deviation(const SpherePoly& p, const SpherePoly& q,
                            const std::vector<std::vector<BigFloat>>& points);

/// Pointwise Hodge-star oracle. Builds an explicit oriented orthonormal
/// tangent frame at x (orientation: outward normal first), evaluates the
/// pullback of hat{xi} on the frame and applies the star operator
/// numerically, and compares against the closed-form xi. Returns the max
/// absolute deviation over the frame covectors.
BigFloat star_rule_deviation(const ConstantForm& xi_hat, int sphere_dim, const PolyOneForm& xi,
                             const std::vector<BigFloat>& x);

/// Samples random orthonormal (rank)-frames of R^{ambient_dim} and returns
/// max |Omega(frame)|; a semi-calibration stays <= 1 up to rounding.
class Rng;
BigFloat max_comass_sample(const ConstantForm& omega_amb, Rng& rng, int samples);

}  // namespace spherecert
