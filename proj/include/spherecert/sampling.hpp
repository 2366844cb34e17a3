#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spherecert/multi_index.hpp"
#include "spherecert/rational.hpp"
#include "spherecert/sphere_poly.hpp"

namespace spherecert {

/// Seeded generator for the randomized identity checks. Draws are made
/// through our own helpers (not std distributions) so the stream is
/// identical across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [lo, hi], inclusive, by rejection.
    int uniform_int(int lo, int hi);

    /// Nonzero integer in [-bound, bound].
    int nonzero_int(int bound);

    /// Random rational with numerator in [-num_bound, num_bound] and
    /// denominator in [1, den_bound].
    Rational rational(int num_bound, int den_bound);

private:
    std::mt19937_64 gen_;
};

/// Random exponent vector with total degree <= max_degree.
MultiIndex random_multi_index(Rng& rng, int dim, int max_degree);

/// Random sparse polynomial: `terms` draws of coeff * phi^a with
/// |a| <= max_degree (possibly fewer stored terms after cancellation).
SpherePoly random_poly(Rng& rng, int ambient_dim, int max_degree, int terms);

/// Random nonzero integer direction vector, used to place points on the
/// sphere for the numeric checks.
std::vector<Rational> random_direction(Rng& rng, int dim, int bound = 9);

}  // namespace spherecert
