#include "spherecert/sampling.hpp"

#include <stdexcept>

namespace spherecert {

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
}

int Rng::nonzero_int(int bound) {
    int v;
    do {
        v = uniform_int(-bound, bound);
    } while (v == 0);
    return v;
}

Rational Rng::rational(int num_bound, int den_bound) {
    return Rational(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
}

MultiIndex random_multi_index(Rng& rng, int dim, int max_degree) {
    std::vector<int> e(dim, 0);
    int degree = rng.uniform_int(0, max_degree);
    for (int t = 0; t < degree; ++t) ++e[rng.uniform_int(0, dim - 1)];
    return MultiIndex(std::move(e));
}

SpherePoly random_poly(Rng& rng, int ambient_dim, int max_degree, int terms) {
    SpherePoly p(ambient_dim);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_multi_index(rng, ambient_dim, max_degree), rng.rational(9, 4));
    return p;
}

std::vector<Rational> random_direction(Rng& rng, int dim, int bound) {
    std::vector<Rational> v(dim);
    bool nonzero = false;
    for (auto& c : v) {
        c = Rational(rng.uniform_int(-bound, bound));
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) v[0] = 1;
    return v;
}

}  // namespace spherecert
