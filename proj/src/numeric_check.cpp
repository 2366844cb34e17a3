#include "spherecert/numeric_check.hpp"

#include <stdexcept>

#include "spherecert/sampling.hpp"

namespace spherecert {

BigFloat make_big(long v) { return BigFloat(v, kNumericPrecisionBits); }

BigFloat make_big(const Rational& v) {
    BigFloat num(v.num(), kNumericPrecisionBits);
    BigFloat den(v.den(), kNumericPrecisionBits);
    return num / den;
}

std::vector<BigFloat> unit_point(const std::vector<Rational>& v) {
    BigFloat norm_sq = make_big(0L);
    std::vector<BigFloat> x;
    x.reserve(v.size());
    for (const auto& c : v) {
        x.push_back(make_big(c));
        norm_sq += x.back() * x.back();
    }
    if (sgn(norm_sq) == 0) throw std::invalid_argument("unit_point: zero direction");
    BigFloat norm = sqrt(norm_sq);
    for (auto& c : x) c /= norm;
    return x;
}

BigFloat eval_poly(const SpherePoly& p, const std::vector<BigFloat>& x) {
    if (static_cast<int>(x.size()) != p.ambient_dim())
        throw std::invalid_argument("eval_poly: point dimension mismatch");
    BigFloat sum = make_big(0L);
    for (const auto& [a, c] : p.terms()) {
        BigFloat t = make_big(c);
        for (int i = 0; i < a.dim(); ++i)
            for (int e = 0; e < a[i]; ++e) t *= x[i];
        sum += t;
    }
    return sum;
}

BigFloat max_eval_deviation(const SpherePoly& p, const SpherePoly& q,
                            const std::vector<std::vector<BigFloat>>& points) {
    BigFloat worst = make_big(0L);
    for (const auto& x : points) {
        BigFloat d = abs(eval_poly(p, x) - eval_poly(q, x));
        if (d > worst) worst = d;
    }
    return worst;
}

namespace {

// Gram-Schmidt; returns the orthonormalized independent vectors.
std::vector<std::vector<BigFloat>> orthonormalize(std::vector<std::vector<BigFloat>> vecs) {
    std::vector<std::vector<BigFloat>> frame;
    for (auto& v : vecs) {
        for (const auto& f : frame) {
            BigFloat dot = make_big(0L);
            for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * f[i];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * f[i];
        }
        BigFloat norm_sq = make_big(0L);
        for (const auto& c : v) norm_sq += c * c;
        // Rejects numerically dependent seeds; exact dependence gives ~1e-150.
        if (norm_sq < BigFloat(1e-60, kNumericPrecisionBits)) continue;
        BigFloat norm = sqrt(norm_sq);
        for (auto& c : v) c /= norm;
        frame.push_back(std::move(v));
    }
    return frame;
}

BigFloat determinant(std::vector<std::vector<BigFloat>> m) {
    std::size_t n = m.size();
    BigFloat det = make_big(1L);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (abs(m[r][k]) > abs(m[piv][k])) piv = r;
        if (sgn(m[piv][k]) == 0) return make_big(0L);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            BigFloat f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

// Constant form evaluated on rank-many vectors: sum over terms of
// coeff * det of the indexed component minor.
BigFloat eval_constant_form(const ConstantForm& form, const std::vector<std::vector<BigFloat>>& v) {
    BigFloat sum = make_big(0L);
    for (const auto& [idx, c] : form.terms) {
        std::vector<std::vector<BigFloat>> minor(v.size(),
                                                 std::vector<BigFloat>(idx.size(), make_big(0L)));
        for (std::size_t r = 0; r < v.size(); ++r)
            for (std::size_t k = 0; k < idx.size(); ++k) minor[r][k] = v[r][idx[k] - 1];
        sum += make_big(c) * determinant(minor);
    }
    return sum;
}

}  // namespace

BigFloat star_rule_deviation(const ConstantForm& xi_hat, int sphere_dim, const PolyOneForm& xi,
                             const std::vector<BigFloat>& x) {
    int m = sphere_dim;
    int dim = m + 1;
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument("star_rule_deviation: point must lie in R^{m+1}");

    // Oriented orthonormal tangent frame at x: Gram-Schmidt the projected
    // axes, then fix the orientation so (x, e_1, ..., e_m) is direct.
    std::vector<std::vector<BigFloat>> seeds;
    seeds.push_back(x);  // first slot: the normal itself, dropped below
    for (int i = 0; i < dim; ++i) {
        std::vector<BigFloat> e(dim, make_big(0L));
        e[i] = make_big(1L);
        seeds.push_back(std::move(e));
    }
    auto on = orthonormalize(std::move(seeds));
    std::vector<std::vector<BigFloat>> frame(on.begin() + 1, on.end());
    if (static_cast<int>(frame.size()) != m)
        throw std::logic_error("star_rule_deviation: degenerate tangent frame");
    std::vector<std::vector<BigFloat>> full;
    full.push_back(x);
    for (const auto& f : frame) full.push_back(f);
    if (sgn(determinant(full)) < 0) std::swap(frame[0], frame[1]);

    // Embed the frame into R^{m+n} (zero normal components) so the pullback
    // of hat{xi} is evaluation on the embedded frame.
    std::vector<std::vector<BigFloat>> embedded;
    for (const auto& f : frame) {
        std::vector<BigFloat> e(xi_hat.ambient_dim, make_big(0L));
        for (int i = 0; i < dim; ++i) e[i] = f[i];
        embedded.push_back(std::move(e));
    }

    BigFloat worst = make_big(0L);
    for (int i = 0; i < m; ++i) {
        // (*theta)(e_i) = (-1)^{i} theta(e_1, ..., without e_i, ..., e_m).
        std::vector<std::vector<BigFloat>> rest;
        for (int j = 0; j < m; ++j)
            if (j != i) rest.push_back(embedded[j]);
        BigFloat numeric = eval_constant_form(xi_hat, rest);
        if (i % 2 == 1) numeric = -numeric;

        BigFloat closed = make_big(0L);
        for (int c = 0; c < dim; ++c) closed += eval_poly(xi.components[c], x) * frame[i][c];

        BigFloat d = abs(numeric - closed);
        if (d > worst) worst = d;
    }
    return worst;
}

BigFloat max_comass_sample(const ConstantForm& omega_amb, Rng& rng, int samples) {
    BigFloat worst = make_big(0L);
    int need = omega_amb.rank;
    for (int s = 0; s < samples; ++s) {
        std::vector<std::vector<BigFloat>> seeds;
        while (static_cast<int>(seeds.size()) < need) {
            std::vector<BigFloat> v(omega_amb.ambient_dim, make_big(0L));
            for (auto& c : v) c = make_big(static_cast<long>(rng.uniform_int(-9, 9)));
            seeds.push_back(std::move(v));
            auto on = orthonormalize(seeds);
            if (static_cast<int>(on.size()) < static_cast<int>(seeds.size())) seeds.pop_back();
        }
        BigFloat val = abs(eval_constant_form(omega_amb, orthonormalize(std::move(seeds))));
        if (val > worst) worst = val;
    }
    return worst;
}

}  // namespace spherecert
