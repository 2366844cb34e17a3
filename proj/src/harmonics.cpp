#include "spherecert/harmonics.hpp"

#include <map>
#include <stdexcept>

namespace spherecert {

long long sphere_eigenvalue(int sphere_dim, int l) {
    return static_cast<long long>(l) * (l + sphere_dim - 1);
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void enumerate(std::vector<int>& e, int pos, int remaining, std::vector<MultiIndex>& out) {
    if (pos == static_cast<int>(e.size()) - 1) {
        e[pos] = remaining;
        out.emplace_back(e);
        e[pos] = 0;
        return;
    }
    for (int a = remaining; a >= 0; --a) {
        e[pos] = a;
        enumerate(e, pos + 1, remaining - a, out);
    }
    e[pos] = 0;
}

}  // namespace

long long harmonic_space_dim(int sphere_dim, int l) {
    return binomial(sphere_dim + l, sphere_dim) - binomial(sphere_dim + l - 2, sphere_dim);
}

std::vector<MultiIndex> monomials_of_degree(int dim, int degree) {
    std::vector<MultiIndex> out;
    std::vector<int> e(dim, 0);
    enumerate(e, 0, degree, out);
    return out;
}

HarmonicSpace harmonic_basis(int sphere_dim, int l) {
    if (sphere_dim < 1 || l < 0)
        throw std::invalid_argument("harmonic_basis: need sphere_dim >= 1, l >= 0");
    int dim = sphere_dim + 1;
    HarmonicSpace space;
    space.sphere_dim = sphere_dim;
    space.degree = l;
    space.eigenvalue = sphere_eigenvalue(sphere_dim, l);

    std::vector<MultiIndex> cols = monomials_of_degree(dim, l);
    if (l < 2) {
        // The Laplacian is identically zero below degree 2.
        for (const auto& a : cols) space.basis.push_back(SpherePoly::monomial(a, 1));
        return space;
    }
    std::vector<MultiIndex> rows = monomials_of_degree(dim, l - 2);
    std::map<MultiIndex, int> row_of;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) row_of.emplace(rows[r], r);

    // Integer matrix of Delta^0 on degree-l monomials: column a contributes
    // a_i(a_i-1) to row a - 2e_i.
    int nrows = static_cast<int>(rows.size());
    int ncols = static_cast<int>(cols.size());
    std::vector<std::vector<mpz_class>> mat(nrows, std::vector<mpz_class>(ncols, 0));
    for (int c = 0; c < ncols; ++c) {
        const MultiIndex& a = cols[c];
        for (int i = 0; i < dim; ++i) {
            int ai = a[i];
            if (ai < 2) continue;
            mat[row_of.at(a.bump(i, -2))][c] = static_cast<long>(ai) * (ai - 1);
        }
    }

    // Fraction-free row echelon form (two-row cross-multiplication keeps all
    // entries integral), then rational back-substitution for the kernel.
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int sel = -1;
        for (int r = rank; r < nrows; ++r) {
            if (mat[r][c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(mat[rank], mat[sel]);
        for (int r = rank + 1; r < nrows; ++r) {
            if (mat[r][c] == 0) continue;
            mpz_class f_r = mat[r][c], f_p = mat[rank][c];
            mpz_class g = gcd(f_r, f_p);
            f_r /= g;
            f_p /= g;
            for (int cc = c; cc < ncols; ++cc) mat[r][cc] = f_p * mat[r][cc] - f_r * mat[rank][cc];
        }
        pivot_col_of_row.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;

    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        // Solve for the pivot coordinates with x_f = 1, other free coords 0.
        std::vector<Rational> x(ncols, 0);
        x[f] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            int pc = pivot_col_of_row[r];
            Rational s = 0;
            for (int c = pc + 1; c < ncols; ++c) {
                if (x[c].is_zero()) continue;
                s += Rational(mat[r][c]) * x[c];
            }
            x[pc] = -s / Rational(mat[r][pc]);
        }
        // Clear denominators and divide out content so the basis is integral.
        mpz_class lcm_den = 1;
        for (const auto& v : x)
            if (!v.is_zero()) lcm_den = lcm(lcm_den, v.den());
        mpz_class content = 0;
        std::vector<mpz_class> xi(ncols);
        for (int c = 0; c < ncols; ++c) {
            mpz_class n = x[c].num() * (lcm_den / x[c].den());
            xi[c] = n;
            content = gcd(content, n);
        }
        SpherePoly b(dim);
        for (int c = 0; c < ncols; ++c)
            if (xi[c] != 0) b.add_term(cols[c], Rational(mpz_class(xi[c] / content)));
        space.basis.push_back(std::move(b));
    }

    if (static_cast<long long>(space.basis.size()) != harmonic_space_dim(sphere_dim, l))
        throw std::logic_error("harmonic_basis: kernel dimension disagrees with m_l");
    return space;
}

namespace {

std::vector<std::pair<int, SpherePoly>> decompose_homogeneous(const SpherePoly& p, int l) {
    std::vector<std::pair<int, SpherePoly>> out;
    if (p.is_zero()) return out;
    SpherePoly lap = euclidean_laplacian(p);
    if (l <= 1 || lap.is_zero()) {
        out.emplace_back(l, p);
        return out;
    }
    int d = p.ambient_dim();
    // If p = sum_j |x|^{2j} H_{l-2j}, then
    // Delta p = sum_{j>=1} 2j(2(l-2j) + d + 2j - 2) |x|^{2j-2} H_{l-2j},
    // so the sub-decomposition of Delta p yields every H below the top.
    auto sub = decompose_homogeneous(lap, l - 2);
    SpherePoly top = p;
    SpherePoly r2 = radius_squared(d);
    std::vector<std::pair<int, SpherePoly>> lower;
    for (const auto& [k, g] : sub) {
        int j = (l - k) / 2;
        Rational c(2L * j * (2L * k + d + 2L * j - 2));
        SpherePoly h = (Rational(1) / c) * g;
        SpherePoly pow = h;
        for (int t = 0; t < j; ++t) pow = pow * r2;
        top -= pow;
        lower.emplace_back(k, std::move(h));
    }
    if (!top.is_zero()) out.emplace_back(l, std::move(top));
    for (auto& kh : lower) out.push_back(std::move(kh));
    return out;
}

}  // namespace

std::vector<std::pair<int, SpherePoly>> harmonic_decompose(const SpherePoly& p) {
    if (!p.is_homogeneous())
        throw std::invalid_argument("harmonic_decompose: input must be homogeneous");
    return decompose_homogeneous(p, p.degree());
}

SpherePoly reduce_on_sphere(const SpherePoly& p) {
    SpherePoly out(p.ambient_dim());
    // Harmonic components of distinct degrees live in distinct eigenspaces,
    // so collecting them by degree yields the canonical representative.
    std::map<int, SpherePoly> by_degree;
    for (const auto& [deg, comp] : p.homogeneous_components()) {
        for (auto& [k, h] : harmonic_decompose(comp)) {
            auto [it, inserted] = by_degree.emplace(k, SpherePoly(p.ambient_dim()));
            it->second += h;
        }
    }
    for (const auto& [k, h] : by_degree) out += h;
    return out;
}

SpherePoly sphere_laplacian(const SpherePoly& f) {
    int m = f.ambient_dim() - 1;
    SpherePoly out(f.ambient_dim());
    for (const auto& [k, h] : reduce_on_sphere(f).homogeneous_components())
        out += Rational(static_cast<long>(sphere_eigenvalue(m, k))) * h;
    return out;
}

SpherePoly eigen_project(const SpherePoly& f, int l) {
    auto comps = reduce_on_sphere(f).homogeneous_components();
    auto it = comps.find(l);
    return it == comps.end() ? SpherePoly(f.ambient_dim()) : it->second;
}

}  // namespace spherecert
