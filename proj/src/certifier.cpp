#include "spherecert/certifier.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace spherecert {

std::string to_string(PsdStatus s) {
    switch (s) {
        case PsdStatus::positive_definite: return "positive_definite";
        case PsdStatus::psd_with_kernel: return "PSD_with_kernel";
        case PsdStatus::tail_bounded: return "tail_bounded";
        case PsdStatus::not_psd: return "NOT_PSD";
    }
    return "unknown";
}

Rational PsdResult::min_pivot() const {
    Rational m = 0;
    bool first = true;
    for (const auto& p : pivots) {
        if (first || p < m) m = p;
        first = false;
    }
    return m;
}

namespace {

void require_square(const RationalMatrix& M, const char* what) {
    for (const auto& row : M)
        if (row.size() != M.size()) throw std::invalid_argument(std::string(what) + ": not square");
}

// Normalizes a rational vector to integer coordinates with unit content and
// positive leading entry.
RationalVector normalize_integral(const RationalVector& x) {
    mpz_class lcm_den = 1;
    for (const auto& v : x)
        if (!v.is_zero()) lcm_den = lcm(lcm_den, v.den());
    mpz_class content = 0;
    std::vector<mpz_class> xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xi[i] = x[i].num() * (lcm_den / x[i].den());
        content = gcd(content, xi[i]);
    }
    if (content == 0) return RationalVector(x.size(), 0);
    int lead_sign = 0;
    for (const auto& v : xi) {
        if (v != 0) {
            lead_sign = sgn(v);
            break;
        }
    }
    RationalVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = Rational(mpz_class(xi[i] * lead_sign / content));
    return out;
}

Rational quadratic_form_value(const RationalMatrix& B, const RationalVector& x) {
    Rational v = 0;
    std::size_t n = B.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j].is_zero()) continue;
            v += x[i] * B[i][j] * x[j];
        }
    }
    return v;
}

}  // namespace

PsdResult psd_certificate(const RationalMatrix& G, const RationalMatrix& K) {
    require_square(G, "psd_certificate: G");
    require_square(K, "psd_certificate: K");
    std::size_t n = G.size();
    if (K.size() != n) throw std::invalid_argument("psd_certificate: size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (G[i][j] != G[j][i]) throw std::invalid_argument("psd_certificate: G not symmetric");
            if (K[i][j] != -K[j][i])
                throw std::invalid_argument("psd_certificate: K not antisymmetric");
        }

    // Stability block matrix of the quadratic form
    // mu^T G mu + sigma^T G sigma - 2 mu^T K sigma.
    std::size_t N = 2 * n;
    RationalMatrix B(N, RationalVector(N, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            B[i][j] = G[i][j];
            B[n + i][n + j] = G[i][j];
            B[i][n + j] = -K[i][j];
            B[n + i][j] = K[i][j];
        }

    // Scale to an integer matrix; a positive scale changes neither PSD
    // status nor kernel.
    mpz_class scale = 1;
    for (const auto& row : B)
        for (const auto& v : row)
            if (!v.is_zero()) scale = lcm(scale, v.den());
    std::vector<std::vector<mpz_class>> W(N, std::vector<mpz_class>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            W[i][j] = B[i][j].num() * (scale / B[i][j].den());

    PsdResult res;
    std::vector<std::size_t> perm(N);
    for (std::size_t i = 0; i < N; ++i) perm[i] = i;

    // unpermute: maps a vector in current coordinates back to the original.
    auto unpermute = [&](const RationalVector& x) {
        RationalVector out(N, 0);
        for (std::size_t i = 0; i < N; ++i) out[perm[i]] = x[i];
        return out;
    };
    // Solves the eliminated upper-triangular rows U_0..U_{rank-1} against a
    // vector fixed on the active coordinates (exact back-substitution).
    auto back_substitute = [&](std::size_t rank, RationalVector x) {
        for (std::size_t r = rank; r-- > 0;) {
            Rational s = 0;
            for (std::size_t t = r + 1; t < N; ++t) {
                if (x[t].is_zero()) continue;
                s += Rational(W[r][t]) * x[t];
            }
            x[r] = -s / Rational(W[r][r]);
        }
        return x;
    };
    auto finish_not_psd = [&](std::size_t rank, RationalVector reduced_direction) {
        RationalVector x = normalize_integral(unpermute(back_substitute(rank, reduced_direction)));
        res.status = PsdStatus::not_psd;
        res.witness_value = quadratic_form_value(B, x);
        if (res.witness_value.sign() >= 0)
            throw std::logic_error("psd_certificate: witness reconstruction failed");
        res.witness = std::move(x);
    };

    mpz_class prev = 1;  // D_{k-1}, the previous leading principal minor
    for (std::size_t k = 0; k < N; ++k) {
        // Fraction-free symmetric elimination: pivot only on a positive
        // diagonal entry of the (positively scaled) Schur block.
        std::size_t sel = N;
        for (std::size_t j = k; j < N; ++j) {
            if (sgn(W[j][j]) > 0) {
                sel = j;
                break;
            }
        }
        if (sel == N) {
            for (std::size_t j = k; j < N; ++j) {
                if (sgn(W[j][j]) < 0) {
                    // Negative diagonal in the Schur complement: indefinite.
                    RationalVector y(N, 0);
                    y[j] = 1;
                    finish_not_psd(k, std::move(y));
                    return res;
                }
            }
            for (std::size_t i = k; i < N; ++i) {
                for (std::size_t j = i + 1; j < N; ++j) {
                    if (W[i][j] != 0) {
                        // Zero diagonal with a nonzero off-diagonal entry:
                        // the 2x2 principal block [[0,a],[a,0]] is indefinite.
                        RationalVector y(N, 0);
                        y[i] = 1;
                        y[j] = Rational(-sgn(W[i][j]));
                        finish_not_psd(k, std::move(y));
                        return res;
                    }
                }
            }
            // Entire Schur block vanishes: PSD with kernel of dim N - k.
            res.kernel_dim = static_cast<int>(N - k);
            for (std::size_t f = k; f < N; ++f) {
                RationalVector y(N, 0);
                y[f] = 1;
                res.kernel.push_back(normalize_integral(unpermute(back_substitute(k, y))));
            }
            res.status = PsdStatus::psd_with_kernel;
            return res;
        }
        if (sel != k) {
            std::swap(W[k], W[sel]);
            for (std::size_t r = 0; r < N; ++r) std::swap(W[r][k], W[r][sel]);
            std::swap(perm[k], perm[sel]);
        }
        // Pivot d_k = D_k / D_{k-1} of the unscaled matrix.
        res.pivots.push_back(Rational(W[k][k]) / Rational(prev) / Rational(scale));
        for (std::size_t r = k + 1; r < N; ++r) {
            for (std::size_t c = k + 1; c < N; ++c) {
                mpz_class t = W[k][k] * W[r][c] - W[r][k] * W[k][c];
                mpz_divexact(W[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            W[r][k] = 0;
        }
        prev = W[k][k];
    }
    res.status = PsdStatus::positive_definite;
    res.kernel_dim = 0;
    return res;
}

StabilityProblem StabilityProblem::kahler3(const Rational& omega_scale) {
    return from_calibration(kahler3_calibration(), 3, 3, omega_scale);
}

StabilityProblem StabilityProblem::from_calibration(const ConstantForm& omega_amb, int m, int n,
                                                    const Rational& omega_scale) {
    if (m != 3 || n != 3)
        throw std::invalid_argument(
            "StabilityProblem: exact certification is wired for m = n = 3 (one normal pair)");
    if (omega_amb.ambient_dim != m + n || omega_amb.rank != m + 1)
        throw std::invalid_argument("StabilityProblem: calibration must be a rank m+1 form on R^{m+n}");
    StabilityProblem prob{
        .m = m,
        .n = n,
        .omega_ambient = omega_amb,
        .xi_hat = interior_product(omega_amb, m, m + 2, m + 3),
        .xi = PolyOneForm(m + 1),
        .omega = PolyTwoForm(m + 1),
        .omega_scale = omega_scale,
        .moments = std::make_shared<MomentTable>(m),
    };
    prob.xi = star_pullback(prob.xi_hat, m);
    if (omega_scale != Rational(1))
        for (auto& c : prob.xi.components) c = omega_scale * c;
    prob.omega = scale(omega_from_xi(prob.xi_hat, m), omega_scale);
    return prob;
}

namespace {

// Unreduced omega(grad f, grad h) from precomputed tangential gradients;
// integration does not need the canonical representative.
SpherePoly omega_pair_raw(const PolyTwoForm& w, const std::vector<SpherePoly>& gf,
                          const std::vector<SpherePoly>& gh) {
    SpherePoly r(w.ambient_dim);
    for (const auto& [ij, c] : w.components) {
        int i = ij.first - 1, j = ij.second - 1;
        r += c * (gf[i] * gh[j] - gf[j] * gh[i]);
    }
    return r;
}

}  // namespace

DegreeReport assemble_matrices(const StabilityProblem& prob, int l) {
    if (l < 1) throw std::invalid_argument("assemble_matrices: l >= 1");
    DegreeReport rep;
    rep.l = l;
    rep.lambda = sphere_eigenvalue(prob.m, l);
    HarmonicSpace space = harmonic_basis(prob.m, l);
    rep.dim = space.dim();
    rep.basis = space.basis;

    int d = space.dim();
    std::vector<std::vector<SpherePoly>> grads;
    grads.reserve(d);
    for (const auto& b : space.basis) grads.push_back(tangential_gradient(b));

    rep.G.assign(d, RationalVector(d, 0));
    rep.K.assign(d, RationalVector(d, 0));
    const MomentTable& mt = *prob.moments;
    for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            Rational g = mt.dirichlet_inner(space.basis[a], space.basis[b]);
            rep.G[a][b] = g;
            rep.G[b][a] = g;
            if (b > a) {
                Rational k = Rational(-3) * mt.integral(omega_pair_raw(prob.omega, grads[a], grads[b]));
                rep.K[a][b] = k;
                rep.K[b][a] = -k;
            }
        }
    }
    return rep;
}

TailBound rayleigh_tail_bound(int l, int sphere_dim) {
    if (l < 1) throw std::invalid_argument("rayleigh_tail_bound: l >= 1");
    TailBound t;
    t.l = l;
    t.threshold = static_cast<long long>(sphere_dim) * sphere_dim;
    t.lambda = sphere_eigenvalue(sphere_dim, l);
    t.strict = t.threshold < t.lambda;
    return t;
}

bool cross_degree_check(const StabilityProblem& prob, int l, int s) {
    if (l == s) throw std::invalid_argument("cross_degree_check: degrees must differ");
    HarmonicSpace El = harmonic_basis(prob.m, l);
    HarmonicSpace Es = harmonic_basis(prob.m, s);
    const MomentTable& mt = *prob.moments;
    for (const auto& f : El.basis) {
        auto gf = tangential_gradient(f);
        for (const auto& h : Es.basis) {
            auto gh = tangential_gradient(h);
            if (!mt.integral(omega_pair_raw(prob.omega, gf, gh)).is_zero()) return false;
        }
    }
    return true;
}

Theorem11Report theorem11_check(const StabilityProblem& prob, int l) {
    Theorem11Report rep;
    rep.l = l;
    HarmonicSpace space = harmonic_basis(prob.m, l);
    Rational lambda(static_cast<long>(space.eigenvalue));
    const MomentTable& mt = *prob.moments;
    for (int i = 0; i < space.dim(); ++i) {
        const SpherePoly& f = space.basis[i];
        SpherePoly h = xi_apply(prob.xi, f);
        Theorem11Entry e;
        e.basis_index = i;
        e.in_eigenspace = sphere_laplacian(h) == lambda * h;
        e.l2_orthogonal = mt.l2_inner(f, h).is_zero();
        ++rep.checked;
        if (!e.in_eigenspace || !e.l2_orthogonal) rep.failures.push_back(e);
    }
    rep.ok = rep.failures.empty();
    return rep;
}

ConstantBookkeeping stability_constants(int sphere_dim) {
    ConstantBookkeeping c;
    c.short_coefficient = Rational(sphere_dim);
    c.omega_varpi_factor = Rational(1, 2);
    // -int varpi = -2 int omega = (2/m) * (-m int omega), so the short
    // inequality with coefficient m becomes constant 2/m against varpi.
    c.corollary_constant = Rational(2) / Rational(sphere_dim);
    return c;
}

namespace {

// Reference equality family on S^3: sigma = J mu with
// J(mu1,mu2,mu3,mu4) = (mu2, -mu1, mu4, -mu3).
bool matches_kahler_equality_family(const RationalVector& v) {
    if (v.size() != 8) return false;
    return v[4] == v[1] && v[5] == -v[0] && v[6] == v[3] && v[7] == -v[2];
}

}  // namespace

CertificateBundle certify_stability(const StabilityProblem& prob, const CertifyOptions& opt) {
    if (opt.L_exact < 2) throw std::invalid_argument("certify_stability: L_exact >= 2");
    CertificateBundle bundle;
    bundle.L_exact = opt.L_exact;
    bundle.omega_scale = prob.omega_scale;
    bundle.constants = stability_constants(prob.m);

    auto run_degree = [&prob](int l) {
        DegreeReport rep = assemble_matrices(prob, l);
        rep.psd = psd_certificate(rep.G, rep.K);
        return rep;
    };

    std::vector<int> degrees;
    for (int l = 1; l <= opt.L_exact; ++l) degrees.push_back(l);
    int redundant_from = std::max(opt.L_exact + 1, 3);
    for (int l = redundant_from; l <= opt.redundant_exact_max; ++l) degrees.push_back(l);

    std::vector<DegreeReport> reports(degrees.size());
    if (opt.jobs > 1) {
        std::vector<std::future<DegreeReport>> futures;
        futures.reserve(degrees.size());
        for (int l : degrees)
            futures.push_back(std::async(std::launch::async, run_degree, l));
        for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < degrees.size(); ++i) reports[i] = run_degree(degrees[i]);
    }
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] <= opt.L_exact)
            bundle.degrees.push_back(std::move(reports[i]));
        else
            bundle.redundant.push_back(std::move(reports[i]));
    }

    bundle.tail = rayleigh_tail_bound(3, prob.m);

    bundle.cross_degree_zero = true;
    for (int l = 1; l <= opt.L_exact; ++l) {
        for (int s = l + 1; s <= opt.L_exact; ++s) {
            if (!cross_degree_check(prob, l, s)) {
                bundle.cross_degree_zero = false;
                bundle.cross_degree_failures.emplace_back(l, s);
            }
        }
    }

    bool theorem11_ok = true;
    for (int l = 1; l <= opt.L_exact; ++l) {
        bundle.theorem11.push_back(theorem11_check(prob, l));
        theorem11_ok = theorem11_ok && bundle.theorem11.back().ok;
    }

    bool degrees_ok = true;
    for (const auto& rep : bundle.degrees)
        degrees_ok = degrees_ok && rep.psd.status != PsdStatus::not_psd;
    for (const auto& rep : bundle.redundant)
        degrees_ok = degrees_ok && rep.psd.status == PsdStatus::positive_definite;

    if (!bundle.degrees.empty() && bundle.degrees.front().psd.status == PsdStatus::psd_with_kernel) {
        const auto& k1 = bundle.degrees.front().psd;
        EqualityFamily fam;
        fam.l = 1;
        fam.kernel = k1.kernel;
        bool reference = k1.kernel_dim == 4;
        for (const auto& v : k1.kernel) reference = reference && matches_kahler_equality_family(v);
        if (reference)
            fam.relation = "sigma1 = mu2, sigma2 = -mu1, sigma3 = mu4, sigma4 = -mu3";
        bundle.equality_family = std::move(fam);
    }

    bundle.certified = degrees_ok && bundle.tail.strict && bundle.cross_degree_zero && theorem11_ok;
    return bundle;
}

}  // namespace spherecert
