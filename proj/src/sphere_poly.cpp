#include "spherecert/sphere_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spherecert {

namespace {

void require_same_dim(const SpherePoly& a, const SpherePoly& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("SpherePoly: ambient dimension mismatch");
}

}  // namespace

SpherePoly::SpherePoly(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("SpherePoly: ambient_dim must be >= 1");
}

SpherePoly::SpherePoly(int ambient_dim, const Rational& constant) : SpherePoly(ambient_dim) {
    add_term(MultiIndex::zero(ambient_dim), constant);
}

SpherePoly SpherePoly::variable(int ambient_dim, int pos) {
    SpherePoly p(ambient_dim);
    p.add_term(MultiIndex::unit(ambient_dim, pos), 1);
    return p;
}

SpherePoly SpherePoly::monomial(MultiIndex a, Rational c) {
    SpherePoly p(a.dim());
    p.add_term(a, c);
    return p;
}

int SpherePoly::degree() const {
    int d = 0;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
}

bool SpherePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [a, c] : terms_)
        if (a.degree() != d) return false;
    return true;
}

Rational SpherePoly::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

SpherePoly& SpherePoly::add_term(const MultiIndex& a, const Rational& c) {
    if (a.dim() != ambient_dim_)
        throw std::invalid_argument("SpherePoly::add_term: ambient dimension mismatch");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

SpherePoly SpherePoly::operator-() const {
    SpherePoly r(ambient_dim_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
    require_same_dim(*this, o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

SpherePoly& SpherePoly::operator-=(const SpherePoly& o) {
    require_same_dim(*this, o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

SpherePoly operator*(const SpherePoly& a, const SpherePoly& b) {
    require_same_dim(a, b);
    SpherePoly r(a.ambient_dim());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.exponents());
            for (int i = 0; i < r.ambient_dim(); ++i) e[i] += eb[i];
            r.add_term(MultiIndex(std::move(e)), ca * cb);
        }
    }
    return r;
}

SpherePoly operator*(const Rational& c, const SpherePoly& p) {
    SpherePoly r(p.ambient_dim());
    if (c.is_zero()) return r;
    for (const auto& [a, pc] : p.terms_) r.terms_.emplace(a, c * pc);
    return r;
}

bool operator==(const SpherePoly& a, const SpherePoly& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.terms_ == b.terms_;
}

SpherePoly SpherePoly::derivative(int pos) const {
    SpherePoly r(ambient_dim_);
    for (const auto& [a, c] : terms_) {
        int e = a[pos];
        if (e == 0) continue;
        r.add_term(a.bump(pos, -1), Rational(e) * c);
    }
    return r;
}

std::map<int, SpherePoly> SpherePoly::homogeneous_components() const {
    std::map<int, SpherePoly> comps;
    for (const auto& [a, c] : terms_) {
        auto [it, inserted] = comps.emplace(a.degree(), SpherePoly(ambient_dim_));
        it->second.add_term(a, c);
    }
    return comps;
}

std::string SpherePoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [a, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (a.degree() == 0) {
            s += c.str();
        } else if (c == Rational(1)) {
            s += a.str();
        } else {
            s += c.str() + "*" + a.str();
        }
    }
    return s;
}

SpherePoly radius_squared(int ambient_dim) {
    SpherePoly r(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) r.add_term(MultiIndex::unit(ambient_dim, i, 2), 1);
    return r;
}

SpherePoly euclidean_laplacian(const SpherePoly& p) {
    SpherePoly r(p.ambient_dim());
    for (const auto& [a, c] : p.terms()) {
        for (int i = 0; i < p.ambient_dim(); ++i) {
            int e = a[i];
            if (e < 2) continue;
            r.add_term(a.bump(i, -2), Rational(static_cast<long>(e) * (e - 1)) * c);
        }
    }
    return r;
}

SpherePoly radial_derivative(const SpherePoly& p) {
    SpherePoly r(p.ambient_dim());
    // phi_i * d_i(phi^a) = a_i * phi^a, so the radial derivative is termwise.
    for (const auto& [a, c] : p.terms()) {
        int d = a.degree();
        if (d == 0) continue;
        r.add_term(a, Rational(d) * c);
    }
    return r;
}

std::vector<SpherePoly> tangential_gradient(const SpherePoly& f) {
    int dim = f.ambient_dim();
    SpherePoly radial = radial_derivative(f);
    std::vector<SpherePoly> g;
    g.reserve(dim);
    for (int i = 0; i < dim; ++i)
        g.push_back(f.derivative(i) - SpherePoly::variable(dim, i) * radial);
    return g;
}

SpherePoly grad_pairing(const SpherePoly& f, const SpherePoly& h) {
    require_same_dim(f, h);
    int dim = f.ambient_dim();
    SpherePoly r(dim);
    for (int i = 0; i < dim; ++i) r += f.derivative(i) * h.derivative(i);
    r -= radial_derivative(f) * radial_derivative(h);
    return r;
}

bool equal_on_sphere(const SpherePoly& p, const SpherePoly& q) {
    return reduce_on_sphere(p - q).is_zero();
}

}  // namespace spherecert
