#include "spherecert/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "spherecert/moments.hpp"

namespace spherecert {

ConstantForm::ConstantForm(int ambient_dim, int rank) : ambient_dim(ambient_dim), rank(rank) {
    if (ambient_dim < 1 || rank < 0 || rank > ambient_dim)
        throw std::invalid_argument("ConstantForm: bad ambient_dim/rank");
}

ConstantForm& ConstantForm::add_term(std::vector<int> idx, const Rational& c) {
    if (static_cast<int>(idx.size()) != rank)
        throw std::invalid_argument("ConstantForm::add_term: tuple size != rank");
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 1 || idx[k] > ambient_dim)
            throw std::invalid_argument("ConstantForm::add_term: index out of range");
        if (k > 0 && idx[k] <= idx[k - 1])
            throw std::invalid_argument("ConstantForm::add_term: indices must strictly increase");
    }
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms.emplace(std::move(idx), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
    return *this;
}

ConstantForm kahler3_calibration() {
    ConstantForm w(6, 4);
    w.add_term({1, 2, 3, 4}, 1);
    w.add_term({1, 2, 5, 6}, 1);
    w.add_term({3, 4, 5, 6}, 1);
    return w;
}

namespace {

// i_{e_axis} dx^idx: removes `axis` from the tuple with the alternating sign
// (-1)^{position-1}; zero if absent.
ConstantForm contract_axis(const ConstantForm& form, int axis) {
    ConstantForm out(form.ambient_dim, form.rank - 1);
    for (const auto& [idx, c] : form.terms) {
        auto it = std::find(idx.begin(), idx.end(), axis);
        if (it == idx.end()) continue;
        int pos = static_cast<int>(it - idx.begin());
        std::vector<int> rest;
        rest.reserve(idx.size() - 1);
        for (int v : idx)
            if (v != axis) rest.push_back(v);
        out.add_term(std::move(rest), (pos % 2 == 0) ? c : -c);
    }
    return out;
}

// Sign of the permutation (J_1..J_k, i, j) of (1..m+1), where J is strictly
// increasing and {i, j} is its complement. Counting inversions suffices.
int complement_sign(const std::vector<int>& J, int i, int j) {
    std::vector<int> perm(J);
    perm.push_back(i);
    perm.push_back(j);
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

ConstantForm interior_product(const ConstantForm& omega_amb, int sphere_dim, int axis_alpha,
                              int axis_beta) {
    int m = sphere_dim;
    if (axis_alpha == axis_beta)
        throw std::invalid_argument("interior_product: axes must be distinct");
    for (int axis : {axis_alpha, axis_beta})
        if (axis < m + 2 || axis > omega_amb.ambient_dim)
            throw std::invalid_argument("interior_product: axis is not a normal direction");
    return contract_axis(contract_axis(omega_amb, axis_alpha), axis_beta);
}

PolyOneForm::PolyOneForm(int ambient_dim)
    : components(ambient_dim, SpherePoly(ambient_dim)) {}

bool PolyOneForm::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

SpherePoly PolyOneForm::tangential_norm_sq() const {
    int dim = ambient_dim();
    SpherePoly sum_sq(dim);
    SpherePoly radial(dim);
    for (int i = 0; i < dim; ++i) {
        sum_sq += components[i] * components[i];
        radial += SpherePoly::variable(dim, i) * components[i];
    }
    return sum_sq - radial * radial;
}

PolyTwoForm::PolyTwoForm(int ambient_dim) : ambient_dim(ambient_dim) {}

PolyTwoForm& PolyTwoForm::add_component(int i, int j, const SpherePoly& c) {
    if (i < 1 || j < 1 || i >= j || j > ambient_dim)
        throw std::invalid_argument("PolyTwoForm::add_component: need 1 <= i < j <= dim");
    auto [it, inserted] = components.emplace(std::make_pair(i, j), c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) components.erase(it);
    return *this;
}

PolyTwoForm scale(const PolyTwoForm& w, const Rational& c) {
    PolyTwoForm out(w.ambient_dim);
    if (c.is_zero()) return out;
    for (const auto& [ij, p] : w.components) out.components.emplace(ij, c * p);
    return out;
}

PolyOneForm star_pullback(const ConstantForm& xi_hat, int sphere_dim) {
    int m = sphere_dim;
    int dim = m + 1;
    if (xi_hat.rank != m - 1)
        throw std::invalid_argument("star_pullback: form rank must be sphere_dim - 1");
    PolyOneForm xi(dim);
    for (const auto& [J, c] : xi_hat.terms) {
        if (std::any_of(J.begin(), J.end(), [dim](int v) { return v > dim; }))
            continue;  // normal index: pullback vanishes
        std::vector<bool> used(dim + 1, false);
        for (int v : J) used[v] = true;
        int i = 0, j = 0;
        for (int v = 1; v <= dim; ++v) {
            if (used[v]) continue;
            if (i == 0)
                i = v;
            else
                j = v;
        }
        Rational s = Rational(complement_sign(J, i, j)) * c;
        // *(dphi^J) = sgn * (phi_i dphi^j - phi_j dphi^i)
        xi.components[j - 1] += s * SpherePoly::variable(dim, i - 1);
        xi.components[i - 1] -= s * SpherePoly::variable(dim, j - 1);
    }
    return xi;
}

PolyTwoForm omega_from_xi(const ConstantForm& xi_hat, int sphere_dim) {
    int dim = sphere_dim + 1;
    if (xi_hat.rank != 2)
        throw std::invalid_argument("omega_from_xi: unsupported rank (need rank-2 hat{xi})");
    PolyTwoForm w(dim);
    Rational half(1, 2);
    for (const auto& [idx, c] : xi_hat.terms) {
        if (idx[0] > dim || idx[1] > dim) continue;
        w.add_component(idx[0], idx[1], SpherePoly(dim, half * c));
    }
    return w;
}

SpherePoly xi_apply(const PolyOneForm& xi, const SpherePoly& f) {
    if (xi.ambient_dim() != f.ambient_dim())
        throw std::invalid_argument("xi_apply: ambient dimension mismatch");
    auto grad = tangential_gradient(f);
    SpherePoly r(f.ambient_dim());
    for (int i = 0; i < f.ambient_dim(); ++i) r += xi.components[i] * grad[i];
    return reduce_on_sphere(r);
}

SpherePoly omega_pair(const PolyTwoForm& w, const SpherePoly& f, const SpherePoly& h) {
    if (w.ambient_dim != f.ambient_dim() || f.ambient_dim() != h.ambient_dim())
        throw std::invalid_argument("omega_pair: ambient dimension mismatch");
    auto gf = tangential_gradient(f);
    auto gh = tangential_gradient(h);
    SpherePoly r(f.ambient_dim());
    for (const auto& [ij, c] : w.components) {
        int i = ij.first - 1, j = ij.second - 1;
        r += c * (gf[i] * gh[j] - gf[j] * gh[i]);
    }
    return reduce_on_sphere(r);
}

ConstantForm kahler3_xi_hat() { return interior_product(kahler3_calibration(), 3, 5, 6); }

PolyOneForm kahler3_xi() { return star_pullback(kahler3_xi_hat(), 3); }

PolyTwoForm kahler3_omega() { return omega_from_xi(kahler3_xi_hat(), 3); }

std::vector<PairingTableRow> s3_pairing_integral_table(const MomentTable& table) {
    if (table.sphere_dim() != 3)
        throw std::invalid_argument("s3_pairing_integral_table: needs an S^3 moment table");
    PolyTwoForm omega = kahler3_omega();
    Rational phi2(1, 4);  // int phi_i^2 on S^3

    // Known values of -3 int w * omega(grad phi_i, grad phi_j) as multiples
    // of int phi^2; every combination not listed vanishes.
    std::map<std::string, Rational> known;
    auto key = [](const std::string& w, int i, int j) {
        return w + "|" + std::to_string(i) + std::to_string(j);
    };
    known[key("1", 1, 2)] = -3;
    known[key("1", 3, 4)] = -3;
    for (int t : {1, 2}) {
        known[key("phi" + std::to_string(t) + "^2", 1, 2)] = Rational(-1, 2);
        known[key("phi" + std::to_string(t) + "^2", 3, 4)] = -1;
    }
    for (int t : {3, 4}) {
        known[key("phi" + std::to_string(t) + "^2", 1, 2)] = -1;
        known[key("phi" + std::to_string(t) + "^2", 3, 4)] = Rational(-1, 2);
    }
    known[key("phi1*phi4", 1, 3)] = Rational(-1, 4);
    known[key("phi1*phi3", 2, 3)] = Rational(-1, 4);
    known[key("phi1*phi3", 1, 4)] = Rational(1, 4);
    known[key("phi2*phi3", 2, 4)] = Rational(1, 4);
    known[key("phi2*phi3", 1, 3)] = Rational(1, 4);
    known[key("phi2*phi4", 1, 4)] = Rational(1, 4);
    known[key("phi2*phi4", 2, 3)] = Rational(-1, 4);
    known[key("phi1*phi4", 2, 4)] = Rational(-1, 4);

    std::vector<std::pair<std::string, SpherePoly>> weights;
    weights.emplace_back("1", SpherePoly(4, 1));
    for (int k = 0; k < 4; ++k)
        weights.emplace_back("phi" + std::to_string(k + 1), SpherePoly::variable(4, k));
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            std::string name = i == j ? "phi" + std::to_string(i + 1) + "^2"
                                      : "phi" + std::to_string(i + 1) + "*phi" +
                                            std::to_string(j + 1);
            weights.emplace_back(name,
                                 SpherePoly::variable(4, i) * SpherePoly::variable(4, j));
        }
    }

    std::vector<PairingTableRow> rows;
    for (const auto& [name, w] : weights) {
        for (int i = 1; i <= 4; ++i) {
            for (int j = i + 1; j <= 4; ++j) {
                SpherePoly pairing = omega_pair(omega, SpherePoly::variable(4, i - 1),
                                                SpherePoly::variable(4, j - 1));
                PairingTableRow row;
                row.weight = name;
                row.i = i;
                row.j = j;
                row.value = Rational(-3) * table.integral(w * pairing);
                auto it = known.find(key(name, i, j));
                row.expected = it == known.end() ? Rational(0) : phi2 * it->second;
                row.match = row.value == row.expected;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace spherecert
