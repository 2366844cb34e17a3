#include "spherecert/moments.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace spherecert {

MomentTable::MomentTable(int sphere_dim) : m_(sphere_dim) {
    if (sphere_dim < 1) throw std::invalid_argument("MomentTable: sphere_dim must be >= 1");
}

Rational MomentTable::monomial_moment(const MultiIndex& a) const {
    if (a.dim() != m_ + 1)
        throw std::invalid_argument("MomentTable: multi-index has wrong dimension");
    if (!a.all_even()) return 0;  // Vanishing short-circuit before any recursion.
    std::lock_guard<std::mutex> lock(mutex_);
    return moment_locked(a);
}

Rational MomentTable::moment_locked(const MultiIndex& a) const {
    int l = a.degree();
    if (l == 0) return 1;
    if (auto it = cache_.find(a); it != cache_.end()) return it->second;
    Rational lambda(static_cast<long>(l) * (l + m_ - 1));
    Rational sum = 0;
    for (int i = 0; i <= m_; ++i) {
        int ai = a[i];
        if (ai < 2) continue;
        sum += Rational(static_cast<long>(ai) * (ai - 1)) / lambda * moment_locked(a.bump(i, -2));
    }
    cache_.emplace(a, sum);
    return sum;
}

namespace {

// Enumerates even multi-indices over `dim` variables with degree <= max_degree.
void for_each_even(std::vector<int>& e, int pos, int remaining,
                   const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == static_cast<int>(e.size()) - 1) {
        for (int a = 0; a <= remaining; a += 2) {
            e[pos] = a;
            fn(e);
        }
        e[pos] = 0;
        return;
    }
    for (int a = 0; a <= remaining; a += 2) {
        e[pos] = a;
        for_each_even(e, pos + 1, remaining - a, fn);
    }
    e[pos] = 0;
}

}  // namespace

void MomentTable::warm_up(int max_degree) const {
    std::vector<int> e(m_ + 1, 0);
    std::lock_guard<std::mutex> lock(mutex_);
    for_each_even(e, 0, max_degree,
                  [&](const std::vector<int>& exp) { moment_locked(MultiIndex(exp)); });
}

Rational MomentTable::integral(const SpherePoly& p) const {
    if (p.ambient_dim() != m_ + 1)
        throw std::invalid_argument("MomentTable::integral: ambient dimension mismatch");
    Rational sum = 0;
    for (const auto& [a, c] : p.terms()) sum += c * monomial_moment(a);
    return sum;
}

Rational MomentTable::l2_inner(const SpherePoly& f, const SpherePoly& h) const {
    return integral(f * h);
}

Rational MomentTable::dirichlet_inner(const SpherePoly& f, const SpherePoly& h) const {
    return integral(grad_pairing(f, h));
}

Rational oracle_moment(int sphere_dim, const MultiIndex& a) {
    if (!a.all_even()) return 0;
    mpz_class num = 1;
    for (int i = 0; i < a.dim(); ++i)
        for (int k = a[i] - 1; k >= 2; k -= 2) num *= k;
    mpz_class den = 1;
    int half = a.degree() / 2;
    for (int k = 1; k <= half; ++k) den *= sphere_dim + 2 * k - 1;
    mpq_class q(num, den);
    return Rational(std::move(q));
}

}  // namespace spherecert
