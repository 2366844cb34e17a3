#pragma once

#include <map>
#include <mutex>

#include "spherecert/multi_index.hpp"
#include "spherecert/rational.hpp"
#include "spherecert/sphere_poly.hpp"

namespace spherecert {

/// Memoized exact moments of monomials over S^m, normalized so that
/// Vol(S^m) = 1. Computed by the degree recursion
///   int phi^a = sum_i a_i(a_i-1) / (l(l+m-1)) * int phi^{a-2e_i},  l = |a|,
/// with int 1 = 1 and vanishing whenever some a_i is odd.
///
/// Thread safety: the cache is internally synchronized; any number of
/// threads may call the query methods concurrently. warm_up() can pre-seal
/// the table from a single thread instead.
class MomentTable {
public:
    explicit MomentTable(int sphere_dim);

    int sphere_dim() const { return m_; }
    int ambient_dim() const { return m_ + 1; }

    /// int_{S^m} phi^a dM / Vol(S^m).
    Rational monomial_moment(const MultiIndex& a) const;

    /// Precompute all even moments with |a| <= max_degree.
    void warm_up(int max_degree) const;

    /// Termwise moment sum; exact integral of p over the sphere.
    Rational integral(const SpherePoly& p) const;

    /// int f h.
    Rational l2_inner(const SpherePoly& f, const SpherePoly& h) const;

    /// int <grad f, grad h> via the tangential pairing.
    Rational dirichlet_inner(const SpherePoly& f, const SpherePoly& h) const;

private:
    Rational moment_locked(const MultiIndex& a) const;

    int m_;
    mutable std::mutex mutex_;
    mutable std::map<MultiIndex, Rational> cache_;
};

/// Independent closed-form oracle for the same normalized moment:
///   prod_i (a_i - 1)!! / prod_{k=1}^{|a|/2} (m + 2k - 1)
/// for even multi-indices, 0 otherwise. Must agree with
/// MomentTable::monomial_moment on every input.
Rational oracle_moment(int sphere_dim, const MultiIndex& a);

}  // namespace spherecert
