#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace spherecert {

/// Exponent vector (a_1,...,a_{m+1}) of a monomial phi^a in the m+1 ambient
/// variables. Position k holds the exponent of phi_{k+1}.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }
    /// phi_{i+1}^power, i.e. the unit index at position i (0-based).
    static MultiIndex unit(int dim, int pos, int power = 1);

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int pos) const { return e_[pos]; }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool all_even() const;

    /// Copy with exponent at `pos` bumped by `delta` (result must stay >= 0).
    MultiIndex bump(int pos, int delta) const;

    const std::vector<int>& exponents() const { return e_; }

    auto operator<=>(const MultiIndex&) const = default;

    std::string str() const;  // "phi1^2*phi3" style, "1" for the empty index

private:
    std::vector<int> e_;
};

}  // namespace spherecert
