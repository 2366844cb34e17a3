#include "spherecert/multi_index.hpp"

#include <stdexcept>

namespace spherecert {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int a : e_)
        if (a < 0) throw std::invalid_argument("MultiIndex: negative exponent");
}

MultiIndex MultiIndex::unit(int dim, int pos, int power) {
    std::vector<int> e(dim, 0);
    e.at(pos) = power;
    return MultiIndex(std::move(e));
}

bool MultiIndex::all_even() const {
    for (int a : e_)
        if (a % 2 != 0) return false;
    return true;
}

MultiIndex MultiIndex::bump(int pos, int delta) const {
    MultiIndex r(*this);
    r.e_.at(pos) += delta;
    if (r.e_[pos] < 0) throw std::invalid_argument("MultiIndex::bump: negative exponent");
    return r;
}

std::string MultiIndex::str() const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "phi" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace spherecert
