#include "spherecert/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace spherecert {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    // mpq_class accepts "p" and "p/q" but aborts on garbage, so validate first.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        return j;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t end_num = digits(i);
    if (end_num == i) throw std::invalid_argument("Rational::parse: '" + s + "'");
    if (end_num != s.size()) {
        if (s[end_num] != '/') throw std::invalid_argument("Rational::parse: '" + s + "'");
        std::size_t end_den = digits(end_num + 1);
        if (end_den != s.size() || end_den == end_num + 1)
            throw std::invalid_argument("Rational::parse: '" + s + "'");
    }
    mpq_class v(s);
    if (sgn(v.get_den()) == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& a) {
    Rational r;
    r.v_ = abs(a.v_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_.get_str(); }

}  // namespace spherecert
