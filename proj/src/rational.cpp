#include "nestrec/rational.hpp"

#include <numeric>
#include <ostream>

#include "nestrec/checked.hpp"
#include "nestrec/errors.hpp"

namespace nestrec {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    // |INT64_MIN| is not representable, so std::gcd would be undefined.
    if (num == INT64_MIN) throw OverflowError("rational numerator out of range");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator-() const { return Rational(checked::neg(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t l = checked::lcm(a.den_, b.den_);
    return Rational(checked::add(checked::mul(a.num_, l / a.den_), checked::mul(b.num_, l / b.den_)), l);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
    const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
    const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
    const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational(checked::mul(n1, n2), checked::mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.num() << '/' << r.den(); }

}  // namespace nestrec
