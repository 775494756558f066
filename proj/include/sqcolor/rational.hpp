#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sqcolor {

// Exact fraction on 64-bit words, always reduced, denominator positive.
// Intermediates run through 128 bits; a result that cannot be reduced back
// into 64 bits throws instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den) { *this = reduce(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational operator+(const Rational& o) const {
        return reduce(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return reduce(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return reduce(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return reduce(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        i128 l = i128(num_) * o.den_;
        i128 r = i128(o.num_) * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical "p/q" form used in every serialized report.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    double approx() const { return double(num_) / double(den_); }

private:
    using i128 = __int128;

    static i128 abs128(i128 x) { return x < 0 ? -x : x; }
    static i128 gcd128(i128 a, i128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static Rational reduce(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = i128(-1) - i128(0x7fffffffffffffffLL);
        constexpr i128 hi = i128(0x7fffffffffffffffLL);
        if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = (long long)num;
        r.den_ = (long long)den;
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace sqcolor
