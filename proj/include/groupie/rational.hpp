#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

// Exact rational arithmetic over 128-bit integers.  Wide enough for the
// exhaustive small-graph oracle (denominators up to b^15 for p = a/b and
// n <= 6) and the moment identity checks; not a general bignum.

namespace groupie {

using int128 = __int128;

namespace detail {
constexpr int128 abs128(int128 x) { return x < 0 ? -x : x; }
constexpr int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long v) : num_(v), den_(1) {}  // NOLINT(implicit)
    constexpr Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

    constexpr int128 num() const { return num_; }
    constexpr int128 den() const { return den_; }

    constexpr Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    constexpr Rational operator-() const { return Rational(-num_, den_); }
    constexpr Rational operator*(const Rational& o) const {
        // Cross-reduce before multiplying to keep magnitudes down.
        int128 g1 = detail::gcd128(num_, o.den_);
        int128 g2 = detail::gcd128(o.num_, den_);
        return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
    }
    constexpr Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return *this * Rational(o.den_, o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    constexpr bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    constexpr bool operator!=(const Rational& o) const { return !(*this == o); }
    constexpr bool operator<(const Rational& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    constexpr bool operator<=(const Rational& o) const { return !(o < *this); }
    constexpr bool operator>(const Rational& o) const { return o < *this; }
    constexpr bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational pow(unsigned k) const {
        Rational r(1);
        Rational base = *this;
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const {
        std::string s = digits(num_);
        if (den_ != 1) s += "/" + digits(den_);
        return s;
    }

private:
    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int128 g = detail::gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    static std::string digits(int128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        std::string s;
        for (int128 x = detail::abs128(v); x != 0; x /= 10)
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        return neg ? "-" + s : s;
    }

    int128 num_ = 0;
    int128 den_ = 1;
};

}  // namespace groupie
