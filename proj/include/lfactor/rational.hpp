#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "lfactor/errors.hpp"

namespace lfactor {

// Exact fraction over signed 64-bit integers, always reduced with a positive
// denominator. Denominators here are small torsion orders and twist steps;
// comparisons cross-multiply through 128-bit intermediates.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const long long g = std::gcd(a.den_, b.den_);
        return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        const long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
        const long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void reduce() {
        if (den_ == 0)
            throw Error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    long long r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline long long rational_floor(const Rational& x) {
    return floor_div(x.numerator(), x.denominator());
}

inline std::string to_string(const Rational& x) {
    std::string s = std::to_string(x.numerator());
    if (x.denominator() != 1)
        s += "/" + std::to_string(x.denominator());
    return s;
}

} // namespace lfactor
