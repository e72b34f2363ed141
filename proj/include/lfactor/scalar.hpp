#pragma once

#include <cctype>
#include <string>

#include "lfactor/errors.hpp"
#include "lfactor/rational.hpp"

namespace lfactor {

// Accepts "p" or "p/q" with an optional leading sign; the denominator must be nonzero.
inline Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto parse_int = [&]() -> long long {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            neg = text[pos++] == '-';
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw Error("malformed rational '" + text + "'");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > (1LL << 40))
                throw Error("rational out of range '" + text + "'");
        }
        return neg ? -v : v;
    };
    long long num = parse_int();
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_int();
        if (den == 0)
            throw Error("zero denominator in '" + text + "'");
    }
    if (pos != text.size())
        throw Error("malformed rational '" + text + "'");
    return Rational(num, den);
}

// An exact element zeta * q^e of the multiplicative group (roots of unity) x q^Q.
// zeta is kept as the reduced fraction k/N in [0,1), standing for e^{2 pi i k/N}.
// This group houses inverse roots alpha = q^{s0}, central character values at the
// uniformizer, Satake values, and segment twists; multiplication adds zetas mod 1
// and q-exponents over Q, so equality is decidable and structural.
class Scalar {
public:
    Scalar() : zeta_(0), qexp_(0) {}
    Scalar(const Rational& zeta, const Rational& qexp) : zeta_(wrap(zeta)), qexp_(qexp) {}

    static Scalar one() { return Scalar(); }
    static Scalar root_of_unity(long long k, long long n) { return Scalar(Rational(k, n), Rational(0)); }
    static Scalar q_power(const Rational& e) { return Scalar(Rational(0), e); }

    const Rational& zeta() const { return zeta_; }
    const Rational& qexp() const { return qexp_; }
    bool is_one() const { return zeta_ == 0 && qexp_ == 0; }

    Scalar inverse() const { return Scalar(-zeta_, -qexp_); }

    Scalar pow(long long k) const { return Scalar(zeta_ * k, qexp_ * k); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.zeta_ + b.zeta_, a.qexp_ + b.qexp_);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    // Canonical total order: lexicographic on (N, k, e).
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.zeta_.denominator() != b.zeta_.denominator())
            return a.zeta_.denominator() < b.zeta_.denominator();
        if (a.zeta_.numerator() != b.zeta_.numerator())
            return a.zeta_.numerator() < b.zeta_.numerator();
        return a.qexp_ < b.qexp_;
    }

    // "z(k/N)*q^(e)" with z(0/1) and q^(0) omitted; "1" when trivial.
    std::string str() const {
        if (is_one())
            return "1";
        std::string s;
        if (zeta_ != 0)
            s = "z(" + std::to_string(zeta_.numerator()) + "/" + std::to_string(zeta_.denominator()) + ")";
        if (qexp_ != 0) {
            if (!s.empty())
                s += "*";
            s += "q^(" + to_string(qexp_) + ")";
        }
        return s;
    }

private:
    static Rational wrap(const Rational& z) { return z - Rational(rational_floor(z)); }

    Rational zeta_; // k/N with N >= 1 and 0 <= k < N
    Rational qexp_;
};

inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

} // namespace lfactor
