#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "lfactor/errors.hpp"
#include "lfactor/scalar.hpp"
#include "lfactor/segment.hpp"

namespace lfactor {

// Recursive-descent parser for the representation DSL:
//
//   Repr := Seg ( "*" Seg )*
//   Seg  := "[" label ":" len ( "@" rat ( "~" "z" frac )? )? "]"
//   rat  := optionally-signed fraction p/q or integer
//   frac := k/N
//
// Semantics: tau = q^{rat} * zeta_{frac}; an omitted twist means tau = 1.
// Whitespace-insensitive. Errors carry the byte offset and the expected tokens.
class ReprParser {
public:
    explicit ReprParser(std::string_view src) : src_(src) {}

    Representation parse() {
        Representation p;
        p.segments.push_back(parse_segment());
        skip_ws();
        while (pos_ < src_.size()) {
            expect('*', "'*' or end of input");
            p.segments.push_back(parse_segment());
            skip_ws();
        }
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& expected) {
        throw ParseError(at, expected,
                         "parse error at offset " + std::to_string(at) + ": expected " + expected);
    }

    char peek() { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void expect(char c, const std::string& expected) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c)
            fail(pos_, expected);
        ++pos_;
    }

    std::string parse_label() {
        skip_ws();
        std::size_t start = pos_;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos_ >= src_.size() || !head(src_[pos_]))
            fail(pos_, "cuspidal label");
        while (pos_ < src_.size() && body(src_[pos_]))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    long long parse_integer(const std::string& expected, bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && (peek() == '+' || peek() == '-'))
            neg = src_[pos_++] == '-';
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail(start, expected);
        long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_++] - '0');
            if (v > 1000000)
                fail(start, expected + " (value too large)");
        }
        return neg ? -v : v;
    }

    Rational parse_fraction(const std::string& expected, bool allow_sign) {
        std::size_t start = pos_;
        long long num = parse_integer(expected, allow_sign);
        long long den = 1;
        if (peek() == '/') {
            ++pos_;
            den = parse_integer("denominator", false);
            if (den == 0)
                fail(start, expected + " with nonzero denominator");
        }
        return Rational(num, den);
    }

    Segment parse_segment() {
        expect('[', "'['");
        Segment seg;
        seg.label = parse_label();
        expect(':', "':'");
        std::size_t len_at = pos_;
        skip_ws();
        len_at = pos_;
        long long len = parse_integer("segment length", false);
        if (len < 1)
            fail(len_at, "positive segment length");
        seg.len = static_cast<int>(len);
        Rational qexp(0);
        Rational zeta(0);
        skip_ws();
        if (peek() == '@') {
            ++pos_;
            qexp = parse_fraction("rational exponent", true);
            skip_ws();
            if (peek() == '~') {
                ++pos_;
                skip_ws();
                if (peek() != 'z')
                    fail(pos_, "'z'");
                ++pos_;
                zeta = parse_fraction("root-of-unity fraction k/N", false);
            }
        }
        seg.tau = Scalar(zeta, qexp);
        expect(']', "']'");
        return seg;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

inline Representation parse_repr(std::string_view src) {
    return ReprParser(src).parse();
}

inline std::string render(const Segment& seg) {
    std::string s = "[" + seg.label + ":" + std::to_string(seg.len);
    if (!seg.tau.is_one()) {
        s += "@" + to_string(seg.tau.qexp());
        if (seg.tau.zeta() != 0)
            s += "~z" + std::to_string(seg.tau.zeta().numerator()) + "/" +
                 std::to_string(seg.tau.zeta().denominator());
    }
    return s + "]";
}

inline std::string render(const Representation& p) {
    std::string s;
    for (const Segment& seg : p.segments) {
        if (!s.empty())
            s += " * ";
        s += render(seg);
    }
    return s;
}

} // namespace lfactor
