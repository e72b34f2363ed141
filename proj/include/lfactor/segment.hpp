#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lfactor/errors.hpp"
#include "lfactor/registry.hpp"
#include "lfactor/scalar.hpp"

namespace lfactor {

// Zelevinsky segment Delta = [rho nu^u, ..., rho nu^{u+len-1}] over the registry
// cuspidal `label`, with the twist carried multiplicatively as tau = q^u (torsion
// allowed, so complex unramified twists coming from duality compose in the same
// Scalar group). A segment of length len over GL_r data has dimension len * r.
struct Segment {
    std::string label;
    int len = 1;
    Scalar tau;

    friend bool operator==(const Segment&, const Segment&) = default;
};

inline int segment_dim(const Registry& reg, const Segment& d) {
    return d.len * reg.at(d.label).r;
}

// real center exponent w(Delta) = u + (len-1)/2; only the rational q-part of the
// twist enters (the torsion part is imaginary and does not order anything)
inline Rational segment_center(const Segment& d) {
    return d.tau.qexp() + Rational(d.len - 1, 2);
}

// Ordered list of segments denoting the normalized induction Ind(Delta_1 x ... x Delta_t),
// a representation of Whittaker type.
struct Representation {
    std::vector<Segment> segments;

    friend bool operator==(const Representation&, const Representation&) = default;
};

inline int rep_dim(const Registry& reg, const Representation& p) {
    int n = 0;
    for (const Segment& d : p.segments)
        n += segment_dim(reg, d);
    return n;
}

// One Jordan-Hoelder constituent Ind(Delta_1^{(k_1)} x ... x Delta_t^{(k_t)}) of a
// derivative, keeping the source tuple (k_1,...,k_t); trivial entries are dropped
// from parts.
struct Constituent {
    std::vector<Segment> parts;
    std::vector<int> source_tuple;

    friend bool operator==(const Constituent&, const Constituent&) = default;
};

struct SegmentDerivative {
    enum class Kind { kProper, kVanished, kTrivial };

    Kind kind = Kind::kVanished;
    std::optional<Segment> segment; // set iff kind == kProper

    bool vanished() const { return kind == Kind::kVanished; }
    bool trivial() const { return kind == Kind::kTrivial; }
};

// Bernstein-Zelevinsky derivative of a segment: Delta^{(k)} vanishes unless k is a
// multiple of r; Delta^{(jr)} truncates j members from the left, i.e.
// [rho nu^{u+j}, ..., rho nu^{u+len-1}]; the full derivative is the trivial
// representation of GL_0.
inline SegmentDerivative derivative_segment(const Registry& reg, const Segment& d, int k) {
    const int r = reg.at(d.label).r;
    const int n = d.len * r;
    if (k < 0 || k > n)
        throw OutOfRangeError("derivative order " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    if (k == 0)
        return {SegmentDerivative::Kind::kProper, d};
    if (k % r != 0)
        return {SegmentDerivative::Kind::kVanished, std::nullopt};
    if (k == n)
        return {SegmentDerivative::Kind::kTrivial, std::nullopt};
    const int j = k / r;
    return {SegmentDerivative::Kind::kProper, Segment{d.label, d.len - j, d.tau * Scalar::q_power(Rational(j))}};
}

// Contragredient segment: [rho nu^u, ..., rho nu^{u+len-1}]~ lives on the dual
// cuspidal line with twist alpha0 * tau^{-1} * q^{1-len}.
inline Segment dual_segment(const Registry& reg, const Segment& d) {
    const CuspidalDatum& c = reg.at(d.label);
    if (!c.dual)
        throw NoDualDataError("no dual data for cuspidal '" + d.label + "'");
    return Segment{c.dual->label, d.len,
                   c.dual->alpha0 * d.tau.inverse() * Scalar::q_power(Rational(1 - d.len))};
}

// Two segments are linked when neither contains the other and their union is again
// a segment. On a common cuspidal line with tau_b / tau_a = q^m (m an integer, no
// torsion) this is a statement about the integer intervals [0, la-1] and [m, m+lb-1].
inline bool linked(const Segment& a, const Segment& b) {
    if (a.label != b.label)
        return false;
    const Scalar ratio = b.tau * a.tau.inverse();
    if (ratio.zeta() != 0 || ratio.qexp().denominator() != 1)
        return false;
    const long long m = ratio.qexp().numerator();
    const long long alo = 0, ahi = a.len - 1;
    const long long blo = m, bhi = m + b.len - 1;
    const bool a_inside_b = blo <= alo && ahi <= bhi;
    const bool b_inside_a = alo <= blo && bhi <= ahi;
    const bool contiguous = std::max(alo, blo) <= std::min(ahi, bhi) + 1;
    return !a_inside_b && !b_inside_a && contiguous;
}

// omega_Delta(varpi): each member rho nu^{u+i} contributes omega_rho(varpi) q^{-r(u+i)}
inline Scalar central_char(const Registry& reg, const Segment& d) {
    const CuspidalDatum& c = reg.at(d.label);
    const long long l = d.len;
    const long long r = c.r;
    return c.omega.pow(l) * d.tau.pow(-r * l) * Scalar::q_power(Rational(-r * l * (l - 1), 2));
}

// Stable sort by decreasing real center exponent; ties keep their relative order
// (all value-level factor formulas are symmetric in equal-center segments).
inline Representation langlands_sort(Representation p) {
    std::stable_sort(p.segments.begin(), p.segments.end(), [](const Segment& x, const Segment& y) {
        return segment_center(y) < segment_center(x);
    });
    return p;
}

inline bool is_generic(const Representation& p) {
    for (std::size_t i = 0; i < p.segments.size(); ++i)
        for (std::size_t j = i + 1; j < p.segments.size(); ++j)
            if (linked(p.segments[i], p.segments[j]))
                return false;
    return true;
}

// All constituents of the k-th derivative: tuples (k_1,...,k_t) with sum k and every
// Delta_i^{(k_i)} non-vanishing, in lexicographic tuple order.
inline std::vector<Constituent> derivative_constituents(const Registry& reg, const Representation& p, int k) {
    const int n = rep_dim(reg, p);
    if (k < 0 || k > n)
        throw OutOfRangeError("derivative order " + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
    const int t = static_cast<int>(p.segments.size());
    std::vector<Constituent> out;
    std::vector<int> tuple(t, 0);
    auto recurse = [&](auto&& self, int i, int remaining) -> void {
        if (i == t) {
            if (remaining != 0)
                return;
            Constituent c;
            c.source_tuple = tuple;
            for (int j = 0; j < t; ++j) {
                SegmentDerivative der = derivative_segment(reg, p.segments[j], tuple[j]);
                if (der.kind == SegmentDerivative::Kind::kProper)
                    c.parts.push_back(*der.segment);
            }
            out.push_back(std::move(c));
            return;
        }
        const int r = reg.at(p.segments[i].label).r;
        const int ni = p.segments[i].len * r;
        for (int ki = 0; ki <= std::min(ni, remaining); ki += r) {
            tuple[i] = ki;
            self(self, i + 1, remaining - ki);
        }
        tuple[i] = 0;
    };
    recurse(recurse, 0, k);
    return out;
}

} // namespace lfactor
