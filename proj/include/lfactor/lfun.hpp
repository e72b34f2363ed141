#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lfactor/errors.hpp"
#include "lfactor/euler_factor.hpp"
#include "lfactor/registry.hpp"
#include "lfactor/segment.hpp"

namespace lfactor {

// The closed-form local factors. Notation: factors are multisets of inverse roots
// (euler_factor.hpp); a twist tau = q^u on a cuspidal shifts L(s) to L(s+u), which
// multiplies every root by tau^{-1}. The main identities implemented here:
//
//   L(s, Delta x Delta')  = prod_{j<l'} L(s + l - 1 + j, rho x rho')        (l >= l')
//   L(s, Delta, ext^2)    = prod over the parity ladder of L(. , rho, ext^2/sym^2)
//                           shifted by twice the segment center
//   L(s, pi, ext^2)       = prod_k L(s, Delta_k, ext^2) prod_{i<j} L(s, Delta_i x Delta_j)
//   L(s, pi, sym^2)       = same shape with sym^2 on the diagonal
//   L(s, pi x pi)         = prod over all ordered pairs (i, j)
//
// and, independently of the closed forms, the derivative route: the exterior square
// factor is the l.c.m. of exceptional factors of the even (resp. odd) derivatives,
// with each constituent's exceptional pole set produced by involutions that match
// parts into dual pairs and Shalika-bearing fixed points.

// ---------- cuspidal level ----------

// L(s, rho_a nu^x  x  rho_b nu^y) with ta = q^x, tb = q^y
inline EulerFactor l_cusp_rs(const Registry& reg, const std::string& a, const Scalar& ta,
                             const std::string& b, const Scalar& tb) {
    EulerFactor out;
    const Scalar shift = (ta * tb).inverse();
    for (const Scalar& alpha : rs_pair_roots(reg, a, b))
        out.insert(alpha * shift);
    return out;
}

// L(s, rho_a nu^x, ext^2): trivial for odd r, otherwise the declared Shalika pole
// set shifted by 2x (roots times ta^{-2})
inline EulerFactor l_cusp_ext(const Registry& reg, const std::string& a, const Scalar& ta) {
    const CuspidalDatum& c = reg.at(a);
    if (c.r % 2 != 0)
        return EulerFactor::one();
    EulerFactor out;
    const Scalar shift = ta.pow(-2);
    for (const Scalar& alpha : c.shalika)
        out.insert(alpha * shift);
    return out;
}

// L(s, rho, sym^2) = L(s, rho x rho) / L(s, rho, ext^2); a NotDivisibleError here
// signals an inconsistent registry
inline EulerFactor l_cusp_sym(const Registry& reg, const std::string& a, const Scalar& ta) {
    return ef_divide(l_cusp_rs(reg, a, ta, a, ta), l_cusp_ext(reg, a, ta));
}

// ---------- segment level ----------

namespace detail {

inline EulerFactor at_shift(const EulerFactor& f, long long c) {
    return ef_shift(f, Scalar::q_power(Rational(c)));
}

// tau^2 q^{len-1}: the square of the twist from the centered (square-integrable)
// segment to this one
inline Scalar center_square(const Segment& d) {
    return d.tau.pow(2) * Scalar::q_power(Rational(d.len - 1));
}

} // namespace detail

// L(s, Delta x Delta') = prod_{j=0}^{l'-1} L(s + l - 1 + j, rho nu^u x rho' nu^{u'}),
// arranged so l >= l'
inline EulerFactor l_seg_rs(const Registry& reg, const Segment& a, const Segment& b) {
    const Segment* x = &a;
    const Segment* y = &b;
    if (x->len < y->len)
        std::swap(x, y);
    const EulerFactor base = l_cusp_rs(reg, x->label, x->tau, y->label, y->tau);
    std::vector<EulerFactor> parts;
    for (int j = 0; j < y->len; ++j)
        parts.push_back(detail::at_shift(base, x->len - 1 + j));
    return ef_product(parts);
}

// exterior square factor of a quasi-square-integrable segment: the parity ladder
//   len even: prod_{i<len/2} L(s+2i+1, rho, ext^2) L(s+2i, rho, sym^2)
//   len odd : prod_{i<=(len-1)/2} L(s+2i, rho, ext^2) prod_{1<=i<=(len-1)/2} L(s+2i-1, rho, sym^2)
// evaluated at the unitary base point and then shifted by twice the center
inline EulerFactor l_seg_ext(const Registry& reg, const Segment& d) {
    const EulerFactor ext = l_cusp_ext(reg, d.label, Scalar::one());
    const EulerFactor sym = l_cusp_sym(reg, d.label, Scalar::one());
    std::vector<EulerFactor> parts;
    if (d.len % 2 == 0) {
        for (int i = 0; i < d.len / 2; ++i) {
            parts.push_back(detail::at_shift(ext, 2 * i + 1));
            parts.push_back(detail::at_shift(sym, 2 * i));
        }
    } else {
        for (int i = 0; i <= (d.len - 1) / 2; ++i)
            parts.push_back(detail::at_shift(ext, 2 * i));
        for (int i = 1; i <= (d.len - 1) / 2; ++i)
            parts.push_back(detail::at_shift(sym, 2 * i - 1));
    }
    return ef_shift(ef_product(parts), detail::center_square(d));
}

// symmetric square of a segment: the ladder with the two towers swapped
inline EulerFactor l_seg_sym(const Registry& reg, const Segment& d) {
    const EulerFactor ext = l_cusp_ext(reg, d.label, Scalar::one());
    const EulerFactor sym = l_cusp_sym(reg, d.label, Scalar::one());
    std::vector<EulerFactor> parts;
    if (d.len % 2 == 0) {
        for (int i = 0; i < d.len / 2; ++i) {
            parts.push_back(detail::at_shift(ext, 2 * i));
            parts.push_back(detail::at_shift(sym, 2 * i + 1));
        }
    } else {
        for (int i = 1; i <= (d.len - 1) / 2; ++i)
            parts.push_back(detail::at_shift(ext, 2 * i - 1));
        for (int i = 0; i <= (d.len - 1) / 2; ++i)
            parts.push_back(detail::at_shift(sym, 2 * i));
    }
    return ef_shift(ef_product(parts), detail::center_square(d));
}

// ---------- representation level ----------

inline EulerFactor l_rep_ext(const Registry& reg, const Representation& p) {
    const Representation s = langlands_sort(p);
    std::vector<EulerFactor> parts;
    for (const Segment& d : s.segments)
        parts.push_back(l_seg_ext(reg, d));
    for (std::size_t i = 0; i < s.segments.size(); ++i)
        for (std::size_t j = i + 1; j < s.segments.size(); ++j)
            parts.push_back(l_seg_rs(reg, s.segments[i], s.segments[j]));
    return ef_product(parts);
}

inline EulerFactor l_rep_sym(const Registry& reg, const Representation& p) {
    const Representation s = langlands_sort(p);
    std::vector<EulerFactor> parts;
    for (const Segment& d : s.segments)
        parts.push_back(l_seg_sym(reg, d));
    for (std::size_t i = 0; i < s.segments.size(); ++i)
        for (std::size_t j = i + 1; j < s.segments.size(); ++j)
            parts.push_back(l_seg_rs(reg, s.segments[i], s.segments[j]));
    return ef_product(parts);
}

// Rankin-Selberg square L(s, pi x pi): all ordered pairs, i = j included
inline EulerFactor l_rep_rs(const Registry& reg, const Representation& p) {
    const Representation s = langlands_sort(p);
    std::vector<EulerFactor> parts;
    for (const Segment& a : s.segments)
        for (const Segment& b : s.segments)
            parts.push_back(l_seg_rs(reg, a, b));
    return ef_product(parts);
}

// cross convolution L(s, pi x sigma) of two representations, used by the CLI
inline EulerFactor l_pair_rs(const Registry& reg, const Representation& p, const Representation& q) {
    std::vector<EulerFactor> parts;
    for (const Segment& a : p.segments)
        for (const Segment& b : q.segments)
            parts.push_back(l_seg_rs(reg, a, b));
    return ef_product(parts);
}

// ---------- exceptional factors ----------

// Exceptional exterior-square factor of an even-dimensional segment: the base
// cuspidal's ext^2 for odd length, sym^2 for even length, shifted by twice the
// center. Odd-dimensional segments have no exceptional factor.
inline EulerFactor l_ex_segment(const Registry& reg, const Segment& d) {
    const int n = segment_dim(reg, d);
    if (n % 2 != 0)
        throw OddDimensionError("exceptional factor needs even dimension, segment has " + std::to_string(n));
    const EulerFactor base = (d.len % 2 != 0) ? l_cusp_ext(reg, d.label, Scalar::one())
                                              : l_cusp_sym(reg, d.label, Scalar::one());
    return ef_shift(base, detail::center_square(d));
}

// Exceptional pole set of L(s, Delta_a x Delta_b): the alpha = q^{s0} with
// dual(Delta_a) = Delta_b nu^{s0}. Nonempty only for equal lengths over dual
// cuspidal lines, and then a full mu_f coset; the poles are simple.
inline EulerFactor l_ex_rs_pair(const Registry& reg, const Segment& a, const Segment& b) {
    if (a.len != b.len)
        return EulerFactor::one();
    const CuspidalDatum& ca = reg.at(a.label);
    if (!ca.dual || ca.dual->label != b.label)
        return EulerFactor::one();
    const CuspidalDatum& cb = reg.at(b.label);
    const Scalar base = ca.dual->alpha0 * (a.tau * b.tau).inverse() * Scalar::q_power(Rational(1 - a.len));
    EulerFactor out;
    for (const Scalar& zeta : unramified_self_twists(cb.f))
        out.insert(base * zeta);
    return out;
}

namespace detail {

// visit every involution of {0,...,n-1}; match[i] == i marks a fixed point
inline void for_each_involution(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> match(n, -1);
    auto recurse = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && match[i] != -1)
            ++i;
        if (i == n) {
            visit(match);
            return;
        }
        match[i] = i;
        self(self);
        for (int j = i + 1; j < n; ++j) {
            if (match[j] != -1)
                continue;
            match[i] = j;
            match[j] = i;
            self(self);
            match[j] = -1;
        }
        match[i] = -1;
    };
    recurse(recurse);
}

} // namespace detail

// Exceptional pole set of an irreducible generic constituent Ind(Delta_1 x ... x Delta_p)
// of even total dimension. A pole alpha = q^{s0} occurs exactly when the twisted
// representation carries a Shalika functional, i.e. when some involution pairs the
// parts into dual couples (root set of l_ex_rs_pair) and leaves only fixed points
// with their own exceptional pole at alpha (root set of l_ex_segment; empty for odd
// dimension). The result is the union over involutions of the per-orbit intersections;
// every root is simple.
inline EulerFactor l_ex_constituent(const Registry& reg, const std::vector<Segment>& parts) {
    int n = 0;
    for (const Segment& d : parts)
        n += segment_dim(reg, d);
    if (n % 2 != 0)
        throw OddDimensionError("exceptional factor needs even total dimension, constituent has " +
                                std::to_string(n));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (linked(parts[i], parts[j]))
                throw LinkedPartsError("constituent parts " + std::to_string(i) + " and " + std::to_string(j) +
                                       " are linked");
    std::vector<EulerFactor> per_involution;
    detail::for_each_involution(static_cast<int>(parts.size()), [&](const std::vector<int>& match) {
        std::optional<EulerFactor> meet;
        bool dead = false;
        auto intersect = [&](const EulerFactor& s) {
            meet = meet ? ef_support_intersection(*meet, s) : ef_support(s);
            if (meet->is_one())
                dead = true;
        };
        for (std::size_t i = 0; i < parts.size() && !dead; ++i) {
            if (match[i] == static_cast<int>(i)) {
                if (segment_dim(reg, parts[i]) % 2 != 0) {
                    dead = true;
                    break;
                }
                intersect(l_ex_segment(reg, parts[i]));
            } else if (match[i] > static_cast<int>(i)) {
                intersect(l_ex_rs_pair(reg, parts[i], parts[match[i]]));
            }
        }
        if (!dead && meet)
            per_involution.push_back(*meet);
    });
    return ef_lcm(per_involution);
}

inline EulerFactor l_ex_constituent(const Registry& reg, const Constituent& c) {
    return l_ex_constituent(reg, c.parts);
}

// ---------- general position ----------

struct GeneralPositionReport {
    struct Violation {
        int condition = 0; // 1..5
        std::string description;

        friend bool operator==(const Violation&, const Violation&) = default;
    };

    bool ok = true;
    std::vector<Violation> violations;
};

namespace detail {

inline std::string tuple_str(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

} // namespace detail

// The decidable general-position conditions on a representation:
//   (1) every derivative constituent has pairwise-unlinked parts (irreducibility),
//   (2) within each derivative order, constituents have distinct central characters,
//   (3) the segments' exterior-square factors share no poles,
//   (4) convolution factors of distinct index pairs share no poles,
//   (5) convolution factors share no poles with any exterior-square factor.
inline GeneralPositionReport check_general_position(const Registry& reg, const Representation& p) {
    GeneralPositionReport report;
    auto add = [&](int condition, std::string description) {
        report.ok = false;
        report.violations.push_back({condition, std::move(description)});
    };

    const int m = rep_dim(reg, p);
    for (int k = 0; k <= m; ++k) {
        const std::vector<Constituent> cons = derivative_constituents(reg, p, k);
        for (const Constituent& c : cons) {
            for (std::size_t i = 0; i < c.parts.size(); ++i)
                for (std::size_t j = i + 1; j < c.parts.size(); ++j)
                    if (linked(c.parts[i], c.parts[j]))
                        add(1, "order " + std::to_string(k) + " constituent " +
                               detail::tuple_str(c.source_tuple) + " has linked parts");
        }
        for (std::size_t a = 0; a < cons.size(); ++a) {
            Scalar wa = Scalar::one();
            for (const Segment& d : cons[a].parts)
                wa = wa * central_char(reg, d);
            for (std::size_t b = a + 1; b < cons.size(); ++b) {
                Scalar wb = Scalar::one();
                for (const Segment& d : cons[b].parts)
                    wb = wb * central_char(reg, d);
                if (wa == wb)
                    add(2, "order " + std::to_string(k) + " constituents " +
                           detail::tuple_str(cons[a].source_tuple) + " and " +
                           detail::tuple_str(cons[b].source_tuple) + " share central character " + wa.str());
            }
        }
    }

    const std::size_t t = p.segments.size();
    std::vector<EulerFactor> ext(t);
    for (std::size_t i = 0; i < t; ++i)
        ext[i] = l_seg_ext(reg, p.segments[i]);
    std::map<std::pair<std::size_t, std::size_t>, EulerFactor> rs;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            rs[{i, j}] = l_seg_rs(reg, p.segments[i], p.segments[j]);

    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            if (!ef_support_disjoint(ext[i], ext[j]))
                add(3, "exterior-square factors of segments " + std::to_string(i) + " and " +
                       std::to_string(j) + " share a pole");
    for (auto it = rs.begin(); it != rs.end(); ++it)
        for (auto jt = std::next(it); jt != rs.end(); ++jt)
            if (!ef_support_disjoint(it->second, jt->second))
                add(4, "convolution factors of pairs (" + std::to_string(it->first.first) + "," +
                       std::to_string(it->first.second) + ") and (" + std::to_string(jt->first.first) +
                       "," + std::to_string(jt->first.second) + ") share a pole");
    for (const auto& [pair, f] : rs)
        for (std::size_t k = 0; k < t; ++k)
            if (!ef_support_disjoint(f, ext[k]))
                add(5, "convolution factor of pair (" + std::to_string(pair.first) + "," +
                       std::to_string(pair.second) + ") shares a pole with exterior-square factor of segment " +
                       std::to_string(k));
    return report;
}

// ---------- the derivative route ----------

// Independent evaluation of L(s, pi, ext^2): the l.c.m. of exceptional factors of
// the constituents over derivative orders 0, 2, ..., m-2 (even m) or 1, 3, ..., m-2
// (odd m). Valid for generic representations in general position; refuses otherwise.
inline EulerFactor l_ext_via_derivatives(const Registry& reg, const Representation& p) {
    if (!is_generic(p))
        throw NotGenericError("representation has linked segments");
    const GeneralPositionReport report = check_general_position(reg, p);
    if (!report.ok)
        throw NotGeneralPositionError("representation not in general position: " +
                                      report.violations.front().description);
    const int m = rep_dim(reg, p);
    std::vector<EulerFactor> exceptional;
    for (int k = m % 2 == 0 ? 0 : 1; k <= m - 2; k += 2)
        for (const Constituent& c : derivative_constituents(reg, p, k))
            exceptional.push_back(l_ex_constituent(reg, c.parts));
    return ef_lcm(exceptional);
}

// ---------- gamma ----------

// pi^iota = Ind(dual(Delta_t) x ... x dual(Delta_1))
inline Representation contragredient(const Registry& reg, const Representation& p) {
    Representation out;
    for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it)
        out.segments.push_back(dual_segment(reg, *it));
    return out;
}

// gamma(s, pi, ext^2, psi) up to units: L(1-s, pi^iota, ext^2) over L(s, pi, ext^2)
inline GammaClass gamma_ext(const Registry& reg, const Representation& p) {
    for (const Segment& d : p.segments)
        if (!reg.at(d.label).dual)
            throw NoDualDataError("no dual data for cuspidal '" + d.label + "'");
    return gamma_normalize(l_rep_ext(reg, contragredient(reg, p)), l_rep_ext(reg, p));
}

// The other route to the same class: the normalized product of the segment gamma
// classes and the pairwise convolution gamma classes.
inline GammaClass gamma_ext_via_parts(const Registry& reg, const Representation& p) {
    GammaClass g;
    for (const Segment& d : p.segments)
        g = gamma_mul(g, gamma_normalize(l_seg_ext(reg, dual_segment(reg, d)), l_seg_ext(reg, d)));
    for (std::size_t i = 0; i < p.segments.size(); ++i)
        for (std::size_t j = i + 1; j < p.segments.size(); ++j)
            g = gamma_mul(g, gamma_normalize(l_seg_rs(reg, dual_segment(reg, p.segments[i]),
                                                      dual_segment(reg, p.segments[j])),
                                             l_seg_rs(reg, p.segments[i], p.segments[j])));
    return g;
}

} // namespace lfactor
