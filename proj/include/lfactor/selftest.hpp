#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "lfactor/galois.hpp"
#include "lfactor/generate.hpp"
#include "lfactor/lfun.hpp"
#include "lfactor/parser.hpp"

namespace lfactor {

// Left-truncation counts k (in segment steps) whose derived segment has even
// dimension: the orders whose exceptional factors multiply to the full
// exterior-square factor of the segment.
inline std::vector<int> exceptional_truncations(int r, int len) {
    std::vector<int> ks;
    for (int k = 0; k < len; ++k)
        if ((len - k) * r % 2 == 0)
            ks.push_back(k);
    return ks;
}

// L(s, Delta, ext^2) assembled from the exceptional factors of its derivatives;
// the independent route for the per-segment factorization identity.
inline EulerFactor l_seg_ext_via_truncations(const Registry& reg, const Segment& d) {
    const int r = reg.at(d.label).r;
    std::vector<EulerFactor> parts;
    for (int k : exceptional_truncations(r, d.len)) {
        const SegmentDerivative der = derivative_segment(reg, d, k * r);
        parts.push_back(l_ex_segment(reg, *der.segment));
    }
    return ef_product(parts);
}

namespace selftest_detail {

struct Check {
    std::string name;
    std::function<bool(std::string&)> run;
};

inline bool random_scalar_laws(std::string& why) {
    gen::Rng rng(101);
    for (int i = 0; i < 500; ++i) {
        const Scalar a = gen::twist(rng, 6, 4), b = gen::twist(rng, 6, 4), c = gen::twist(rng, 6, 4);
        if ((a * b) * c != a * (b * c) || a * b != b * a)
            return why = "group law failed", false;
        if (a * a.inverse() != Scalar::one() || a * Scalar::one() != a)
            return why = "inverse/identity failed", false;
        if (a.pow(3) != a * a * a)
            return why = "pow failed", false;
    }
    return true;
}

inline bool random_factor_laws(std::string& why) {
    gen::Rng rng(202);
    auto factor = [&]() {
        EulerFactor f;
        const int n = rng.range(0, 4);
        for (int i = 0; i < n; ++i)
            f.insert(gen::twist(rng, 2, 2), rng.range(1, 2));
        return f;
    };
    for (int i = 0; i < 300; ++i) {
        const EulerFactor a = factor(), b = factor(), c = factor();
        if (ef_product({a, b, c}) != ef_product({c, ef_product({b, a})}))
            return why = "product not associative/commutative", false;
        if (ef_divide(ef_product({a, b}), b) != a)
            return why = "divide(product(a,b), b) != a", false;
        if (ef_lcm({a, a}) != a || ef_lcm({a, b}) != ef_lcm({b, a}))
            return why = "lcm not idempotent/commutative", false;
        if (ef_lcm({ef_product({a, b}), a}) != ef_product({a, b}))
            return why = "lcm does not absorb a divisor", false;
        const Scalar s = gen::twist(rng, 2, 2), t = gen::twist(rng, 2, 2);
        if (ef_shift(ef_shift(a, s), t) != ef_shift(a, s * t))
            return why = "shift does not compose", false;
        const GammaClass g = gamma_normalize(a, b);
        const GammaClass h = gamma_subst_one_minus_s(gamma_normalize(b, a));
        if (!gamma_mul(g, h).is_trivial())
            return why = "gamma(s) * gamma(1-s) of the swapped pair is not trivial", false;
    }
    return true;
}

inline bool dsl_round_trip(std::string& why) {
    gen::Rng rng(303);
    const Registry reg = builtin_std_registry();
    for (int i = 0; i < 200; ++i) {
        const Representation p = gen::representation(rng, reg, 4, 10, 6);
        if (parse_repr(render(p)) != p)
            return why = "parse(render(p)) != p for " + render(p), false;
    }
    return true;
}

inline bool std_registry_shape(std::string& why) {
    const Registry reg = builtin_std_registry();
    validate(reg);
    for (const auto& [a, ca] : reg.cuspidals())
        for (const auto& [b, cb] : reg.cuspidals())
            if (rs_pair_roots(reg, a, b) != rs_pair_roots(reg, b, a))
                return why = "rs_pair_roots not symmetric on (" + a + "," + b + ")", false;
    return true;
}

inline bool segment_calculus(std::string& why) {
    gen::Rng rng(404);
    const Registry reg = builtin_std_registry();
    for (int i = 0; i < 200; ++i) {
        const Segment d = gen::segment(rng, reg, gen::registry_labels(reg), 9, 6);
        const int r = reg.at(d.label).r;
        const int j1 = rng.range(0, d.len), j2 = rng.range(0, d.len - j1);
        const SegmentDerivative once = derivative_segment(reg, d, j1 * r);
        if (j1 + j2 < d.len && j1 > 0) {
            const SegmentDerivative twice = derivative_segment(reg, *once.segment, j2 * r);
            const SegmentDerivative direct = derivative_segment(reg, d, (j1 + j2) * r);
            if (*twice.segment != *direct.segment)
                return why = "derivative composition failed", false;
        }
    }
    for (int i = 0; i < 100; ++i) {
        const Representation p = gen::representation(rng, reg, 3, 8, 6);
        const int m = rep_dim(reg, p);
        for (int k = 0; k <= m; ++k) {
            int expected = 0;
            // brute force over all per-segment truncation counts
            std::vector<int> caps;
            for (const Segment& d : p.segments)
                caps.push_back(d.len);
            std::vector<int> cur(caps.size(), 0);
            auto count = [&](auto&& self, std::size_t idx, int need) -> void {
                if (idx == caps.size()) {
                    expected += need == 0;
                    return;
                }
                const int r = reg.at(p.segments[idx].label).r;
                for (int a = 0; a <= caps[idx] && a * r <= need; ++a)
                    self(self, idx + 1, need - a * r);
            };
            count(count, 0, k);
            const auto cons = derivative_constituents(reg, p, k);
            if (static_cast<int>(cons.size()) != expected)
                return why = "constituent count mismatch at order " + std::to_string(k), false;
            for (const Constituent& c : cons) {
                Scalar prod = Scalar::one();
                for (const Segment& part : c.parts)
                    prod = prod * central_char(reg, part);
                Scalar direct = Scalar::one();
                for (std::size_t idx = 0; idx < p.segments.size(); ++idx) {
                    const SegmentDerivative der = derivative_segment(reg, p.segments[idx], c.source_tuple[idx]);
                    if (der.kind == SegmentDerivative::Kind::kProper)
                        direct = direct * central_char(reg, *der.segment);
                }
                if (prod != direct)
                    return why = "central character of constituent is not the product over parts", false;
            }
        }
    }
    return true;
}

inline bool factor_identities(std::string& why) {
    gen::Rng rng(505);
    const Registry reg = builtin_std_registry();
    const std::vector<std::string> labels = gen::registry_labels(reg);
    for (int i = 0; i < 100; ++i) {
        const Segment a = gen::segment(rng, reg, labels, 8, 6);
        const Segment b = gen::segment(rng, reg, labels, 8, 6);
        if (l_seg_rs(reg, a, b) != l_seg_rs(reg, b, a))
            return why = "l_seg_rs not symmetric", false;
        if (ef_divide(l_seg_rs(reg, a, a), l_seg_ext(reg, a)) != l_seg_sym(reg, a))
            return why = "ext * sym != rs on a segment", false;
        const int half = rng.range(-6, 6);
        const Scalar c = Scalar::q_power(Rational(half, 2));
        const Segment twisted{a.label, a.len, a.tau * c};
        if (l_seg_ext(reg, twisted) != ef_shift(l_seg_ext(reg, a), c.pow(2)))
            return why = "shift equivariance failed", false;
    }
    for (const std::string& label : labels) {
        for (int len = 1; len <= 4; ++len) {
            const Segment d{label, len, gen::twist(rng, 6, 3)};
            if (l_seg_ext_via_truncations(reg, d) != l_seg_ext(reg, d))
                return why = "derivative factorization failed on " + render(d), false;
        }
    }
    for (int i = 0; i < 100; ++i) {
        const Representation p = gen::representation(rng, reg, 4, 10, 6);
        if (l_rep_rs(reg, p) != ef_mul(l_rep_ext(reg, p), l_rep_sym(reg, p)))
            return why = "L(pi x pi) != ext * sym on " + render(p), false;
        if (gamma_ext(reg, p) != gamma_ext_via_parts(reg, p))
            return why = "gamma multiplicativity failed on " + render(p), false;
    }
    return true;
}

inline bool derivative_oracle(std::string& why) {
    gen::Rng rng(606);
    const Registry reg = builtin_std_registry();
    for (int i = 0; i < 25; ++i) {
        const Representation p = gen::general_position_representation(rng, reg, 3, 8);
        if (l_ext_via_derivatives(reg, p) != l_rep_ext(reg, p))
            return why = "derivative route disagrees with closed form on " + render(p), false;
    }
    return true;
}

inline bool arithmetic_agreement(std::string& why) {
    gen::Rng rng(707);
    const Registry reg = builtin_std_registry();
    for (int i = 0; i < 50; ++i) {
        const FormalParam phi{gen::representation(rng, reg, 4, 10, 6).segments};
        if (!langlands_agree(reg, phi))
            return why = "arithmetic and analytic assemblies disagree", false;
    }
    return true;
}

} // namespace selftest_detail

// Runs the bundled invariant suite on generated inputs, printing one line per check.
inline bool run_selftest(std::ostream& out) {
    using selftest_detail::Check;
    const std::vector<Check> checks{
        {"scalar group laws", selftest_detail::random_scalar_laws},
        {"euler factor algebra", selftest_detail::random_factor_laws},
        {"representation DSL round-trip", selftest_detail::dsl_round_trip},
        {"bundled registry validity and pairing symmetry", selftest_detail::std_registry_shape},
        {"segment derivative calculus", selftest_detail::segment_calculus},
        {"factor identities (rs, sym, shift, truncations, gamma)", selftest_detail::factor_identities},
        {"derivative oracle vs closed form", selftest_detail::derivative_oracle},
        {"arithmetic vs analytic assembly", selftest_detail::arithmetic_agreement},
    };
    bool ok = true;
    for (const Check& check : checks) {
        std::string why;
        bool passed = false;
        try {
            passed = check.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        out << (passed ? "ok   " : "FAIL ") << check.name;
        if (!passed && !why.empty())
            out << ": " << why;
        out << "\n";
        ok = ok && passed;
    }
    return ok;
}

} // namespace lfactor
