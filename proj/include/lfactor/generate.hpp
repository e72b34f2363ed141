#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lfactor/lfun.hpp"
#include "lfactor/registry.hpp"
#include "lfactor/segment.hpp"

namespace lfactor::gen {

// Deterministic input generators for the bundled invariant suite and the test
// harness. Everything is seeded explicitly; no global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

    int range(int lo, int hi) { return lo + below(hi - lo + 1); } // inclusive

    bool coin() { return below(2) == 0; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(static_cast<int>(v.size()))];
    }

private:
    std::mt19937_64 eng_;
};

// a root of unity in mu_12
inline Scalar torsion(Rng& rng) {
    static const std::vector<int> orders{1, 2, 3, 4, 6, 12};
    const int n = rng.pick(orders);
    return Scalar::root_of_unity(rng.below(n), n);
}

// zeta * q^{n/den} with |n| <= span * den
inline Scalar twist(Rng& rng, int den, int span) {
    return torsion(rng) * Scalar::q_power(Rational(rng.range(-span * den, span * den), den));
}

inline std::vector<std::string> registry_labels(const Registry& reg) {
    std::vector<std::string> labels;
    for (const auto& [label, c] : reg.cuspidals())
        labels.push_back(label);
    return labels;
}

inline Segment segment(Rng& rng, const Registry& reg, const std::vector<std::string>& labels,
                       int max_dim, int qexp_den) {
    std::vector<std::string> fitting;
    for (const std::string& label : labels)
        if (reg.at(label).r <= max_dim)
            fitting.push_back(label);
    if (fitting.empty())
        throw Error("no cuspidal fits in dimension " + std::to_string(max_dim));
    const std::string& label = rng.pick(fitting);
    const int r = reg.at(label).r;
    const int len = rng.range(1, max_dim / r);
    return Segment{label, len, twist(rng, qexp_den, 3)};
}

inline Representation representation(Rng& rng, const Registry& reg, int max_t, int max_dim,
                                     int qexp_den = 2) {
    const std::vector<std::string> labels = registry_labels(reg);
    int min_r = max_dim;
    for (const std::string& label : labels)
        min_r = std::min(min_r, reg.at(label).r);
    const int t = rng.range(1, max_t);
    Representation p;
    int budget = max_dim;
    for (int i = 0; i < t && budget >= min_r; ++i) {
        Segment d = segment(rng, reg, labels, budget, qexp_den);
        budget -= segment_dim(reg, d);
        p.segments.push_back(std::move(d));
    }
    return p;
}

// Rejection sampler for generic representations in general position. Twists with
// denominator-7 exponents avoid the half-integer collision lattice of the factor
// formulas, so nearly every draw is accepted.
inline Representation general_position_representation(Rng& rng, const Registry& reg, int max_t,
                                                      int max_dim) {
    for (int attempt = 0; attempt < 5000; ++attempt) {
        Representation p = representation(rng, reg, max_t, max_dim, 7);
        if (is_generic(p) && check_general_position(reg, p).ok)
            return p;
    }
    throw Error("failed to sample a general-position representation");
}

// A registry of random self-dual data and dual pairs satisfying every invariant:
// from a torsion seed x take alpha0 = x^2 and omega = x^r, which settles the central
// character law for any r; Shalika sets are random subsets of the admissible coset
// elements.
inline Registry registry(Rng& rng) {
    Registry reg;
    const int n_selfdual = rng.range(1, 3);
    const int n_pairs = rng.range(0, 2);
    int counter = 0;
    auto divisors = [](int r) {
        std::vector<int> out;
        for (int d = 1; d <= r; ++d)
            if (r % d == 0)
                out.push_back(d);
        return out;
    };
    for (int i = 0; i < n_selfdual; ++i) {
        CuspidalDatum c;
        c.label = "sd" + std::to_string(counter++);
        c.r = rng.range(1, 4);
        c.f = rng.pick(divisors(c.r));
        const Scalar x = torsion(rng);
        const Scalar alpha0 = x.pow(2);
        c.omega = x.pow(c.r);
        c.dual = CuspidalDatum::Dual{c.label, alpha0};
        if (c.r % 2 == 0) {
            for (const Scalar& zeta : unramified_self_twists(c.f)) {
                const Scalar alpha = alpha0 * zeta;
                if (alpha.pow(c.r / 2) == c.omega && rng.coin())
                    c.shalika.push_back(alpha);
            }
        }
        reg.add(std::move(c));
    }
    for (int i = 0; i < n_pairs; ++i) {
        CuspidalDatum a, b;
        a.label = "pa" + std::to_string(counter);
        b.label = "pb" + std::to_string(counter++);
        a.r = b.r = rng.range(1, 4);
        a.f = b.f = rng.pick(divisors(a.r));
        const Scalar x = torsion(rng);
        const Scalar alpha0 = x.pow(2);
        const Scalar alpha0b = alpha0 * rng.pick(unramified_self_twists(a.f));
        a.omega = torsion(rng);
        b.omega = alpha0.pow(a.r) * a.omega.inverse();
        a.dual = CuspidalDatum::Dual{b.label, alpha0};
        b.dual = CuspidalDatum::Dual{a.label, alpha0b};
        reg.add(std::move(a));
        reg.add(std::move(b));
    }
    validate(reg);
    return reg;
}

} // namespace lfactor::gen
