#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "lfactor/errors.hpp"
#include "lfactor/scalar.hpp"

namespace lfactor {

// A finite multiset of inverse roots alpha, denoting the normalized Euler factor
//
//   L(s) = prod_alpha (1 - alpha q^{-s})^{-1},
//
// i.e. P(q^{-s})^{-1} with P(0) = 1. The empty multiset is the constant factor 1.
// Roots are kept in the canonical Scalar order with multiplicities >= 1.
class EulerFactor {
public:
    EulerFactor() = default;
    EulerFactor(std::initializer_list<Scalar> roots) {
        for (const auto& a : roots)
            insert(a);
    }

    static EulerFactor one() { return EulerFactor(); }

    bool is_one() const { return roots_.empty(); }

    int multiplicity(const Scalar& a) const {
        auto it = roots_.find(a);
        return it == roots_.end() ? 0 : it->second;
    }

    // total number of roots counted with multiplicity (the degree of P)
    int degree() const {
        int d = 0;
        for (const auto& [a, m] : roots_)
            d += m;
        return d;
    }

    void insert(const Scalar& a, int mult = 1) {
        if (mult <= 0)
            throw Error("root multiplicity must be positive");
        roots_[a] += mult;
    }

    const std::map<Scalar, int>& roots() const { return roots_; }

    friend bool operator==(const EulerFactor&, const EulerFactor&) = default;

    // "(1 - alpha X)^-1" factors in canonical order, one per root counted with
    // multiplicity, X standing for q^{-s}; "1" if empty.
    std::string str() const {
        if (roots_.empty())
            return "1";
        std::string s;
        for (const auto& [a, m] : roots_)
            for (int i = 0; i < m; ++i) {
                if (!s.empty())
                    s += " ";
                s += "(1 - ";
                if (!a.is_one())
                    s += a.str() + " ";
                s += "X)^-1";
            }
        return s;
    }

private:
    std::map<Scalar, int> roots_;
};

inline EulerFactor ef_mul(const EulerFactor& a, const EulerFactor& b) {
    EulerFactor out = a;
    for (const auto& [root, m] : b.roots())
        out.insert(root, m);
    return out;
}

inline EulerFactor ef_product(const std::vector<EulerFactor>& fs) {
    EulerFactor out;
    for (const auto& f : fs)
        for (const auto& [root, m] : f.roots())
            out.insert(root, m);
    return out;
}

// L(s) -> L(s + s0) on roots: every alpha becomes alpha / c where c encodes q^{s0}.
inline EulerFactor ef_shift(const EulerFactor& f, const Scalar& c) {
    EulerFactor out;
    const Scalar ci = c.inverse();
    for (const auto& [root, m] : f.roots())
        out.insert(root * ci, m);
    return out;
}

// least common multiple with respect to divisibility of the inverse polynomials:
// per distinct root, multiplicity = max over the inputs
inline EulerFactor ef_lcm(const std::vector<EulerFactor>& fs) {
    EulerFactor out;
    for (const auto& f : fs)
        for (const auto& [root, m] : f.roots())
            if (out.multiplicity(root) < m)
                out.insert(root, m - out.multiplicity(root));
    return out;
}

// multiset difference; the denominator must divide the numerator
inline EulerFactor ef_divide(const EulerFactor& num, const EulerFactor& den) {
    std::map<Scalar, int> left = num.roots();
    for (const auto& [root, m] : den.roots()) {
        auto it = left.find(root);
        if (it == left.end() || it->second < m)
            throw NotDivisibleError("factor (1 - " + root.str() + " X)^" + std::to_string(m) +
                                    " does not divide the numerator");
        it->second -= m;
        if (it->second == 0)
            left.erase(it);
    }
    EulerFactor out;
    for (const auto& [root, m] : left)
        out.insert(root, m);
    return out;
}

// the underlying root set, all multiplicities flattened to 1
inline EulerFactor ef_support(const EulerFactor& f) {
    EulerFactor out;
    for (const auto& [root, m] : f.roots())
        out.insert(root, 1);
    return out;
}

inline bool ef_support_disjoint(const EulerFactor& a, const EulerFactor& b) {
    for (const auto& [root, m] : a.roots())
        if (b.multiplicity(root) > 0)
            return false;
    return true;
}

inline EulerFactor ef_support_intersection(const EulerFactor& a, const EulerFactor& b) {
    EulerFactor out;
    for (const auto& [root, m] : a.roots())
        if (b.multiplicity(root) > 0)
            out.insert(root, 1);
    return out;
}

// A gamma factor up to units of the Laurent-polynomial ring C[q^{+-s}]: num and den
// hold the inverse roots (in the variable q^{-s}) of the two Euler factors in the
// ratio, fully cancelled against each other.
struct GammaClass {
    EulerFactor num;
    EulerFactor den;

    bool is_trivial() const { return num.is_one() && den.is_one(); }

    friend bool operator==(const GammaClass&, const GammaClass&) = default;

    std::string str() const { return num.str() + " / " + den.str(); }
};

inline GammaClass gamma_cancel(const EulerFactor& num, const EulerFactor& den) {
    std::map<Scalar, int> n = num.roots();
    std::map<Scalar, int> d = den.roots();
    for (auto it = n.begin(); it != n.end();) {
        auto jt = d.find(it->first);
        if (jt != d.end()) {
            int c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0)
                d.erase(jt);
        }
        it = it->second == 0 ? n.erase(it) : std::next(it);
    }
    GammaClass g;
    for (const auto& [root, m] : n)
        g.num.insert(root, m);
    for (const auto& [root, m] : d)
        g.den.insert(root, m);
    return g;
}

// (1 - beta q^{s-1}) and (1 - beta^{-1} q q^{-s}) differ by the unit -beta q^{s-1},
// so a root beta of a factor evaluated at 1-s corresponds to beta^{-1} q at s.
inline Scalar gamma_convert_root(const Scalar& beta) {
    return beta.inverse() * Scalar::q_power(Rational(1));
}

// Class of epsilon * L(1-s, contragredient) / L(s, .): converts the 1-s side into
// q^{-s} inverse roots and cancels against the s side.
inline GammaClass gamma_normalize(const EulerFactor& at_one_minus_s, const EulerFactor& at_s) {
    EulerFactor num;
    for (const auto& [root, m] : at_one_minus_s.roots())
        num.insert(gamma_convert_root(root), m);
    return gamma_cancel(num, at_s);
}

inline GammaClass gamma_mul(const GammaClass& a, const GammaClass& b) {
    return gamma_cancel(ef_mul(a.num, b.num), ef_mul(a.den, b.den));
}

// substitute s -> 1-s: every factor (1 - alpha q^{-s}) turns into a unit times
// (1 - alpha^{-1} q q^{-s}), on both sides of the class
inline GammaClass gamma_subst_one_minus_s(const GammaClass& g) {
    EulerFactor num, den;
    for (const auto& [root, m] : g.num.roots())
        num.insert(gamma_convert_root(root), m);
    for (const auto& [root, m] : g.den.roots())
        den.insert(gamma_convert_root(root), m);
    return gamma_cancel(num, den);
}

} // namespace lfactor
