#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lfactor/errors.hpp"
#include "lfactor/json_io.hpp"
#include "lfactor/scalar.hpp"

namespace lfactor {

// Abstract supercuspidal datum rho of GL_r: everything the closed-form factor
// formulas consume. The Shalika pole set is declared input, not computed; it lists
// the alpha = q^{s0} at which the twisted Shalika functional on rho nu^{s0/2} exists.
struct CuspidalDatum {
    struct Dual {
        std::string label; // rho~ = dual.label twisted by nu^{s0} with alpha0 = q^{s0}
        Scalar alpha0;
    };

    std::string label;
    int r = 1; // rho is a representation of GL_r
    int f = 1; // order of the cyclic group of unramified self-twists
    Scalar omega; // omega_rho(varpi), unitary (qexp 0)
    std::optional<Dual> dual;
    std::vector<Scalar> shalika; // sorted, duplicate-free
};

class Registry {
public:
    void add(CuspidalDatum datum) {
        std::sort(datum.shalika.begin(), datum.shalika.end());
        datum.shalika.erase(std::unique(datum.shalika.begin(), datum.shalika.end()), datum.shalika.end());
        cuspidals_.insert_or_assign(datum.label, std::move(datum));
    }

    bool contains(const std::string& label) const { return cuspidals_.count(label) != 0; }

    const CuspidalDatum& at(const std::string& label) const {
        auto it = cuspidals_.find(label);
        if (it == cuspidals_.end())
            throw UnknownLabelError("unknown cuspidal label '" + label + "'");
        return it->second;
    }

    const std::map<std::string, CuspidalDatum>& cuspidals() const { return cuspidals_; }

private:
    std::map<std::string, CuspidalDatum> cuspidals_;
};

// the f-th roots of unity as Scalars with qexp 0
inline std::vector<Scalar> unramified_self_twists(int f) {
    std::vector<Scalar> out;
    out.reserve(f);
    for (int j = 0; j < f; ++j)
        out.push_back(Scalar::root_of_unity(j, f));
    return out;
}

inline bool in_alpha0_coset(const Scalar& alpha, const Scalar& alpha0, int f) {
    Scalar ratio = alpha * alpha0.inverse();
    if (ratio.qexp() != 0)
        return false;
    return ratio.zeta().denominator() <= f && f % ratio.zeta().denominator() == 0;
}

// Checks every datum and cross-datum invariant; throws ValidationError naming the
// first violated invariant and its label.
inline void validate(const Registry& reg) {
    auto fail = [](const std::string& label, const std::string& msg) {
        throw ValidationError("cuspidal '" + label + "': " + msg);
    };
    for (const auto& [label, c] : reg.cuspidals()) {
        if (c.r < 1)
            fail(label, "dimension r must be positive");
        if (c.f < 1 || c.r % c.f != 0)
            fail(label, "self-twist order f must divide r");
        if (c.omega.qexp() != 0)
            fail(label, "omega must be unitary (qexp 0)");
        if (c.dual) {
            if (!reg.contains(c.dual->label))
                fail(label, "dual label '" + c.dual->label + "' not in registry");
            if (c.dual->alpha0.qexp() != 0)
                fail(label, "alpha0 must be unitary (qexp 0)");
            const CuspidalDatum& d = reg.at(c.dual->label);
            if (c.omega * d.omega != c.dual->alpha0.pow(c.r))
                fail(label, "central character law omega * omega_dual = alpha0^r violated");
        }
        if (!c.shalika.empty()) {
            if (!c.dual || c.dual->label != label)
                fail(label, "nonempty Shalika set requires a self-dual datum");
            if (c.r % 2 != 0)
                fail(label, "nonempty Shalika set requires even r");
            for (const Scalar& alpha : c.shalika) {
                if (!in_alpha0_coset(alpha, c.dual->alpha0, c.f))
                    fail(label, "Shalika value " + alpha.str() + " outside alpha0 * mu_f");
                if (alpha.pow(c.r / 2) != c.omega)
                    fail(label, "Shalika value " + alpha.str() + " violates alpha^(r/2) = omega");
            }
        }
    }
    // duality must be involutive, with alpha0 determined up to the mu_f ambiguity
    for (const auto& [label, c] : reg.cuspidals()) {
        if (!c.dual)
            continue;
        const CuspidalDatum& d = reg.at(c.dual->label);
        if (d.r != c.r || d.f != c.f)
            fail(label, "dual '" + d.label + "' must share r and f");
        if (!d.dual || d.dual->label != label)
            fail(label, "duality is not involutive via '" + d.label + "'");
        if (!in_alpha0_coset(d.dual->alpha0, c.dual->alpha0, c.f))
            fail(label, "dual alpha0 mismatch beyond the mu_f ambiguity");
    }
}

// The set of alpha = q^{s0} with rho_a~ = rho_b nu^{s0}: empty unless the labels are
// a dual pair of equal dimension, and then the full coset alpha0 * mu_f. These poles
// are necessarily simple, so the result is a set.
inline std::vector<Scalar> rs_pair_roots(const Registry& reg, const std::string& a, const std::string& b) {
    const CuspidalDatum& ca = reg.at(a);
    const CuspidalDatum& cb = reg.at(b);
    if (ca.r != cb.r || !ca.dual || ca.dual->label != b)
        return {};
    std::vector<Scalar> out;
    for (const Scalar& zeta : unramified_self_twists(cb.f))
        out.push_back(ca.dual->alpha0 * zeta);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- JSON wire format ----
//
// {"cuspidals":[{"label":...,"r":...,"f":...,"omega":{...},"dual":{...}|null,"shalika":[...]}]}

inline json cuspidal_to_json(const CuspidalDatum& c) {
    json j{{"label", c.label}, {"r", c.r}, {"f", c.f}, {"omega", scalar_to_json(c.omega)}};
    j["dual"] = c.dual ? json{{"label", c.dual->label}, {"alpha0", scalar_to_json(c.dual->alpha0)}}
                       : json(nullptr);
    json sh = json::array();
    for (const Scalar& alpha : c.shalika)
        sh.push_back(scalar_to_json(alpha));
    j["shalika"] = sh;
    return j;
}

inline std::string registry_to_json(const Registry& reg) {
    json arr = json::array();
    for (const auto& [label, c] : reg.cuspidals())
        arr.push_back(cuspidal_to_json(c));
    return json{{"cuspidals", arr}}.dump(2) + "\n";
}

inline Registry parse_registry(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        throw Error("registry JSON parse error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("cuspidals") || !doc.at("cuspidals").is_array())
        throw Error("registry: expected {\"cuspidals\":[...]}");
    Registry reg;
    std::size_t i = 0;
    for (const auto& j : doc.at("cuspidals")) {
        const std::string where = "cuspidals[" + std::to_string(i++) + "]";
        if (!j.is_object() || !j.contains("label") || !j.at("label").is_string())
            throw Error(where + ": missing string field 'label'");
        CuspidalDatum c;
        c.label = j.at("label").get<std::string>();
        for (const char* field : {"r", "f"})
            if (!j.contains(field) || !j.at(field).is_number_integer())
                throw Error(where + ": missing integer field '" + std::string(field) + "'");
        c.r = j.at("r").get<int>();
        c.f = j.at("f").get<int>();
        if (!j.contains("omega"))
            throw Error(where + ": missing field 'omega'");
        c.omega = scalar_from_json(j.at("omega"), where + ".omega");
        if (j.contains("dual") && !j.at("dual").is_null()) {
            const auto& d = j.at("dual");
            if (!d.is_object() || !d.contains("label") || !d.at("label").is_string() || !d.contains("alpha0"))
                throw Error(where + ".dual: expected {\"label\":..., \"alpha0\":...}");
            c.dual = CuspidalDatum::Dual{d.at("label").get<std::string>(),
                                         scalar_from_json(d.at("alpha0"), where + ".dual.alpha0")};
        }
        if (j.contains("shalika")) {
            if (!j.at("shalika").is_array())
                throw Error(where + ".shalika: expected an array");
            std::size_t k = 0;
            for (const auto& s : j.at("shalika"))
                c.shalika.push_back(scalar_from_json(s, where + ".shalika[" + std::to_string(k++) + "]"));
        }
        reg.add(std::move(c));
    }
    return reg;
}

inline Registry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open registry file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_registry(buf.str());
}

// The bundled registry backing the documentation examples: the trivial character,
// a cubic-central-character GL_1 datum, two self-dual GL_2 cuspidals (one with a
// self-twist of order 2), and a self-dual GL_3 cuspidal.
inline Registry builtin_std_registry() {
    Registry reg;
    const Scalar one = Scalar::one();
    reg.add({"one", 1, 1, one, CuspidalDatum::Dual{"one", one}, {}});
    reg.add({"chi", 1, 1, Scalar::root_of_unity(1, 3),
             CuspidalDatum::Dual{"chi", Scalar::root_of_unity(2, 3)}, {}});
    reg.add({"rho2", 2, 1, one, CuspidalDatum::Dual{"rho2", one}, {one}});
    reg.add({"rho2o", 2, 2, Scalar::root_of_unity(1, 2),
             CuspidalDatum::Dual{"rho2o", one}, {Scalar::root_of_unity(1, 2)}});
    reg.add({"rho3", 3, 1, one, CuspidalDatum::Dual{"rho3", one}, {}});
    return reg;
}

} // namespace lfactor
