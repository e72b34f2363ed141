#pragma once

#include <json.hpp>

#include <string>

#include "lfactor/errors.hpp"
#include "lfactor/euler_factor.hpp"
#include "lfactor/scalar.hpp"

namespace lfactor {

using json = nlohmann::json;

// Scalars travel as {"zeta":"k/N","qexp":"p/q"}; both fields mandatory,
// fractions always as strings.
inline json scalar_to_json(const Scalar& s) {
    return json{{"zeta", std::to_string(s.zeta().numerator()) + "/" + std::to_string(s.zeta().denominator())},
                {"qexp", std::to_string(s.qexp().numerator()) + "/" + std::to_string(s.qexp().denominator())}};
}

inline Scalar scalar_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("zeta") || !j.contains("qexp"))
        throw Error(where + ": expected {\"zeta\":..., \"qexp\":...}");
    if (!j.at("zeta").is_string() || !j.at("qexp").is_string())
        throw Error(where + ": zeta/qexp must be fraction strings");
    try {
        return Scalar(parse_rational(j.at("zeta").get<std::string>()),
                      parse_rational(j.at("qexp").get<std::string>()));
    } catch (const Error& e) {
        throw Error(where + ": " + e.what());
    }
}

// Lossless multiset encoding: one entry per root in canonical order, multiplicity repeated.
inline json euler_factor_to_json(const EulerFactor& f) {
    json roots = json::array();
    for (const auto& [root, m] : f.roots())
        for (int i = 0; i < m; ++i)
            roots.push_back(scalar_to_json(root));
    return json{{"roots", roots}};
}

inline EulerFactor euler_factor_from_json(const json& j, const std::string& where = "factor") {
    if (!j.is_object() || !j.contains("roots") || !j.at("roots").is_array())
        throw Error(where + ": expected {\"roots\":[...]}");
    EulerFactor f;
    std::size_t i = 0;
    for (const auto& r : j.at("roots"))
        f.insert(scalar_from_json(r, where + ".roots[" + std::to_string(i++) + "]"));
    return f;
}

inline json gamma_class_to_json(const GammaClass& g) {
    return json{{"num", euler_factor_to_json(g.num).at("roots")},
                {"den", euler_factor_to_json(g.den).at("roots")}};
}

} // namespace lfactor
