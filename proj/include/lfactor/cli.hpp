#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lfactor/errors.hpp"
#include "lfactor/galois.hpp"
#include "lfactor/json_io.hpp"
#include "lfactor/lfun.hpp"
#include "lfactor/parser.hpp"
#include "lfactor/registry.hpp"
#include "lfactor/selftest.hpp"

namespace lfactor {

// One CLI invocation. Exit status: 0 on success/AGREE, 1 on a domain error,
// 2 on DISAGREE (a violated identity).
struct Query {
    std::string command; // ext, sym, rs, gamma, lex, derive, oracle, check-gp, langlands, selftest
    std::vector<std::string> reprs;
    std::string registry_path;
    bool json_output = false;
    std::optional<int> order; // derive only
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

namespace cli_detail {

inline std::string factor_text(const EulerFactor& f) { return f.str() + "\n"; }

inline std::string factor_json(const EulerFactor& f) { return euler_factor_to_json(f).dump() + "\n"; }

} // namespace cli_detail

inline RunResult run_query(const Query& q) {
    static const std::vector<std::string> known{"ext",    "sym",      "rs",        "gamma",    "lex",
                                                "derive", "oracle",   "check-gp",  "langlands", "selftest"};
    std::ostringstream out;
    try {
        if (std::find(known.begin(), known.end(), q.command) == known.end())
            throw Error("unknown command '" + q.command + "'");

        if (q.command == "selftest") {
            const bool ok = run_selftest(out);
            return {ok ? 0 : 2, out.str()};
        }

        const std::size_t want = q.command == "rs" ? 2 : 1;
        if (q.reprs.size() != want)
            throw Error(q.command + " expects " + std::to_string(want) + " representation argument(s)");
        std::vector<Representation> reprs;
        for (const std::string& src : q.reprs)
            reprs.push_back(parse_repr(src));

        if (q.registry_path.empty())
            throw Error("--registry is required for this command");
        const Registry reg = load_registry(q.registry_path);
        validate(reg);
        for (const Representation& p : reprs)
            for (const Segment& d : p.segments)
                reg.at(d.label); // reject unknown labels up front

        if (q.command == "ext" || q.command == "sym" || q.command == "rs" || q.command == "lex") {
            EulerFactor f;
            if (q.command == "ext")
                f = l_rep_ext(reg, reprs[0]);
            else if (q.command == "sym")
                f = l_rep_sym(reg, reprs[0]);
            else if (q.command == "rs")
                f = l_pair_rs(reg, reprs[0], reprs[1]);
            else
                f = l_ex_constituent(reg, reprs[0].segments);
            out << (q.json_output ? cli_detail::factor_json(f) : cli_detail::factor_text(f));
            return {0, out.str()};
        }

        if (q.command == "gamma") {
            const GammaClass g = gamma_ext(reg, reprs[0]);
            if (q.json_output)
                out << gamma_class_to_json(g).dump() << "\n";
            else
                out << g.str() << "\n";
            return {0, out.str()};
        }

        if (q.command == "derive") {
            if (!q.order)
                throw Error("derive requires --order K");
            const auto cons = derivative_constituents(reg, reprs[0], *q.order);
            if (q.json_output) {
                json arr = json::array();
                for (const Constituent& c : cons) {
                    json parts = json::array();
                    for (const Segment& d : c.parts)
                        parts.push_back(render(d));
                    arr.push_back(json{{"tuple", c.source_tuple}, {"parts", parts}});
                }
                out << json{{"order", *q.order}, {"constituents", arr}}.dump() << "\n";
            } else {
                for (const Constituent& c : cons) {
                    out << "(";
                    for (std::size_t i = 0; i < c.source_tuple.size(); ++i)
                        out << (i ? "," : "") << c.source_tuple[i];
                    out << "): " << (c.parts.empty() ? "1" : render(Representation{c.parts})) << "\n";
                }
            }
            return {0, out.str()};
        }

        if (q.command == "oracle") {
            const EulerFactor derived = l_ext_via_derivatives(reg, reprs[0]);
            const EulerFactor closed = l_rep_ext(reg, reprs[0]);
            const bool agree = derived == closed;
            if (q.json_output) {
                out << json{{"verdict", agree ? "AGREE" : "DISAGREE"},
                            {"derivative", euler_factor_to_json(derived).at("roots")},
                            {"closed_form", euler_factor_to_json(closed).at("roots")}}
                           .dump()
                    << "\n";
            } else {
                out << "derivative route: " << derived.str() << "\n";
                out << "closed form:      " << closed.str() << "\n";
                out << (agree ? "AGREE" : "DISAGREE") << "\n";
            }
            return {agree ? 0 : 2, out.str()};
        }

        if (q.command == "check-gp") {
            const GeneralPositionReport report = check_general_position(reg, reprs[0]);
            if (q.json_output) {
                json arr = json::array();
                for (const auto& v : report.violations)
                    arr.push_back(json{{"condition", v.condition}, {"description", v.description}});
                out << json{{"ok", report.ok}, {"violations", arr}}.dump() << "\n";
            } else if (report.ok) {
                out << "ok\n";
            } else {
                for (const auto& v : report.violations)
                    out << "violation (" << v.condition << "): " << v.description << "\n";
            }
            return {0, out.str()};
        }

        // langlands
        const bool agree = langlands_agree(reg, FormalParam{reprs[0].segments});
        if (q.json_output)
            out << json{{"agree", agree}}.dump() << "\n";
        else
            out << (agree ? "AGREE" : "DISAGREE") << "\n";
        return {agree ? 0 : 2, out.str()};
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace lfactor
