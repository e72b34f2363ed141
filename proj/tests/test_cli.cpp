#include <catch2/catch_amalgamated.hpp>

#include "lfactor/cli.hpp"

#include "test_support.hpp"

using namespace lfactor;

namespace {

const std::string kStdRegistry = std::string(LFACTOR_DATA_DIR) + "/std.json";

Query query(const std::string& command, std::vector<std::string> reprs) {
    Query q;
    q.command = command;
    q.reprs = std::move(reprs);
    q.registry_path = kStdRegistry;
    return q;
}

} // namespace

TEST_CASE("ext prints the factor in canonical text form", "[cli]") {
    const RunResult r = run_query(query("ext", {"[one:2@-1/2]"}));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(1 - X)^-1\n");
}

TEST_CASE("oracle agrees on the worked Steinberg example", "[cli]") {
    const RunResult r = run_query(query("oracle", {"[one:3@-1]"}));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(1 - q^(-1) X)^-1") != std::string::npos);
    CHECK(r.output.find("AGREE") != std::string::npos);
}

TEST_CASE("parse errors exit with status 1, before any registry access", "[cli]") {
    Query q;
    q.command = "ext";
    q.reprs = {"[one:2@-1/2"};
    const RunResult r = run_query(q); // no registry given
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("offset 11") != std::string::npos);
}

TEST_CASE("domain errors exit with status 1", "[cli]") {
    CHECK(run_query(query("ext", {"[ghost:1]"})).exit_code == 1);
    CHECK(run_query(query("lex", {"[one:1]"})).exit_code == 1);      // odd dimension
    CHECK(run_query(query("rs", {"[one:1]"})).exit_code == 1);       // wants two arguments
    Query missing = query("ext", {"[one:1]"});
    missing.registry_path = "";
    CHECK(run_query(missing).exit_code == 1);
    Query unknown = query("frobnicate", {"[one:1]"});
    CHECK(run_query(unknown).exit_code == 1);
}

TEST_CASE("rs takes two representations", "[cli]") {
    const RunResult r = run_query(query("rs", {"[one:2@-1/2]", "[one:2@-1/2]"}));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(1 - q^(-1) X)^-1 (1 - X)^-1\n");
}

TEST_CASE("gamma prints the class as a ratio", "[cli]") {
    const RunResult r = run_query(query("gamma", {"[one:2@-1/2]"}));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(1 - q^(1) X)^-1 / (1 - X)^-1\n");
}

TEST_CASE("derive lists constituents with their tuples", "[cli]") {
    Query q = query("derive", {"[one:2] * [chi:1]"});
    q.order = 1;
    const RunResult r = run_query(q);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(0,1): [one:2]\n(1,0): [one:1@1] * [chi:1]\n");
}

TEST_CASE("check-gp reports violations without failing", "[cli]") {
    CHECK(run_query(query("check-gp", {"[one:1] * [one:1@1/3]"})).output == "ok\n");
    const RunResult r = run_query(query("check-gp", {"[one:1] * [one:1]"}));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("violation (2)") != std::string::npos);
}

TEST_CASE("langlands agreement on the analytic/arithmetic assembly", "[cli]") {
    const RunResult r = run_query(query("langlands", {"[one:2@-1/2] * [rho2:1] * [chi:1@2]"}));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "AGREE\n");
}

TEST_CASE("JSON output round-trips the factor", "[cli][json]") {
    Query q = query("ext", {"[rho2o:2@1/2~z1/3]"});
    q.json_output = true;
    const RunResult r = run_query(q);
    CHECK(r.exit_code == 0);
    const Registry reg = builtin_std_registry();
    const EulerFactor direct = l_rep_ext(reg, parse_repr("[rho2o:2@1/2~z1/3]"));
    CHECK(euler_factor_from_json(json::parse(r.output)) == direct);
}

TEST_CASE("JSON oracle payload carries both routes and the verdict", "[cli][json]") {
    Query q = query("oracle", {"[one:3@-1]"});
    q.json_output = true;
    const RunResult r = run_query(q);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.at("verdict") == "AGREE");
    CHECK(j.at("derivative") == j.at("closed_form"));
}
