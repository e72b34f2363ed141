#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "lfactor/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact local exterior-square, symmetric-square and Rankin-Selberg Euler factors\n"
                 "for representations given by Zelevinsky segments over registry cuspidal data"};
    app.require_subcommand(1);

    std::string registry_path;
    bool json = false;
    int order = 0;
    // bound to plain strings: CLI11 would strip the enclosing brackets of our
    // segment syntax from container-valued options
    std::string first_repr, second_repr;

    app.add_option("--registry", registry_path, "registry JSON file (required except for selftest)");
    app.add_flag("--json", json, "emit JSON instead of text");

    struct Command {
        const char* name;
        const char* help;
        int nreprs;
    };
    const std::vector<Command> commands{
        {"ext", "exterior square factor of a representation", 1},
        {"sym", "symmetric square factor of a representation", 1},
        {"rs", "Rankin-Selberg factor of a pair of representations", 2},
        {"gamma", "gamma class (up to units) of a representation", 1},
        {"lex", "exceptional exterior square factor of the induced representation", 1},
        {"derive", "list the constituents of the k-th derivative (use --order)", 1},
        {"oracle", "compare the derivative route against the closed form", 1},
        {"check-gp", "report the general-position conditions", 1},
        {"langlands", "check arithmetic vs analytic assembly of the summands", 1},
        {"selftest", "run the bundled invariant suite on generated inputs", 0},
    };
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        if (c.nreprs > 0)
            sub->add_option("repr", first_repr, "representation, e.g. \"[one:2@-1/2] * [rho2:1]\"")
                ->required();
        if (c.nreprs > 1)
            sub->add_option("repr2", second_repr, "second representation")->required();
        if (std::string(c.name) == "derive")
            sub->add_option("--order", order, "derivative order k")->required();
    }

    CLI11_PARSE(app, argc, argv);

    lfactor::Query q;
    q.command = app.get_subcommands().front()->get_name();
    if (q.command != "selftest") {
        q.reprs.push_back(first_repr);
        if (q.command == "rs")
            q.reprs.push_back(second_repr);
    }
    q.registry_path = registry_path;
    q.json_output = json;
    if (q.command == "derive")
        q.order = order;

    const lfactor::RunResult result = lfactor::run_query(q);
    std::cout << result.output;
    return result.exit_code;
}
