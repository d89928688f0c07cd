#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "torsionkit/errors.hpp"
#include "torsionkit/runner.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 violation found, 2 usage or input error.
constexpr int kUsageExit = 2;

}  // namespace

int main(int argc, char** argv) {
    torsionkit::RunConfig config;
    try {
        config.caps = torsionkit::caps_from_env();
    } catch (const torsionkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageExit;
    }

    CLI::App app{std::string(torsionkit::tool_version()) +
                 " - hereditary torsion theories over finite rings"};
    app.require_subcommand(1);
    std::string caps_spec;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", config.output_path,
                        "write the JSON report to this file instead of stdout");
        sub->add_option("--caps", caps_spec,
                        "cap overrides, e.g. ringOrder=32,latticeSize=16 "
                        "(TORSIONKIT_CAPS applies first)");
    };
    auto add_rings = [&](CLI::App* sub, bool with_modules) {
        sub->add_option("--ring", config.rings,
                        "ring to analyze: builtin:<name> or a ring spec file "
                        "(repeatable; default: every builtin ring)");
        if (with_modules) {
            sub->add_option("--module", config.modules,
                            "module spec file, analyzed with its own ring (repeatable)");
            sub->add_option("--corpus", config.corpus,
                            "modules per ring: 'default' (regular, cyclic quotients, a direct "
                            "sum, regular bimodule) or 'none'");
        }
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", config.seed, "sampling seed (default 42)");
        sub->add_option("--cases", config.cases, "sampled cases per property (default 1000)");
    };

    add_rings(app.add_subcommand("ideals", "right-ideal lattice with dense/essential flags"),
              false);
    add_rings(app.add_subcommand("filters",
                                 "Lambek, Goldie, and idempotent-extension filters with the "
                                 "Gabriel axiom check"),
              false);
    add_rings(app.add_subcommand("derivations",
                                 "enumerate ring derivations and module derivations"),
              true);
    add_rings(app.add_subcommand("check-differential",
                                 "differentiability and torsion-stability of every Gabriel "
                                 "filter"),
              true);
    add_rings(app.add_subcommand("goldie-lemmas",
                                 "exhaustive annihilator-star lemma verification"),
              true);
    add_rings(app.add_subcommand("lambek-witness",
                                 "constructive witnesses that derivations preserve dense "
                                 "torsion"),
              true);
    CLI::App* symbolic =
        app.add_subcommand("symbolic", "d/dx on Q(x): derivation laws, uniqueness, modules");
    add_sampling(symbolic);
    CLI::App* zq = app.add_subcommand(
        "zq-demo", "localize a finitely generated abelian group at Z - {0}");
    add_sampling(zq);
    zq->add_option("--group", config.group,
                   "group as rank:d1,d2,... e.g. 1:4 for Z + Z/4 (default: three showcases)");
    zq->add_option("--matrix", config.matrix,
                   "endomorphism of the free part, rows separated by ';', e.g. '0 1; 0 0'");
    CLI::App* sweep =
        app.add_subcommand("sweep", "every check over the builtin corpus plus the symbolic "
                                    "and localization suites");
    add_rings(sweep, true);
    add_sampling(sweep);
    for (CLI::App* sub : app.get_subcommands({})) add_output(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageExit;
    }

    config.command = app.get_subcommands().at(0)->get_name();
    try {
        if (!caps_spec.empty())
            config.caps = torsionkit::parse_caps_overrides(caps_spec, config.caps);
        const torsionkit::RunResult result = torsionkit::run_command(config);
        torsionkit::emit_result(config, result, std::cout);
        return result.exit_code;
    } catch (const torsionkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageExit;
    }
}
