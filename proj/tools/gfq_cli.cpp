#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "gfq/config.hpp"
#include "gfq/errors.hpp"
#include "gfq/harness.hpp"

namespace {

// Flags share names with the INI keys; values are applied after the file.
struct Overrides {
    std::map<std::string, std::string> values;
    bool wb = false;
    std::string config;

    void add(CLI::App* app, const std::string& key, const std::string& help) {
        app->add_option("--" + key, values[key], help);
    }
};

void add_run_flags(CLI::App* app, Overrides& o, bool mesh_list) {
    app->add_option("--config", o.config, "INI file with [case], [scheme], [output] sections");
    o.add(app, "case", "case id");
    o.add(app, "scheme", "supg-std | supg-gfq | fv-hllc");
    o.add(app, "k", "polynomial degree");
    if (mesh_list) o.add(app, "meshes", "comma separated N list, e.g. 15,30,60");
    o.add(app, "n", "elements per direction");
    o.add(app, "n1", "elements in x");
    o.add(app, "n2", "elements in y");
    o.add(app, "t-end", "final time (default: case value)");
    o.add(app, "mach", "steady-vortex Mach number");
    o.add(app, "cfl", "CFL number");
    o.add(app, "tau-scale", "stabilization scale");
    o.add(app, "output", "output directory");
    o.add(app, "cadence", "steps between snapshots");
    o.add(app, "seed", "seed for randomized suites");
    app->add_flag("--wb", o.wb, "well-balanced isothermal source");
}

gfq::RunConfig build_config(const Overrides& o, CLI::App* app) {
    gfq::RunConfig cfg;
    if (!o.config.empty()) gfq::apply_ini(cfg, gfq::read_ini(o.config));
    for (const auto& [key, value] : o.values)
        if (app->count("--" + key) > 0) gfq::apply_setting(cfg, key, value);
    if (o.wb) cfg.well_balanced = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gfq: SUPG / global-flux SUPG spectral-element Euler solver"};
    app.require_subcommand(1);

    Overrides run_o, conv_o, ver_o;
    CLI::App* run = app.add_subcommand("run", "run one simulation, write VTK snapshots and summary.json");
    add_run_flags(run, run_o, false);
    CLI::App* conv = app.add_subcommand("convergence", "mesh-doubling study, write convergence.csv");
    add_run_flags(conv, conv_o, true);
    CLI::App* ver = app.add_subcommand("verify", "run a structural verification suite");
    std::string suite = "all";
    ver->add_option("suite", suite, "kernel | conservation | objectivity | anchor | counterexample | "
                                    "wb-balance | counting | stationarity | all");
    ver->add_option("--config", ver_o.config, "INI file");
    ver_o.add(ver, "seed", "random seed");
    ver_o.add(ver, "output", "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? gfq::kExitOk : gfq::kExitConfig;
    }

    try {
        if (*run) return gfq::cmd_run(build_config(run_o, run), std::cout, std::cerr);
        if (*conv) return gfq::cmd_convergence(build_config(conv_o, conv), std::cout, std::cerr);
        return gfq::cmd_verify(build_config(ver_o, ver), suite, std::cout, std::cerr);
    } catch (const gfq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return gfq::kExitConfig;
    }
}
