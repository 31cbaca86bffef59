#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "gfq/config.hpp"
#include "gfq/io.hpp"
#include "gfq/verification.hpp"

namespace gfq {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitRuntime = 2 };

struct ErrorSet {
    std::array<double, 4> l1{}, l2{}, linf{};
    std::array<double, 4> l2_relative{};
};

struct RunSummary {
    long steps = 0;
    double t = 0.0;
    double seconds = 0.0;
    std::array<double, 4> totals_initial{}, totals_final{};
    std::array<std::array<double, 2>, 4> range{};  // min/max of rho, u, v, p
    bool has_exact = false;
    ErrorSet conserved, primitive;
    std::vector<std::string> files;  // written artifacts, in order
};

// Runs one simulation, writing VTK snapshots (first, every `cadence` steps,
// last) and summary.json into the output directory.
RunSummary run_simulation(const RunConfig& cfg);
std::string summary_json(const RunConfig& cfg, const RunSummary& s);

// One row per mesh in cfg.meshes, relative L2 errors of the conserved
// variables at t_end. Writes convergence.csv.
std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg);

// Entry points used by the CLI: validate, run, report, map failures to exit codes.
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out, std::ostream& err);

}  // namespace gfq
