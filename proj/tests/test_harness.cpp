#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gfq/harness.hpp"
#include "json.hpp"

using namespace gfq;

namespace {
RunConfig config_in(const std::string& name) {
    RunConfig cfg;
    const auto dir = std::filesystem::temp_directory_path() / ("gfq_harness_" + name);
    std::filesystem::remove_all(dir);
    cfg.output = dir.string();
    return cfg;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("zero-duration run echoes the initial field") {
    RunConfig cfg = config_in("zero");
    cfg.case_id = "moving-vortex";
    cfg.n1 = cfg.n2 = 6;
    cfg.t_end = 0.0;
    const RunSummary s = run_simulation(cfg);
    CHECK(s.steps == 0);
    CHECK(s.has_exact);
    for (double e : s.conserved.linf) CHECK(e == 0.0);
    REQUIRE(s.files.size() == 2);
    CHECK(std::filesystem::exists(s.files[0]));
    const auto j = nlohmann::json::parse(slurp(std::filesystem::path(cfg.output) / "summary.json"));
    CHECK(j["steps"] == 0);
    CHECK(j["totals"]["initial"] == j["totals"]["final"]);
}

TEST_CASE("hydrostatic well-balanced run keeps the equilibrium") {
    RunConfig cfg = config_in("hydro");
    cfg.case_id = "hydrostatic";
    cfg.well_balanced = true;
    cfg.n1 = cfg.n2 = 10;
    cfg.t_end = 0.1;
    cfg.cadence = 10;
    const RunSummary s = run_simulation(cfg);
    for (double e : s.primitive.l1) CHECK(e <= 1e-12);
    CHECK(s.files.size() >= 3);
}

TEST_CASE("runs are reproducible bit for bit") {
    RunConfig a = config_in("repro_a"), b = config_in("repro_b");
    for (RunConfig* c : {&a, &b}) {
        c->case_id = "moving-vortex";
        c->degree = 2;
        c->n1 = c->n2 = 5;
        c->t_end = 0.2;
    }
    const RunSummary sa = run_simulation(a);
    run_simulation(b);
    CHECK(sa.steps > 1);
    int compared = 0;
    for (const auto& e : std::filesystem::directory_iterator(a.output)) {
        if (e.path().extension() != ".vtk") continue;
        CHECK(slurp(e.path()) == slurp(std::filesystem::path(b.output) / e.path().filename()));
        ++compared;
    }
    CHECK(compared == 2);
}

TEST_CASE("finite-volume runs write cell snapshots") {
    RunConfig cfg = config_in("fv");
    cfg.case_id = "moving-vortex";
    cfg.scheme = Scheme::FvHllc;
    cfg.n1 = cfg.n2 = 10;
    cfg.t_end = 0.1;
    const RunSummary s = run_simulation(cfg);
    CHECK(s.steps > 0);
    CHECK(s.conserved.l2_relative[0] < 0.05);
    CHECK(slurp(s.files.front()).find("DIMENSIONS 10 10 1") != std::string::npos);
}

TEST_CASE("convergence study with exact initialization gives zero errors and empty EOA") {
    RunConfig cfg = config_in("conv");
    cfg.case_id = "moving-vortex";
    cfg.meshes = {4, 8};
    cfg.t_end = 0.0;
    const auto rows = run_convergence(cfg);
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows)
        for (int c = 0; c < 4; ++c) {
            CHECK(r.err[c] == 0.0);
            CHECK_FALSE(r.eoa[c].has_value());
        }
    CHECK(std::filesystem::exists(std::filesystem::path(cfg.output) / "convergence.csv"));
}

TEST_CASE("exit codes") {
    std::ostringstream out, err;
    RunConfig bad = config_in("bad");
    bad.case_id = "kelvin-helmholtz";
    bad.well_balanced = true;
    CHECK(cmd_run(bad, out, err) == kExitConfig);
    RunConfig noexact = config_in("noexact");
    noexact.case_id = "kelvin-helmholtz";
    noexact.meshes = {4};
    CHECK(cmd_convergence(noexact, out, err) == kExitConfig);
    RunConfig blow = config_in("blow");
    blow.case_id = "moving-vortex";
    blow.n1 = blow.n2 = 4;
    blow.cfl = 50.0;
    blow.t_end = 20.0;
    CHECK(cmd_run(blow, out, err) == kExitRuntime);
    CHECK(err.str().find("runtime failure") != std::string::npos);
    RunConfig ok = config_in("verify");
    CHECK(cmd_verify(ok, "anchor", out, err) == kExitOk);
    CHECK(cmd_verify(ok, "nope", out, err) == kExitConfig);
}
