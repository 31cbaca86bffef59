#include "gfq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "json.hpp"

#include "gfq/benchmark_cases.hpp"
#include "gfq/dec_integrator.hpp"
#include "gfq/errors.hpp"
#include "gfq/fv_baseline.hpp"

namespace gfq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CaseSpec case_for(const RunConfig& cfg) {
    CaseSpec c = make_case(cfg.case_id, cfg.mach);
    if (cfg.t_end >= 0.0) c.t_end = cfg.t_end;
    return c;
}

MeshSpec mesh_for_config(const RunConfig& cfg, const CaseSpec& c, int n1, int n2) {
    return mesh_for(c, cfg.degree, n1 > 0 ? n1 : c.default_n1, n2 > 0 ? n2 : c.default_n2);
}

std::string snapshot_name(const RunConfig& cfg, long step) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s_%s_%06ld.vtk", cfg.case_id.c_str(), to_string(cfg.scheme).c_str(), step);
    return buf;
}

struct RangeTracker {
    std::array<std::array<double, 2>, 4> r;
    RangeTracker() {
        for (auto& x : r) x = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    }
    void add(const PrimitiveState& q) {
        const double v[4] = {q.rho, q.u, q.v, q.p};
        for (int c = 0; c < 4; ++c) {
            r[c][0] = std::min(r[c][0], v[c]);
            r[c][1] = std::max(r[c][1], v[c]);
        }
    }
};

std::array<double, 4> nodal_totals(const NodalField& W) {
    const auto mass = lumped_mass_diagonal(W.mesh());
    std::array<double, 4> t{};
    for (std::size_t a = 0; a < W.node_count(); ++a)
        for (int c = 0; c < 4; ++c) t[c] += mass[a] * W(a, c);
    return t;
}

std::array<double, 4> cell_totals(const CellAverageField& U) {
    std::array<double, 4> t{};
    for (std::size_t q = 0; q < U.values.size(); ++q) t[q % 4] += U.h1 * U.h2 * U.values[q];
    return t;
}

// Cell-average error norms; primitive values are those of the averages.
void cell_errors(const CellAverageField& U, const CellAverageField& E, const GasLaw& gas, ErrorSet& cons,
                 ErrorSet& prim) {
    std::array<double, 4> n2c{}, n2p{};
    const double area = U.h1 * U.h2;
    for (std::size_t cell = 0; cell < U.values.size() / 4; ++cell) {
        const Vec4 w = Eigen::Map<const Vec4>(&U.values[cell * 4]);
        const Vec4 e = Eigen::Map<const Vec4>(&E.values[cell * 4]);
        const PrimitiveState qw = to_primitive(w, gas), qe = to_primitive(e, gas);
        const double pw[4] = {qw.rho, qw.u, qw.v, qw.p}, pe[4] = {qe.rho, qe.u, qe.v, qe.p};
        for (int c = 0; c < 4; ++c) {
            const double dc = std::abs(w[c] - e[c]), dp = std::abs(pw[c] - pe[c]);
            cons.l1[c] += area * dc;
            cons.l2[c] += area * dc * dc;
            cons.linf[c] = std::max(cons.linf[c], dc);
            n2c[c] += area * e[c] * e[c];
            prim.l1[c] += area * dp;
            prim.l2[c] += area * dp * dp;
            prim.linf[c] = std::max(prim.linf[c], dp);
            n2p[c] += area * pe[c] * pe[c];
        }
    }
    for (int c = 0; c < 4; ++c) {
        cons.l2[c] = std::sqrt(cons.l2[c]);
        prim.l2[c] = std::sqrt(prim.l2[c]);
        cons.l2_relative[c] = n2c[c] > 0.0 ? cons.l2[c] / std::sqrt(n2c[c]) : cons.l2[c];
        prim.l2_relative[c] = n2p[c] > 0.0 ? prim.l2[c] / std::sqrt(n2p[c]) : prim.l2[c];
    }
}

void nodal_errors(const NodalField& W, const CaseSpec& c, double t, ErrorSet& cons, ErrorSet& prim) {
    cons.l1 = error_norms(W, c.exact, t, c.gas, 1);
    cons.l2 = error_norms(W, c.exact, t, c.gas, 2);
    cons.linf = error_norms(W, c.exact, t, c.gas, 0);
    prim.l1 = primitive_error_norms(W, c.exact, t, c.gas, 1);
    prim.l2 = primitive_error_norms(W, c.exact, t, c.gas, 2);
    prim.linf = primitive_error_norms(W, c.exact, t, c.gas, 0);
    const auto ref = exact_norms(W.mesh(), c.exact, t, c.gas, 2);
    for (int k = 0; k < 4; ++k) {
        cons.l2_relative[k] = ref[k] > 0.0 ? cons.l2[k] / ref[k] : cons.l2[k];
        prim.l2_relative[k] = prim.l2[k];
    }
}

RunSummary run_fv(const RunConfig& cfg, const CaseSpec& c, const MeshSpec& ms,
                  const std::filesystem::path& dir) {
    RunSummary s;
    const auto t0 = Clock::now();
    CellAverageField U = project_cell_averages(ms, c.initial, c.gas);
    FvSolver fv(ms, c.gas, c.gravity, c.bc_x, c.bc_y, c.boundary);
    fv.bind(U);
    s.totals_initial = cell_totals(U);
    auto snapshot = [&](long step) {
        if (dir.empty()) return;
        const auto path = dir / snapshot_name(cfg, step);
        write_file_atomic(path, vtk_cells(U, c.gas, c.id + " t=" + std::to_string(s.t)));
        s.files.push_back(path.string());
    };
    snapshot(0);
    while (s.t < c.t_end) {
        double dt = fv.compute_dt(U, cfg.cfl);
        bool last = false;
        if (c.t_end - s.t <= dt * (1.0 + 1e-12)) {
            dt = c.t_end - s.t;
            last = true;
        }
        fv.step(U, s.t, dt);
        s.t = last ? c.t_end : s.t + dt;
        ++s.steps;
        if ((cfg.cadence > 0 && s.steps % cfg.cadence == 0) || last) snapshot(s.steps);
    }
    s.seconds = seconds_since(t0);
    s.totals_final = cell_totals(U);
    RangeTracker range;
    for (std::size_t q = 0; q < U.values.size(); q += 4)
        range.add(to_primitive(Vec4(Eigen::Map<const Vec4>(&U.values[q])), c.gas));
    s.range = range.r;
    if (c.exact) {
        s.has_exact = true;
        const auto E = project_cell_averages(ms, [&](double x, double y) { return c.exact(x, y, s.t); }, c.gas);
        cell_errors(U, E, c.gas, s.conserved, s.primitive);
    }
    return s;
}

RunSummary run_supg(const RunConfig& cfg, const CaseSpec& c, const MeshSpec& ms, const std::filesystem::path& dir) {
    RunSummary s;
    const auto t0 = Clock::now();
    CartesianMesh mesh(ms);
    NodalField W = initialize(mesh, c);
    SchemeOptions opt;
    opt.scheme = cfg.scheme;
    opt.well_balanced = cfg.well_balanced;
    opt.tau_scale = cfg.tau_scale;
    SpatialOperator op(mesh, c.gas, c.gravity, opt);
    BoundaryConditions bc = boundary_for(c);
    bc.bind(W, c.gas);
    DecConfig dc;
    dc.cfl = cfg.cfl;
    DecIntegrator dec(op, bc, dc);
    s.totals_initial = nodal_totals(W);
    auto snapshot = [&](const NodalField& X, double t, long step) {
        if (dir.empty()) return;
        const auto path = dir / snapshot_name(cfg, step);
        write_file_atomic(path, vtk_nodal(X, c.gas, c.id + " t=" + std::to_string(t)));
        s.files.push_back(path.string());
    };
    snapshot(W, 0.0, 0);
    EvolveResult res = evolve(W, 0.0, c.t_end, dec, snapshot, cfg.cadence);
    s.seconds = seconds_since(t0);
    s.steps = res.steps;
    s.t = res.t;
    s.totals_final = nodal_totals(res.W);
    RangeTracker range;
    for (std::size_t a = 0; a < res.W.node_count(); ++a)
        range.add(to_primitive(Vec4(Eigen::Map<const Vec4>(res.W.node(a))), c.gas));
    s.range = range.r;
    if (c.exact) {
        s.has_exact = true;
        nodal_errors(res.W, c, res.t, s.conserved, s.primitive);
    }
    return s;
}

nlohmann::json to_json(const ErrorSet& e) {
    return {{"l1", e.l1}, {"l2", e.l2}, {"linf", e.linf}, {"l2_relative", e.l2_relative}};
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const UnsupportedDegree& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const AdmissibilityError& e) {
        err << "runtime failure: " << e.what();
        if (!std::isnan(e.x())) err << " at (" << e.x() << ", " << e.y() << ")";
        err << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

RunSummary run_simulation(const RunConfig& cfg) {
    validate(cfg);
    const CaseSpec c = case_for(cfg);
    const MeshSpec ms = mesh_for_config(cfg, c, cfg.n1, cfg.n2);
    const auto dir = output_directory(cfg);
    RunSummary s = cfg.scheme == Scheme::FvHllc ? run_fv(cfg, c, ms, dir) : run_supg(cfg, c, ms, dir);
    const auto path = dir / "summary.json";
    write_file_atomic(path, summary_json(cfg, s));
    s.files.push_back(path.string());
    return s;
}

std::string summary_json(const RunConfig& cfg, const RunSummary& s) {
    const CaseSpec c = case_for(cfg);
    nlohmann::json j;
    j["case"] = cfg.case_id;
    j["scheme"] = to_string(cfg.scheme);
    j["k"] = cfg.degree;
    j["n1"] = cfg.n1 > 0 ? cfg.n1 : c.default_n1;
    j["n2"] = cfg.n2 > 0 ? cfg.n2 : c.default_n2;
    j["cfl"] = cfg.cfl;
    j["wb"] = cfg.well_balanced;
    j["mach"] = cfg.mach;
    j["t_end"] = c.t_end;
    j["t"] = s.t;
    j["steps"] = s.steps;
    j["seconds"] = s.seconds;
    std::array<double, 4> drift{};
    for (int k = 0; k < 4; ++k) {
        const double ref = std::abs(s.totals_initial[k]);
        drift[k] = ref > 0.0 ? std::abs(s.totals_final[k] - s.totals_initial[k]) / ref
                             : std::abs(s.totals_final[k] - s.totals_initial[k]);
    }
    j["totals"] = {{"initial", s.totals_initial}, {"final", s.totals_final}, {"relative_drift", drift}};
    const char* names[4] = {"rho", "u", "v", "p"};
    for (int k = 0; k < 4; ++k) j["range"][names[k]] = s.range[k];
    if (s.has_exact) j["errors"] = {{"conserved", to_json(s.conserved)}, {"primitive", to_json(s.primitive)}};
    return j.dump(2) + "\n";
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.meshes.empty()) throw ConfigError("convergence needs a mesh list (meshes = 10,20,40)");
    const CaseSpec c = case_for(cfg);
    if (!c.exact) throw ConfigError("case '" + cfg.case_id + "' has no exact solution");
    std::vector<ConvergenceRow> rows;
    for (int n : cfg.meshes) {
        const MeshSpec ms = mesh_for_config(cfg, c, n, n);
        ConvergenceRow row;
        row.n = n;
        const RunSummary s = cfg.scheme == Scheme::FvHllc ? run_fv(cfg, c, ms, {}) : run_supg(cfg, c, ms, {});
        row.err = s.conserved.l2_relative;
        row.seconds = s.seconds;
        rows.push_back(row);
    }
    fill_eoa(rows);
    write_file_atomic(output_directory(cfg) / "convergence.csv", convergence_csv(rows));
    return rows;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunSummary s = run_simulation(cfg);
        out << summary_json(cfg, s);
        return kExitOk;
    });
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        out << convergence_csv(run_convergence(cfg));
        return kExitOk;
    });
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SuiteReport rep = run_suite(suite, cfg.seed);
        const std::string text = rep.text();
        write_file_atomic(output_directory(cfg) / ("verify_" + suite + ".txt"), text);
        out << text;
        return rep.passed() ? kExitOk : kExitRuntime;
    });
}

}  // namespace gfq
