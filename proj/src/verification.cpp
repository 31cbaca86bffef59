#include "gfq/verification.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "gfq/benchmark_cases.hpp"
#include "gfq/dec_integrator.hpp"
#include "gfq/errors.hpp"
#include "gfq/gfq_operators.hpp"
#include "gfq/scheme.hpp"
#include "gfq/supg_stabilization.hpp"

namespace gfq {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

struct Ops {
    ElementOperators ox, oy;
};

Ops element_ops(const CartesianMesh& mesh) {
    const auto ref = build_element_operators(mesh.rule());
    return {scale_to_element(ref, mesh.h1()), scale_to_element(ref, mesh.h2())};
}

void fill_random(NodalField& f, Rng& rng) {
    for (double& v : f.values()) v = uniform(rng, -1.0, 1.0);
}

Vec4 random_conserved(Rng& rng, const GasLaw& gas) {
    PrimitiveState q{uniform(rng, 0.5, 2.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, 0.5, 2.0)};
    return to_conserved(q, gas);
}

Vec4 node_state(const NodalField& W, std::size_t a) { return Eigen::Map<const Vec4>(W.node(a)); }

Vec4 conserved_totals(const NodalField& W, const std::vector<double>& mass) {
    Vec4 t = Vec4::Zero();
    for (std::size_t a = 0; a < W.node_count(); ++a) t += mass[a] * node_state(W, a);
    return t;
}

// Orthonormal basis of the null space of A with the constant-per-component
// directions (s components per node) projected out.
Eigen::MatrixXd nonconstant_null_space(const Eigen::MatrixXd& A, int s) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    const Eigen::Index cols = A.cols();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    Eigen::MatrixXd null = svd.matrixV().rightCols(cols - rank);
    Eigen::MatrixXd constants = Eigen::MatrixXd::Zero(cols, s);
    for (Eigen::Index r = 0; r < cols; ++r) constants(r, r % s) = 1.0;
    constants.colwise().normalize();
    null -= constants * (constants.transpose() * null);
    Eigen::MatrixXd basis(cols, 0);
    for (Eigen::Index c = 0; c < null.cols(); ++c) {
        Eigen::VectorXd v = null.col(c);
        if (basis.cols()) v -= basis * (basis.transpose() * v);
        if (v.norm() > 1e-8) {
            basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
            basis.col(basis.cols() - 1) = v.normalized();
        }
    }
    return basis;
}

// Numerical rank with a relative cut.
int numerical_rank(const Eigen::MatrixXd& A) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-10);
    return static_cast<int>(lu.rank());
}

// Psi operator columns for one scalar component: Psi = A1 f1 + A2 f2.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> subcell_tables(const Ops& ops) {
    const int n = ops.ox.size(), nn = n * n;
    Eigen::MatrixXd A1(nn, nn), A2(nn, nn);
    Block unit(nn, 0.0), zero(nn, 0.0);
    for (int j = 0; j < nn; ++j) {
        unit.assign(nn, 0.0);
        unit[j] = 1.0;
        const Block a = subcell_residual(unit, zero, ops.ox, ops.oy, 1);
        const Block b = subcell_residual(zero, unit, ops.ox, ops.oy, 1);
        for (int r = 0; r < nn; ++r) {
            A1(r, j) = a[r];
            A2(r, j) = b[r];
        }
    }
    return {A1, A2};
}

MeshSpec small_mesh(int K, int n1, int n2, double l1, double l2, bool p1 = false, bool p2 = false) {
    MeshSpec m;
    m.degree = K;
    m.n1 = n1;
    m.n2 = n2;
    m.length1 = l1;
    m.length2 = l2;
    m.periodic1 = p1;
    m.periodic2 = p2;
    return m;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        char line[512];
        std::snprintf(line, sizeof line, "[%s] %-62s measured %.3e %s %.1e\n", c.passed() ? "PASS" : "FAIL",
                      (suite + ": " + c.name).c_str(), c.measured, c.must_exceed ? ">" : "<=", c.tolerance);
        os << line;
    }
    return os.str();
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"kernel",         "conservation", "objectivity", "anchor",
                                                  "counterexample", "wb-balance",   "counting",    "stationarity"};
    return ids;
}

SuiteReport run_suite(const std::string& id, std::uint64_t seed) {
    if (id == "kernel") return suite_kernel(seed);
    if (id == "conservation") return suite_conservation(seed);
    if (id == "objectivity") return suite_objectivity(seed);
    if (id == "anchor") return suite_anchor(seed);
    if (id == "counterexample") return suite_counterexample();
    if (id == "wb-balance") return suite_wb_balance();
    if (id == "counting") return suite_counting();
    if (id == "stationarity") return suite_stationarity();
    if (id == "all") {
        SuiteReport all{"all", {}};
        for (const auto& s : suite_ids()) {
            SuiteReport r = run_suite(s, seed);
            for (auto& c : r.checks) {
                c.name = s + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw ConfigError("unknown verification suite '" + id + "'");
}

SuiteReport suite_kernel(std::uint64_t seed, int draws) {
    Rng rng(seed);
    const GasLaw gas;
    double galerkin = 0.0, subcell = 0.0, stab = 0.0;
    for (int d = 0; d < draws; ++d) {
        const int K = 1 + d % 4;
        const int n1 = 2 + static_cast<int>(rng() % 2), n2 = 2 + static_cast<int>(rng() % 2);
        CartesianMesh mesh(small_mesh(K, n1, n2, uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0)));
        const Ops ops = element_ops(mesh);
        NodalField F1(mesh, 4), S(mesh, 4);
        fill_random(F1, rng);
        fill_random(S, rng);
        const NodalField F2 = kernel_synthesize(F1, S);
        const std::size_t len = static_cast<std::size_t>(mesh.nodes_per_element()) * 4;
        Block f1(len), f2(len), s(len), w(len);
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            gather_element(F1, e, f1);
            gather_element(F2, e, f2);
            gather_element(S, e, s);
            const ElementResidual r = gfq_residual_element(f1, f2, s, ops.ox, ops.oy);
            galerkin = std::max(galerkin, max_abs(r.galerkin));
            std::vector<double> sum(len);
            for (std::size_t q = 0; q < len; ++q) sum[q] = r.subcell[q] + r.source_primitive[q];
            subcell = std::max(subcell, max_abs(sum));
            for (std::size_t a = 0; a < len / 4; ++a) {
                const Vec4 W = random_conserved(rng, gas);
                for (int c = 0; c < 4; ++c) w[a * 4 + c] = W[c];
            }
            const StabContext ctx = make_stab_context(w, ops.ox, ops.oy, gas);
            stab = std::max(stab, max_abs(ST_h_element(f1, f2, s, ctx)));
        }
    }
    return {"kernel",
            {{"GFQ Galerkin residual on synthesized kernel data", galerkin, 1e-11},
             {"subcell identity Psi + S-potential", subcell, 1e-11},
             {"GFQ stabilization on synthesized kernel data", stab, 1e-11}}};
}

SuiteReport suite_conservation(std::uint64_t seed, int draws, long steps) {
    Rng rng(seed);
    const GasLaw gas;
    double defect = 0.0;
    for (int d = 0; d < draws; ++d) {
        const int K = 1 + d % 4;
        CartesianMesh mesh(small_mesh(K, 1, 1, uniform(rng, 0.2, 3.0), uniform(rng, 0.2, 3.0)));
        const int n = mesh.nodes_per_side();
        const std::size_t nn = static_cast<std::size_t>(n) * n;
        Block W(nn * 4);
        for (std::size_t a = 0; a < nn; ++a) {
            const Vec4 w = random_conserved(rng, gas);
            for (int c = 0; c < 4; ++c) W[a * 4 + c] = w[c];
        }
        const Ops ops = element_ops(mesh);
        // Boundary integral of F.n by (K+1)-point Gauss-Lobatto edge quadrature.
        Vec4 boundary = Vec4::Zero(), scale = Vec4::Zero();
        auto F = [&](int p, int k, int dir) { return flux(Vec4(Eigen::Map<const Vec4>(&W[(p + n * k) * 4])), dir, gas); };
        for (int k = 0; k < n; ++k) {
            const Vec4 r = F(n - 1, k, 1), l = F(0, k, 1);
            boundary += ops.oy.mass[k] * (r - l);
            scale += ops.oy.mass[k] * (r.cwiseAbs() + l.cwiseAbs());
        }
        for (int p = 0; p < n; ++p) {
            const Vec4 t = F(p, n - 1, 2), b = F(p, 0, 2);
            boundary += ops.ox.mass[p] * (t - b);
            scale += ops.ox.mass[p] * (t.cwiseAbs() + b.cwiseAbs());
        }
        for (Scheme sch : {Scheme::SupgStd, Scheme::SupgGfq}) {
            SchemeOptions opt;
            opt.scheme = sch;
            SpatialOperator op(mesh, gas, GravityField{}, opt);
            const Block phi = op.element_residual(0, W, nullptr);
            Vec4 sum = Vec4::Zero();
            for (std::size_t a = 0; a < nn; ++a) sum += Eigen::Map<const Vec4>(&phi[a * 4]);
            for (int c = 0; c < 4; ++c)
                defect = std::max(defect, std::abs(sum[c] - boundary[c]) / std::max(scale[c], 1e-300));
        }
    }

    double drift = 0.0;
    const CaseSpec c = case_moving_vortex();
    CartesianMesh mesh(mesh_for(c, 1, 16, 16));
    for (Scheme sch : {Scheme::SupgStd, Scheme::SupgGfq}) {
        NodalField W = initialize(mesh, c);
        SchemeOptions opt;
        opt.scheme = sch;
        SpatialOperator op(mesh, c.gas, c.gravity, opt);
        BoundaryConditions bc = boundary_for(c);
        bc.bind(W, c.gas);
        DecIntegrator dec(op, bc, DecConfig{});
        const Vec4 t0 = conserved_totals(W, op.mass());
        double t = 0.0;
        for (long s = 0; s < steps; ++s) {
            const double dt = compute_dt(W, c.gas, dec.cfl());
            dec.step(W, t, dt);
            t += dt;
        }
        const Vec4 t1 = conserved_totals(W, op.mass());
        for (int k = 0; k < 4; ++k) drift = std::max(drift, std::abs(t1[k] - t0[k]) / std::abs(t0[k]));
    }
    return {"conservation",
            {{"elemental sum of fluctuations vs boundary flux (relative)", defect, 1e-12},
             {"global totals drift over periodic run (relative)", drift, 1e-11}}};
}

SuiteReport suite_objectivity(std::uint64_t seed) {
    Rng rng(seed);
    double diff = 0.0;
    for (int K = 1; K <= 4; ++K)
        for (int per = 0; per < 3; ++per) {
            CartesianMesh mesh(small_mesh(K, 3, 2, uniform(rng, 0.5, 2.0), uniform(rng, 0.5, 2.0), per >= 1, per >= 2));
            NodalField F1(mesh, 4), F2(mesh, 4), S(mesh, 4);
            fill_random(F1, rng);
            fill_random(F2, rng);
            fill_random(S, rng);
            const NodalField local = assemble_divergence(F1, F2, &S, Scheme::SupgGfq);
            const NodalField global = assemble_from_potentials(compute_potentials_global(F1, F2, &S), mesh);
            std::vector<double> d(local.values().size());
            for (std::size_t q = 0; q < d.size(); ++q) d[q] = local.values()[q] - global.values()[q];
            diff = std::max(diff, max_abs(d) / std::max(1.0, max_abs(local.values())));
        }
    return {"objectivity", {{"local-anchor vs global-sweep GFQ assembly (relative)", diff, 1e-12}}};
}

SuiteReport suite_anchor(std::uint64_t seed) {
    Rng rng(seed);
    double pot = 0.0, univariate = 0.0, constant = 0.0;
    for (int K = 1; K <= 4; ++K)
        for (int draw = 0; draw < 25; ++draw) {
            auto ox = scale_to_element(build_element_operators(build_lobatto_rule(K)), uniform(rng, 0.2, 3.0));
            auto oy = scale_to_element(build_element_operators(build_lobatto_rule(K)), uniform(rng, 0.2, 3.0));
            const int n = K + 1;
            const std::size_t len = static_cast<std::size_t>(n) * n * 4;
            Block P(len), Q(len), out1(len), out2(len), tmp(len);
            for (double& v : P) v = uniform(rng, -1.0, 1.0);
            std::vector<double> f(n * 4), g(n * 4);
            for (double& v : f) v = uniform(rng, -1.0, 1.0);
            for (double& v : g) v = uniform(rng, -1.0, 1.0);
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int c = 0; c < 4; ++c)
                        Q[(p + n * k) * 4 + c] = P[(p + n * k) * 4 + c] + f[p * 4 + c] + g[k * 4 + c];
            kron_apply(ox.D, oy.D, P.data(), out1.data(), tmp.data(), n, 4);
            kron_apply(ox.D, oy.D, Q.data(), out2.data(), tmp.data(), n, 4);
            for (std::size_t q = 0; q < len; ++q) pot = std::max(pot, std::abs(out1[q] - out2[q]));

            // F1 + g(y), F2 + f(x): potentials shift by univariate functions.
            Block F1(len), F2(len), G1(len), G2(len), C(len);
            for (double& v : F1) v = uniform(rng, -1.0, 1.0);
            for (double& v : F2) v = uniform(rng, -1.0, 1.0);
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int c = 0; c < 4; ++c) {
                        G1[(p + n * k) * 4 + c] = F1[(p + n * k) * 4 + c] + g[k * 4 + c];
                        G2[(p + n * k) * 4 + c] = F2[(p + n * k) * 4 + c] + f[p * 4 + c];
                        C[(p + n * k) * 4 + c] = f[c];
                    }
            const Block a = gfq_divergence_element(F1, F2, ox, oy), b = gfq_divergence_element(G1, G2, ox, oy);
            for (std::size_t q = 0; q < len; ++q) univariate = std::max(univariate, std::abs(a[q] - b[q]));
            constant = std::max(constant, max_abs(gfq_divergence_element(C, C, ox, oy)));
        }
    return {"anchor",
            {{"(D1 (x) D2) invariant under f(x)+g(y) added to potentials", pot, 1e-12},
             {"GFQ divergence invariant under F1+g(y), F2+f(x)", univariate, 1e-12},
             {"GFQ divergence of constant fluxes", constant, 1e-12}}};
}

SuiteReport suite_counterexample() {
    // Linearized Euler at rest, K = 1, periodic 4 x 4 mesh.
    const GasLaw gas;
    const PrimitiveState rest{1.0, 0.0, 0.0, 1.0};
    const Vec4 W0 = to_conserved(rest, gas);
    const Mat4 J1 = jacobian(rest, 1, gas), J2 = jacobian(rest, 2, gas);
    CartesianMesh mesh(small_mesh(1, 4, 4, 1.0, 1.0, true, true));
    const Ops ops = element_ops(mesh);
    const int n = mesh.nodes_per_side();
    const std::size_t nn = static_cast<std::size_t>(n) * n, len = nn * 4;
    Block wrest(len);
    for (std::size_t a = 0; a < nn; ++a)
        for (int c = 0; c < 4; ++c) wrest[a * 4 + c] = W0[c];
    const StabContext ctx = make_stab_context(wrest, ops.ox, ops.oy, gas);

    const Eigen::Index N = static_cast<Eigen::Index>(mesh.node_count() * 4);
    const Eigen::Index rowsR = static_cast<Eigen::Index>(mesh.element_count() * len);
    Eigen::MatrixXd Adiv(N, N), Ast(N, N), Agfq(rowsR, N), Ast_gfq(N, N);
    Block dW(len), f1(len), f2(len), zero(len, 0.0);
    for (Eigen::Index j = 0; j < N; ++j) {
        NodalField unit(mesh, 4);
        unit.values()[j] = 1.0;
        NodalField div(mesh, 4), st(mesh, 4), st_gfq(mesh, 4);
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            gather_element(unit, e, dW);
            for (std::size_t a = 0; a < nn; ++a) {
                const Vec4 d = Eigen::Map<const Vec4>(&dW[a * 4]);
                Vec4::Map(&f1[a * 4]) = J1 * d;
                Vec4::Map(&f2[a * 4]) = J2 * d;
            }
            const Block g = standard_divergence_element(f1, f2, ops.ox, ops.oy);
            scatter_element(div, e, g);
            scatter_element(st, e, stabilize(g, ctx));
            const Block R = gfq_residual_from_fluxes(f1, f2, zero, ops.ox, ops.oy);
            for (std::size_t q = 0; q < len; ++q) Agfq(static_cast<Eigen::Index>(e * len + q), j) = R[q];
            scatter_element(st_gfq, e, stabilize(R, ctx));
        }
        for (Eigen::Index r = 0; r < N; ++r) {
            Adiv(r, j) = div.values()[r];
            Ast(r, j) = st.values()[r];
            Ast_gfq(r, j) = st_gfq.values()[r];
        }
    }
    const Eigen::MatrixXd Vstd = nonconstant_null_space(Adiv, 4);
    double st_norm = 0.0, div_norm = 0.0;
    for (Eigen::Index c = 0; c < Vstd.cols(); ++c) {
        const Eigen::VectorXd v = Vstd.col(c) / Vstd.col(c).cwiseAbs().maxCoeff();
        st_norm = std::max(st_norm, (Ast * v).cwiseAbs().maxCoeff());
        div_norm = std::max(div_norm, (Adiv * v).cwiseAbs().maxCoeff());
    }
    const Eigen::MatrixXd Vgfq = nonconstant_null_space(Agfq, 4);
    double ST_norm = 0.0;
    for (Eigen::Index c = 0; c < Vgfq.cols(); ++c) {
        const Eigen::VectorXd v = Vgfq.col(c) / Vgfq.col(c).cwiseAbs().maxCoeff();
        ST_norm = std::max(ST_norm, (Ast_gfq * v).cwiseAbs().maxCoeff());
    }
    return {"counterexample",
            {{"standard div_h on its non-constant kernel", div_norm, 1e-12},
             {"standard st_h on the div_h kernel (max over basis)", st_norm, 1e-6, true},
             {"GFQ non-constant kernel dimension", static_cast<double>(Vgfq.cols()), 0.0, true},
             {"GFQ ST_h on the GFQ kernel (max over basis)", ST_norm, 1e-12}}};
}

SuiteReport suite_wb_balance() {
    const CaseSpec c = case_isothermal_equilibrium(false);
    double residual = 0.0, change = 0.0, nonwb = 1e300;
    const int sizes[] = {8, 6, 4, 3};
    for (int K = 1; K <= 4; ++K) {
        CartesianMesh mesh(mesh_for(c, K, sizes[K - 1], sizes[K - 1]));
        for (bool wb : {true, false}) {
            NodalField W = initialize(mesh, c);
            SchemeOptions opt;
            opt.scheme = Scheme::SupgGfq;
            opt.well_balanced = wb;
            SpatialOperator op(mesh, c.gas, c.gravity, opt);
            NodalField r(mesh, 4);
            op.residual(W, nullptr, r);
            double m = 0.0;
            for (std::size_t a = 0; a < mesh.node_count(); ++a)
                for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(r(a, k)) / op.mass()[a]);
            if (!wb) {
                nonwb = std::min(nonwb, m);
                continue;
            }
            residual = std::max(residual, m);
            const NodalField W0 = W;
            BoundaryConditions bc = boundary_for(c);
            bc.bind(W, c.gas);
            DecIntegrator dec(op, bc, DecConfig{});
            double t = 0.0;
            for (int s = 0; s < 20; ++s) {
                const double dt = compute_dt(W, c.gas, dec.cfl());
                dec.step(W, t, dt);
                t += dt;
            }
            for (std::size_t q = 0; q < W.values().size(); ++q)
                change = std::max(change, std::abs(W.values()[q] - W0.values()[q]));
        }
    }
    return {"wb-balance",
            {{"GFQ (WB) nodal residual on isothermal equilibrium, K=1..4", residual, 1e-12},
             {"GFQ (WB) state change after 20 steps", change, 1e-12},
             {"GFQ (non-WB) residual is nonzero (sanity)", nonwb, 1e-10, true}}};
}

SuiteReport suite_counting() {
    SuiteReport rep{"counting", {}};
    // Scalar advection with velocity (a1, a2): one component per node.
    const double a1 = 1.0, a2 = 0.7;
    for (int K = 1; K <= 3; ++K)
        for (int N : {2, 3}) {
            CartesianMesh mesh(small_mesh(K, N, N, 1.0, 1.0));
            const Ops ops = element_ops(mesh);
            const auto [A1, A2] = subcell_tables(ops);
            const int n = mesh.nodes_per_side(), nn = n * n;
            const Eigen::Index cols = static_cast<Eigen::Index>(mesh.node_count());

            // GFQ kernel constraints Psi_pk = 0, p,k >= 1, scalar advection.
            Eigen::MatrixXd C = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(mesh.element_count()) * K * K, cols);
            Eigen::Index row = 0;
            for (std::size_t e = 0; e < mesh.element_count(); ++e) {
                const auto nodes = mesh.element_nodes(e);
                for (int k = 1; k < n; ++k)
                    for (int p = 1; p < n; ++p, ++row)
                        for (int j = 0; j < nn; ++j)
                            C(row, static_cast<Eigen::Index>(nodes[j])) += a1 * A1(p + n * k, j) + a2 * A2(p + n * k, j);
            }
            const int rank = numerical_rank(C);
            const double nullity = static_cast<double>(cols - rank);
            char name[128];
            std::snprintf(name, sizeof name, "GFQ kernel nullity K=%d N=%d (unknowns %lld, constraints %lld)", K, N,
                          static_cast<long long>(cols), static_cast<long long>(C.rows()));
            rep.checks.push_back({name, nullity, static_cast<double>(2 * K * N), true});

            std::snprintf(name, sizeof name, "GFQ kernel constraint rank K=%d N=%d vs K^2 N^2", K, N);
            rep.checks.push_back({name, static_cast<double>(rank), static_cast<double>(K * K * N * N)});
        }
    return rep;
}

double kernel_defect(const NodalField& W, const GasLaw& gas) {
    const CartesianMesh& mesh = W.mesh();
    const Ops ops = element_ops(mesh);
    const std::size_t len = static_cast<std::size_t>(mesh.nodes_per_element()) * 4;
    Block w(len), f1(len), f2(len);
    double m = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        gather_element(W, e, w);
        for (std::size_t a = 0; a < len / 4; ++a) {
            const Vec4 s = Eigen::Map<const Vec4>(&w[a * 4]);
            Vec4::Map(&f1[a * 4]) = flux(s, 1, gas);
            Vec4::Map(&f2[a * 4]) = flux(s, 2, gas);
        }
        m = std::max(m, max_abs(subcell_residual(f1, f2, ops.ox, ops.oy)));
    }
    return m;
}

double project_to_kernel(NodalField& W, const GasLaw& gas, int max_iterations, double tol) {
    const CartesianMesh& mesh = W.mesh();
    if (mesh.periodic1() || mesh.periodic2()) throw InvalidGeometry("kernel projection requires a non-periodic mesh");
    const Ops ops = element_ops(mesh);
    const auto [A1, A2] = subcell_tables(ops);
    const int n = mesh.nodes_per_side(), nn = n * n, K = mesh.degree();
    const Eigen::Index rows = static_cast<Eigen::Index>(mesh.element_count()) * K * K * 4;
    const Eigen::Index cols = static_cast<Eigen::Index>(mesh.node_count()) * 4;
    double defect = kernel_defect(W, gas);
    for (int it = 0; it < max_iterations && defect > tol; ++it) {
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(rows, cols);
        Eigen::VectorXd R = Eigen::VectorXd::Zero(rows);
        Eigen::Index row = 0;
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            const auto nodes = mesh.element_nodes(e);
            std::vector<Vec4> F1(nn), F2(nn);
            std::vector<Mat4> J1(nn), J2(nn);
            for (int j = 0; j < nn; ++j) {
                const Vec4 s = node_state(W, nodes[j]);
                F1[j] = flux(s, 1, gas);
                F2[j] = flux(s, 2, gas);
                J1[j] = jacobian(s, {1.0, 0.0}, gas);
                J2[j] = jacobian(s, {0.0, 1.0}, gas);
            }
            for (int k = 1; k < n; ++k)
                for (int p = 1; p < n; ++p) {
                    const int r = p + n * k;
                    for (int j = 0; j < nn; ++j) {
                        const Eigen::Index col = static_cast<Eigen::Index>(nodes[j]) * 4;
                        R.segment<4>(row) += A1(r, j) * F1[j] + A2(r, j) * F2[j];
                        J.block<4, 4>(row, col) += A1(r, j) * J1[j] + A2(r, j) * J2[j];
                    }
                    row += 4;
                }
        }
        const Eigen::VectorXd dW = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(J).solve(-R);
        for (Eigen::Index q = 0; q < cols; ++q) W.values()[q] += dW(q);
        defect = kernel_defect(W, gas);
    }
    return defect;
}

SuiteReport suite_stationarity(long steps) {
    SuiteReport rep{"stationarity", {}};
    const CaseSpec vortex = case_steady_vortex();
    const GasLaw gas = vortex.gas;
    struct Setup {
        int K, N;
    };
    for (const Setup su : {Setup{1, 6}, Setup{2, 4}}) {
        MeshSpec spec = small_mesh(su.K, su.N, su.N, 4.0, 4.0);
        spec.x0 = spec.y0 = 3.0;
        CartesianMesh mesh(spec);
        NodalField W(mesh, 4);
        for (std::size_t a = 0; a < mesh.node_count(); ++a) {
            const auto x = mesh.node_coordinates(a);
            Eigen::Map<Vec4>(W.node(a)) = to_conserved(vortex.initial(x[0], x[1]), gas);
        }
        const double defect = project_to_kernel(W, gas);
        char name[128];
        std::snprintf(name, sizeof name, "K=%d N=%d projection defect", su.K, su.N);
        rep.checks.push_back({name, defect, 1e-13});
        for (Scheme sch : {Scheme::SupgGfq, Scheme::SupgStd}) {
            NodalField X = W;
            SchemeOptions opt;
            opt.scheme = sch;
            SpatialOperator op(mesh, gas, GravityField{}, opt);
            BoundaryConditions bc(BcType::Dirichlet, BcType::Dirichlet);
            bc.bind(X, gas);
            DecIntegrator dec(op, bc, DecConfig{});
            double t = 0.0;
            for (long s = 0; s < steps; ++s) {
                const double dt = compute_dt(X, gas, dec.cfl());
                dec.step(X, t, dt);
                t += dt;
            }
            double change = 0.0;
            for (std::size_t q = 0; q < X.values().size(); ++q)
                change = std::max(change, std::abs(X.values()[q] - W.values()[q]));
            std::snprintf(name, sizeof name, "K=%d N=%d %s max change after %ld steps", su.K, su.N,
                          sch == Scheme::SupgGfq ? "GFQ" : "SUPG-Std", steps);
            if (sch == Scheme::SupgGfq) rep.checks.push_back({name, change, 1e-11});
            else rep.checks.push_back({name, change, 1e-6, true});
        }
    }
    return rep;
}

}  // namespace gfq
