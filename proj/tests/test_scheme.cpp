#include <random>

#include "doctest.h"
#include "gfq/benchmark_cases.hpp"
#include "gfq/scheme.hpp"
#include "gfq/supg_stabilization.hpp"

using namespace gfq;

namespace {

const GasLaw gas;

MeshSpec periodic_mesh(int K, int n) {
    MeshSpec m;
    m.degree = K;
    m.n1 = m.n2 = n;
    m.length1 = 2.0;
    m.length2 = 1.5;
    m.periodic1 = m.periodic2 = true;
    return m;
}

NodalField smooth_state(const CartesianMesh& mesh) {
    NodalField W(mesh, 4);
    for (std::size_t a = 0; a < mesh.node_count(); ++a) {
        const auto x = mesh.node_coordinates(a);
        const PrimitiveState q{1.0 + 0.2 * std::sin(M_PI * x[0]), 0.3 * std::cos(4.0 * M_PI * x[1] / 3.0), -0.2,
                               1.0 + 0.1 * std::cos(M_PI * x[0])};
        Vec4::Map(W.node(a)) = to_conserved(q, gas);
    }
    return W;
}

}  // namespace

TEST_CASE("free stream gives a zero residual") {
    for (Scheme s : {Scheme::SupgStd, Scheme::SupgGfq})
        for (int K = 1; K <= 4; ++K) {
            CartesianMesh mesh(periodic_mesh(K, 3));
            NodalField W(mesh, 4);
            for (std::size_t a = 0; a < mesh.node_count(); ++a)
                Vec4::Map(W.node(a)) = to_conserved(PrimitiveState{1.3, 0.4, -0.7, 2.0}, gas);
            SpatialOperator op(mesh, gas, GravityField{}, SchemeOptions{s, false, 0.5});
            NodalField r(mesh, 4);
            op.residual(W, nullptr, r);
            for (double v : r.values()) CHECK(std::abs(v) < 1e-13);
        }
}

TEST_CASE("assembled residual is the scatter of element contributions") {
    CartesianMesh mesh(periodic_mesh(2, 3));
    const NodalField W = smooth_state(mesh);
    NodalField Wdot(mesh, 4);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> d(-1, 1);
    for (double& v : Wdot.values()) v = d(rng);
    for (Scheme s : {Scheme::SupgStd, Scheme::SupgGfq}) {
        SpatialOperator op(mesh, gas, GravityField{}, SchemeOptions{s, false, 0.5});
        NodalField r(mesh, 4), manual(mesh, 4);
        op.residual(W, &Wdot, r);
        Block w(36), wd(36);
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            gather_element(W, e, w);
            gather_element(Wdot, e, wd);
            const Block contrib = op.element_residual(e, w, &wd);
            NodalField tmp(mesh, 4);
            scatter_element(tmp, e, contrib);
            for (std::size_t q = 0; q < r.values().size(); ++q) manual.values()[q] += tmp.values()[q];
        }
        for (std::size_t q = 0; q < r.values().size(); ++q)
            CHECK(r.values()[q] == doctest::Approx(manual.values()[q]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("element contribution is G + P((M (x) M) Wdot + G)") {
    CartesianMesh mesh(periodic_mesh(3, 2));
    const NodalField W = smooth_state(mesh);
    for (Scheme s : {Scheme::SupgStd, Scheme::SupgGfq}) {
        SpatialOperator op(mesh, gas, GravityField{}, SchemeOptions{s, false, 0.5});
        Block w(64), wd(64);
        gather_element(W, 1, w);
        for (int q = 0; q < 64; ++q) wd[q] = 0.01 * (q % 7) - 0.02;
        const Block G = op.element_galerkin(1, w);
        Block F1(64), F2(64), S(64);
        op.element_fluxes(1, w.data(), F1.data(), F2.data(), S.data());
        const Block G_ref = s == Scheme::SupgGfq ? gfq_residual_from_fluxes(F1, F2, S, op.ops_x(), op.ops_y())
                                                 : standard_divergence_element(F1, F2, op.ops_x(), op.ops_y());
        for (int q = 0; q < 64; ++q) CHECK(G[q] == doctest::Approx(G_ref[q]).epsilon(1e-13).scale(1.0));
        const StabContext ctx = make_stab_context(w, op.ops_x(), op.ops_y(), gas);
        const Block pm = supg_mass_apply(wd, ctx), pg = stabilize(G, ctx);
        const Block full = op.element_residual(1, w, &wd);
        for (int q = 0; q < 64; ++q) CHECK(full[q] == doctest::Approx(G[q] + pm[q] + pg[q]).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("periodic residual sums to zero (conservation)") {
    CartesianMesh mesh(periodic_mesh(2, 4));
    const NodalField W = smooth_state(mesh);
    for (Scheme s : {Scheme::SupgStd, Scheme::SupgGfq}) {
        SpatialOperator op(mesh, gas, GravityField{}, SchemeOptions{s, false, 0.5});
        NodalField r(mesh, 4);
        op.residual(W, nullptr, r);
        Vec4 sum = Vec4::Zero();
        for (std::size_t a = 0; a < mesh.node_count(); ++a) sum += Eigen::Map<const Vec4>(r.node(a));
        CHECK(sum.cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("well-balanced GFQ residual vanishes on the isothermal equilibrium") {
    const CaseSpec c = case_isothermal_equilibrium(false);
    for (int K = 1; K <= 4; ++K) {
        CartesianMesh mesh(mesh_for(c, K, 5, 5));
        const NodalField W = initialize(mesh, c);
        SpatialOperator op(mesh, c.gas, c.gravity, SchemeOptions{Scheme::SupgGfq, true, 0.5});
        NodalField r(mesh, 4);
        op.residual(W, nullptr, r);
        for (double v : r.values()) CHECK(std::abs(v) < 1e-13);
        SpatialOperator plain(mesh, c.gas, c.gravity, SchemeOptions{Scheme::SupgGfq, false, 0.5});
        plain.residual(W, nullptr, r);
        double m = 0.0;
        for (double v : r.values()) m = std::max(m, std::abs(v));
        CHECK(m > 1e-10);
    }
}
