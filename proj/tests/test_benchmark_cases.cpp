#include <cmath>

#include "doctest.h"
#include "gfq/benchmark_cases.hpp"
#include "gfq/errors.hpp"

using namespace gfq;

TEST_CASE("isentropic vortex") {
    const CaseSpec c = case_steady_vortex();
    const PrimitiveState far = c.initial(5.0 + 4.9, 5.0 + 4.9);
    CHECK(far.rho == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(far.p == doctest::Approx(1.0).epsilon(1e-6));
    const double T0 = 1.0 - 0.4 * 25.0 * std::exp(1.0) / (8.0 * 1.4 * M_PI * M_PI);
    CHECK(T0 == doctest::Approx(0.754090).epsilon(1e-5));
    const PrimitiveState centre = c.initial(5.0, 5.0);
    CHECK(centre.p / centre.rho == doctest::Approx(T0).epsilon(1e-14));
    CHECK(centre.u == 0.0);
    const double M = 0.01;
    CHECK(vortex_strength_for_mach(M) == doctest::Approx(2.0 * M_PI * M * std::sqrt(1.4 / (1.0 + 0.2 * M * M))).epsilon(1e-15));
    CHECK_THROWS_AS(case_steady_vortex(1.5), ConfigError);
}

TEST_CASE("moving vortex translates with periodic wrap") {
    const CaseSpec c = case_moving_vortex();
    const PrimitiveState a = c.exact(3.0, 4.0, 0.0), b = c.exact(3.0 + 12.0 - 10.0, 4.0 + 12.0 - 10.0, 12.0);
    CHECK(b.rho == doctest::Approx(a.rho).epsilon(1e-13));
    CHECK(b.u == doctest::Approx(a.u).epsilon(1e-13));
}

TEST_CASE("Kelvin-Helmholtz profile") {
    CHECK(kelvin_helmholtz_profile(0.0) == -1.0);
    CHECK(kelvin_helmholtz_profile(0.45) == 1.0);
    const double w = 1.0 / 16.0;
    CHECK(-std::sin(M_PI / w * (-0.25 + 0.5 * w + 0.25)) == doctest::Approx(-1.0));
    const CaseSpec c = case_kelvin_helmholtz();
    double lo = 1e9, hi = -1e9;
    for (int i = 0; i <= 400; ++i) {
        const double y = -0.5 + i / 400.0;
        const double rho = c.initial(0.3, y).rho;
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
    }
    CHECK(lo == doctest::Approx(1.399));
    CHECK(hi == doctest::Approx(1.401));
}

TEST_CASE("isothermal equilibrium") {
    const CaseSpec c = case_isothermal_equilibrium(false);
    CHECK(c.initial(0.0, 0.0).rho == doctest::Approx(1.21));
    CHECK(c.initial(1.0, 1.0).p == doctest::Approx(std::exp(-2.0 * 1.21)).epsilon(1e-14));
    CHECK(c.initial(1.0, 1.0).p == doctest::Approx(0.0889).epsilon(1e-3));
    const CaseSpec pert = case_isothermal_equilibrium(true);
    CHECK(pert.initial(0.3, 0.3).p - c.initial(0.3, 0.3).p == doctest::Approx(2e-5).epsilon(1e-9));
    CHECK_FALSE(static_cast<bool>(pert.exact));
}

TEST_CASE("Rayleigh-Taylor layering") {
    const double r0 = 0.5, alpha = std::exp(-r0) / (std::exp(-r0) + 0.1);
    CHECK(alpha == doctest::Approx(0.85845).epsilon(1e-5));
    const CaseSpec c = case_rayleigh_taylor();
    // Pressure continuous across r0 along a ray where the interface sits at r0(1+eta cos(k theta)).
    const double th = M_PI / 40.0;  // cos(20 th) = 0, interface at r0
    const PrimitiveState in = c.initial((r0 - 1e-9) * std::cos(th), (r0 - 1e-9) * std::sin(th));
    const PrimitiveState out = c.initial((r0 + 1e-9) * std::cos(th), (r0 + 1e-9) * std::sin(th));
    CHECK(in.p == doctest::Approx(out.p).epsilon(1e-8));
    const double jump = (1.0 / alpha - 1.0) * std::exp(-r0 / alpha + r0 * (1 - alpha) / alpha);
    CHECK(out.rho - in.rho == doctest::Approx(jump).epsilon(1e-7));
    CHECK(jump == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("thermal bubble") {
    const CaseSpec c = case_thermal_bubble();
    CHECK(c.gas.R == doctest::Approx(287.0).epsilon(1e-3));
    const PrimitiveState base = c.initial(0.0, 0.0);
    CHECK(base.rho == doctest::Approx(1.1612055).epsilon(1e-12));
    CHECK(base.p == doctest::Approx(1e5));
    // Potential temperature theta = T (p0/p)^{R/cp}.
    auto theta = [&](double x, double y) {
        const PrimitiveState q = c.initial(x, y);
        return q.p / (q.rho * c.gas.R) * std::pow(1e5 / q.p, (c.gas.gamma - 1.0) / c.gas.gamma);
    };
    CHECK(theta(500.0, 350.0) - 300.0 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(theta(500.0, 600.0) - 300.0 == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("shock-vortex states") {
    const double Ms2 = 1.21;
    CHECK(2.4 * Ms2 / (0.4 * Ms2 + 2.0) == doctest::Approx(1.16908).epsilon(1e-5));
    const CaseSpec c = case_shock_vortex();
    CHECK(c.initial(1.5, 0.5).rho == doctest::Approx(2.4 * Ms2 / (0.4 * Ms2 + 2.0)).epsilon(1e-14));
    CompositeVortex v;
    CHECK(v.vm == doctest::Approx(1.06489).epsilon(1e-5));
    CHECK(v.v_theta(v.a) == doctest::Approx(v.vm));
    CHECK(v.v_theta(v.b) == doctest::Approx(0.0).scale(1.0));
    CHECK(v.temperature(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    // Radial equilibrium with isentropic relations: dT/dr = (gamma-1)/gamma v^2 / r.
    const double g = v.gamma;
    // Simpson on each smooth piece, [a, b] then [r_lo, a].
    auto rhs = [&](double r) { return (g - 1.0) / g * v.v_theta(r) * v.v_theta(r) / r; };
    auto simpson = [&](double lo, double hi, int steps) {
        const double h = (hi - lo) / steps;
        double s = 0.0;
        for (int i = 0; i < steps; ++i) {
            const double r = lo + i * h;
            s += h / 6.0 * (rhs(r) + 4.0 * rhs(r + 0.5 * h) + rhs(r + h));
        }
        return s;
    };
    const double r_lo = 1e-3;
    const double T = 1.0 - simpson(v.a, v.b, 20000) - simpson(r_lo, v.a, 20000);
    CHECK(v.temperature(r_lo) == doctest::Approx(T).epsilon(1e-10));
}

TEST_CASE("initializers are admissible on a probe grid") {
    for (const auto& id : case_ids()) {
        const CaseSpec c = make_case(id);
        for (int i = 0; i <= 400; i += 4)
            for (int j = 0; j <= 400; j += 4) {
                const PrimitiveState q = c.initial(c.x0 + c.length1 * i / 400.0, c.y0 + c.length2 * j / 400.0);
                CHECK((q.rho > 0.0 && q.p > 0.0));
            }
    }
    CHECK_THROWS_AS(make_case("nope"), ConfigError);
}

TEST_CASE("error norms") {
    const CaseSpec c = case_moving_vortex();
    CartesianMesh mesh(mesh_for(c, 2, 4, 4));
    const NodalField W = initialize(mesh, c);
    for (int p : {0, 1, 2})
        for (double e : error_norms(W, c.exact, 0.0, c.gas, p)) CHECK(e < 1e-14);
    MeshSpec unit;
    unit.degree = 3;
    unit.n1 = unit.n2 = 2;
    CartesianMesh um(unit);
    NodalField X(um, 4);
    const StateFunction one = [](double, double, double) { return PrimitiveState{1.0, 0, 0, 1.0}; };
    for (std::size_t a = 0; a < um.node_count(); ++a) {
        Vec4::Map(X.node(a)) = to_conserved(PrimitiveState{1.0, 0, 0, 1.0}, GasLaw{});
        X(a, 0) += 0.25;
    }
    CHECK(error_norms(X, one, 0.0, GasLaw{}, 2)[0] == doctest::Approx(0.25));
    CHECK(eoa(4.0, 1.0) == doctest::Approx(2.0));
    CHECK_THROWS(error_norms(X, StateFunction{}, 0.0, GasLaw{}, 2));
}

TEST_CASE("interpolation error of the exact vortex converges at order K+1") {
    const CaseSpec c = case_moving_vortex();
    for (int K = 1; K <= 3; ++K) {
        double prev = 0.0;
        for (int n : {16, 32}) {
            CartesianMesh mesh(mesh_for(c, K, n, n));
            const NodalField W = initialize(mesh, c);
            // Compare the nodal interpolant against the exact field off the nodes.
            double err = 0.0;
            const auto phi = lagrange_values(mesh.rule(), 0.3);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    double v = 0.0;
                    for (int k = 0; k <= K; ++k)
                        for (int p = 0; p <= K; ++p) v += phi[p] * phi[k] * W(mesh.local_to_global(i, j, p, k), 0);
                    const double x = mesh.coordinate1(i, 0) + 0.3 * mesh.h1(), y = mesh.coordinate2(j, 0) + 0.3 * mesh.h2();
                    err = std::max(err, std::abs(v - c.exact(x, y, 0.0).rho));
                }
            if (prev > 0.0) CHECK(std::log2(prev / err) > K + 1 - 0.5);
            prev = err;
        }
    }
}
