#include <cmath>
#include <vector>

#include "doctest.h"
#include "gfq/wb_gravity.hpp"

using namespace gfq;

TEST_CASE("kappa") {
    const WbReference ref{1.0, 1.21};
    CHECK(kappa(1.0, 0.0, ref) == 0.0);
    for (double phi : {0.0, 0.3, 1.7}) {
        const double rho = 1.21 * std::exp(-1.21 * phi);
        CHECK(kappa(rho, phi, ref) == doctest::Approx(std::log(1.21)).epsilon(1e-14));
    }
    CHECK(kappa(2.0, 0.5, ref) > kappa(1.9, 0.5, ref));
}

TEST_CASE("constant potential gives no source") {
    for (int K = 1; K <= 4; ++K) {
        const auto ox = scale_to_element(build_element_operators(build_lobatto_rule(K)), 0.3);
        const int m = (K + 1) * (K + 1);
        std::vector<double> rho(m, 1.3), phi(m, 0.7);
        std::vector<std::array<double, 2>> out(m);
        wb_momentum_source_element(rho.data(), phi.data(), {1.0, 1.0}, ox, ox, out.data());
        for (const auto& g : out) {
            CHECK(std::abs(g[0]) < 1e-13);
            CHECK(std::abs(g[1]) < 1e-13);
        }
    }
}

TEST_CASE("isothermal equilibrium: source equals minus the interpolated pressure gradient") {
    const double rho_bar = 1.21, p_bar = 1.0;
    for (int K = 1; K <= 4; ++K) {
        const auto ox = scale_to_element(build_element_operators(build_lobatto_rule(K)), 0.25);
        const auto oy = scale_to_element(build_element_operators(build_lobatto_rule(K)), 0.5);
        const int n = K + 1, m = n * n;
        std::vector<double> rho(m), phi(m), p(m);
        for (int k = 0; k < n; ++k)
            for (int q = 0; q < n; ++q) {
                const double x = 0.25 + 0.25 * ox.rule.nodes[q], y = 0.5 * oy.rule.nodes[k];
                phi[q + n * k] = x + y;
                rho[q + n * k] = rho_bar * std::exp(-rho_bar * (x + y) / p_bar);
                p[q + n * k] = p_bar * std::exp(-rho_bar * (x + y) / p_bar);
            }
        std::vector<std::array<double, 2>> out(m);
        wb_momentum_source_element(rho.data(), phi.data(), {p_bar, rho_bar}, ox, oy, out.data());
        for (int k = 0; k < n; ++k)
            for (int q = 0; q < n; ++q) {
                double px = 0.0, py = 0.0;
                for (int l = 0; l < n; ++l) px += ox.nodal_derivative(q, l) * p[l + n * k];
                for (int l = 0; l < n; ++l) py += oy.nodal_derivative(k, l) * p[q + n * l];
                CHECK(out[q + n * k][0] == doctest::Approx(-px).epsilon(1e-13));
                CHECK(out[q + n * k][1] == doctest::Approx(-py).epsilon(1e-13));
            }
    }
}

TEST_CASE("uniform density, linear potential, K = 1") {
    const double rho_bar = 0.8, p_bar = 1.5, beta = rho_bar / p_bar;
    const auto ops = build_element_operators(build_lobatto_rule(1));
    const double y[4] = {0, 0, 1, 1};
    std::vector<double> rho(4, rho_bar), phi(y, y + 4);
    std::vector<std::array<double, 2>> out(4);
    wb_momentum_source_element(rho.data(), phi.data(), {p_bar, rho_bar}, ops, ops, out.data());
    // Interpolant of exp(-beta y) is linear with slope exp(-beta) - 1.
    for (int a = 0; a < 4; ++a) {
        CHECK(std::abs(out[a][0]) < 1e-15);
        CHECK(out[a][1] == doctest::Approx(-p_bar * std::exp(beta * y[a]) * (std::exp(-beta) - 1.0)).epsilon(1e-14));
    }
}

TEST_CASE("energy row") {
    CHECK(wb_energy_source({0.3, -0.2}, 0.0, 0.0) == 0.0);
    CHECK(wb_energy_source({0.0, 1.0}, 0.0, 1.0) == -1.0);
    CHECK(wb_energy_source({1.0, 2.0}, -2.0, 1.0) == 0.0);
}
