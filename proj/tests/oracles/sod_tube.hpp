#pragma once

// Sod tube through the FV solver, scored in L1 against exact cell averages.

#include <cmath>

#include "gfq/fv_baseline.hpp"
#include "oracles/exact_riemann.hpp"

namespace oracle {

// Tube along x on [0,1] x [0, h], one periodic cell row, density L1 at t_end.
inline double sod_l1_density(int cells, double t_end, double cfl = 0.4) {
    using namespace gfq;
    const GasLaw gas;
    MeshSpec ms;
    ms.n1 = cells;
    ms.n2 = 1;
    ms.length2 = 1.0 / cells;
    ms.periodic2 = true;
    auto sod = [](double x, double) { return x < 0.5 ? PrimitiveState{1.0, 0, 0, 1.0} : PrimitiveState{0.125, 0, 0, 0.1}; };
    CellAverageField U = make_cell_field(ms);
    for (int i = 0; i < cells; ++i) {
        const Vec4 w = to_conserved(sod(U.xc(i), 0.0), gas);
        for (int c = 0; c < 4; ++c) U.cell(i, 0)[c] = w[c];
    }
    FvSolver fv(ms, gas, GravityField{}, BcType::Dirichlet, BcType::Periodic, {});
    fv.bind(U);
    double t = 0.0;
    while (t < t_end) {
        double dt = fv.compute_dt(U, cfl);
        if (t + dt > t_end) dt = t_end - t;
        fv.step(U, t, dt);
        t += dt;
    }
    const ExactRiemann exact({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, gas.gamma);
    double err = 0.0;
    const int sub = 32;
    for (int i = 0; i < cells; ++i) {
        double avg = 0.0;
        for (int s = 0; s < sub; ++s) {
            const double x = U.x0 + U.h1 * (i + (s + 0.5) / sub);
            avg += exact.sample((x - 0.5) / t_end).rho / sub;
        }
        err += U.h1 * std::abs(U.cell(i, 0)[0] - avg);
    }
    return err;
}

}  // namespace oracle
