#pragma once

#include <functional>
#include <vector>

#include "gfq/boundary.hpp"
#include "gfq/scheme.hpp"

namespace gfq {

struct DecConfig {
    int subintervals = 0;  // M; 0 selects the spatial degree K
    int iterations = 0;    // kappa; 0 selects K + 1
    double cfl = 0.1;
};

// Stage-time tables on M+1 Gauss-Lobatto nodes in [0,1].
struct DecTables {
    std::vector<double> beta;  // stage fractions
    Table theta;               // theta^m_r
    Table derivative;          // d/dt of the stage Lagrange basis at the stage nodes, unit step
};

DecTables build_dec_tables(int M);

// nu * min over nodes of [(|u|+c)/h1 + (|v|+c)/h2]^{-1}.
double compute_dt(const NodalField& W, const GasLaw& gas, double cfl);

class DecIntegrator {
public:
    DecIntegrator(const SpatialOperator& op, BoundaryConditions bc, const DecConfig& cfg);

    int subintervals() const { return M_; }
    int iterations() const { return kappa_; }
    double cfl() const { return cfl_; }
    const SpatialOperator& op() const { return op_; }
    const BoundaryConditions& boundary() const { return bc_; }

    void step(NodalField& W, double t, double dt);

private:
    const SpatialOperator& op_;
    BoundaryConditions bc_;
    int M_, kappa_;
    double cfl_;
    DecTables tables_;
    std::vector<double> inv_mass_;
    std::vector<NodalField> stages_, res_;
    NodalField wdot_;
};

struct EvolveSample {
    double t;
    long step;
};

struct EvolveResult {
    NodalField W;
    double t = 0.0;
    long steps = 0;
    std::vector<EvolveSample> samples;
};

using EvolveCallback = std::function<void(const NodalField& W, double t, long step)>;

// Steps until t_end; the last step is shortened to land exactly on t_end.
// The callback fires every `cadence` steps (0 disables) and after the final step.
EvolveResult evolve(const NodalField& W0, double t0, double t_end, DecIntegrator& integrator,
                    const EvolveCallback& callback = {}, long cadence = 0, long max_steps = -1);

}  // namespace gfq
