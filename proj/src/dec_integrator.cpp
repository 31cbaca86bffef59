#include "gfq/dec_integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gfq/errors.hpp"

namespace gfq {

DecTables build_dec_tables(int M) {
    const auto ops = build_element_operators(build_lobatto_rule(M));
    DecTables t;
    t.beta = ops.rule.nodes;
    t.theta = ops.theta;
    t.derivative = ops.nodal_derivative;
    return t;
}

double compute_dt(const NodalField& W, const GasLaw& gas, double cfl) {
    const CartesianMesh& mesh = W.mesh();
    double rate_inv = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < W.node_count(); ++a) {
        const double* w = W.node(a);
        PrimitiveState q;
        try {
            q = to_primitive(Vec4(w[0], w[1], w[2], w[3]), gas);
        } catch (const AdmissibilityError& err) {
            const auto xy = mesh.node_coordinates(a);
            throw AdmissibilityError(std::string(err.what()) + " at node " + std::to_string(a), xy[0], xy[1]);
        }
        rate_inv = std::min(rate_inv, inverse_rate(q, mesh.h1(), mesh.h2(), gas));
    }
    return cfl * rate_inv;
}

DecIntegrator::DecIntegrator(const SpatialOperator& op, BoundaryConditions bc, const DecConfig& cfg)
    : op_(op), bc_(std::move(bc)), cfl_(cfg.cfl) {
    const int K = op.mesh().degree();
    M_ = cfg.subintervals > 0 ? cfg.subintervals : K;
    kappa_ = cfg.iterations > 0 ? cfg.iterations : K + 1;
    if (!(cfl_ > 0.0)) throw ConfigError("cfl must be positive");
    tables_ = build_dec_tables(M_);
    inv_mass_.resize(op.mass().size());
    for (std::size_t a = 0; a < inv_mass_.size(); ++a) inv_mass_[a] = 1.0 / op.mass()[a];
    stages_.assign(M_ + 1, NodalField(op.mesh(), 4));
    res_.assign(M_ + 1, NodalField(op.mesh(), 4));
    wdot_ = NodalField(op.mesh(), 4);
}

void DecIntegrator::step(NodalField& W, double t, double dt) {
    const std::size_t len = W.values().size();
    for (auto& s : stages_) s.values() = W.values();
    std::vector<const NodalField*> res_of(M_ + 1);
    for (int k = 1; k <= kappa_; ++k) {
        try {
            if (k == 1) {
                // All stages equal W^n and dW/dt vanishes.
                op_.residual(stages_[0], nullptr, res_[0]);
                std::fill(res_of.begin(), res_of.end(), &res_[0]);
            } else {
                for (int r = 0; r <= M_; ++r) {
                    auto& wd = wdot_.values();
                    std::fill(wd.begin(), wd.end(), 0.0);
                    for (int s = 0; s <= M_; ++s) {
                        const double c = tables_.derivative(r, s) / dt;
                        const auto& sv = stages_[s].values();
                        for (std::size_t i = 0; i < len; ++i) wd[i] += c * sv[i];
                    }
                    op_.residual(stages_[r], &wdot_, res_[r]);
                    res_of[r] = &res_[r];
                }
            }
        } catch (const AdmissibilityError& err) {
            throw AdmissibilityError(std::string(err.what()) + " (DeC iteration " + std::to_string(k) + ", t=" +
                                         std::to_string(t) + ")",
                                     err.x(), err.y());
        }
        for (int m = 1; m <= M_; ++m) {
            auto& out = stages_[m].values();
            out = W.values();
            for (int r = 0; r <= M_; ++r) {
                const double c = -dt * tables_.theta(m, r);
                const auto& rv = res_of[r]->values();
                for (std::size_t i = 0; i < len; ++i) out[i] += c * inv_mass_[i / 4] * rv[i];
            }
            bc_.apply(stages_[m], t + tables_.beta[m] * dt);
        }
    }
    W.values() = stages_[M_].values();
}

EvolveResult evolve(const NodalField& W0, double t0, double t_end, DecIntegrator& integrator,
                    const EvolveCallback& callback, long cadence, long max_steps) {
    EvolveResult res;
    res.W = W0;
    res.t = t0;
    const GasLaw& gas = integrator.op().gas();
    while (res.t < t_end && (max_steps < 0 || res.steps < max_steps)) {
        double dt = compute_dt(res.W, gas, integrator.cfl());
        bool last = false;
        if (t_end - res.t <= dt * (1.0 + 1e-12)) {
            dt = t_end - res.t;
            last = true;
        }
        integrator.step(res.W, res.t, dt);
        res.t = last ? t_end : res.t + dt;
        ++res.steps;
        if (callback && ((cadence > 0 && res.steps % cadence == 0) || last)) {
            callback(res.W, res.t, res.steps);
            res.samples.push_back({res.t, res.steps});
        }
    }
    return res;
}

}  // namespace gfq
