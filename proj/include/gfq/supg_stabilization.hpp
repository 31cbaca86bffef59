#pragma once

#include <vector>

#include "gfq/euler_model.hpp"
#include "gfq/gfq_operators.hpp"

namespace gfq {

// Nodal J_m tau blocks of one element.
struct StabContext {
    const ElementOperators* ox = nullptr;
    const ElementOperators* oy = nullptr;
    std::vector<Mat4> J1tau;
    std::vector<Mat4> J2tau;
};

StabContext make_stab_context(const Block& W, const ElementOperators& ox, const ElementOperators& oy,
                              const GasLaw& gas, double tau_scale = 0.5);

// (D1^T M1^{-1} (x) 1) diag(J1 tau) r + (1 (x) D2^T M2^{-1}) diag(J2 tau) r.
void stabilize(const double* r, const StabContext& ctx, double* out, double* tmp, bool accumulate = false);
Block stabilize(const Block& r, const StabContext& ctx);

// M^SU dW/dt = [(D1^T (x) M2) diag(J1 tau) + (M1 (x) D2^T) diag(J2 tau)] dW/dt.
Block supg_mass_apply(const Block& Wdot, const StabContext& ctx);

// Standard stabilization of the residual div_h - (M1 (x) M2) S.
Block st_h_element(const Block& F1, const Block& F2, const Block& S, const StabContext& ctx);
// Global-flux stabilization of R_h^E.
Block ST_h_element(const Block& F1, const Block& F2, const Block& S, const StabContext& ctx);

}  // namespace gfq
