#pragma once

#include <array>

#include "gfq/tensor_basis.hpp"

namespace gfq {

// Elemental reference values taken at the element's first local node.
struct WbReference {
    double p_bar = 1.0;
    double rho_bar = 1.0;
};

double kappa(double rho, double phi, const WbReference& ref);

// Per-node (rho grad phi)_h on one element, exact on isothermal states
// with temperature p_bar/rho_bar. Inputs are local blocks ordered a = p + (K+1)k.
void wb_momentum_source_element(const double* rho, const double* phi, const WbReference& ref,
                                const ElementOperators& ox, const ElementOperators& oy,
                                std::array<double, 2>* out);

// Energy row: -v . (rho grad phi)_h.
double wb_energy_source(const std::array<double, 2>& rho_grad_phi, double u, double v);

}  // namespace gfq
