#pragma once

#include <array>
#include <vector>

#include "gfq/euler_model.hpp"
#include "gfq/gfq_operators.hpp"
#include "gfq/grid.hpp"

namespace gfq {

struct SchemeOptions {
    Scheme scheme = Scheme::SupgGfq;
    bool well_balanced = false;
    double tau_scale = 0.5;  // tau_s = scale / [(|u|+c)K/h1 + (|v|+c)K/h2]
};

// Semi-discrete SUPG operator: Galerkin residual plus streamline-upwind
// terms, element by element, scattered in element order.
class SpatialOperator {
public:
    SpatialOperator(const CartesianMesh& mesh, const GasLaw& gas, const GravityField& gravity,
                    const SchemeOptions& options);

    const CartesianMesh& mesh() const { return mesh_; }
    const GasLaw& gas() const { return gas_; }
    const SchemeOptions& options() const { return options_; }
    const ElementOperators& ops_x() const { return ox_; }
    const ElementOperators& ops_y() const { return oy_; }
    const std::vector<double>& mass() const { return mass_; }
    bool has_gravity() const { return gravity_on_; }
    const std::vector<double>& nodal_phi() const { return phi_; }
    const std::vector<std::array<double, 2>>& nodal_grad_phi() const { return grad_; }

    // out = sum_E [ G_E + P_E((M1 (x) M2) Wdot + G_E) ], G_E the Galerkin
    // residual (standard or global-flux). Wdot may be null.
    void residual(const NodalField& W, const NodalField* Wdot, NodalField& out) const;

    // Nodal fluxes and source of one element (source per scheme/WB choice).
    void element_fluxes(std::size_t e, const double* W, double* F1, double* F2, double* S) const;

    // Galerkin part only, no stabilization, element-local.
    Block element_galerkin(std::size_t e, const Block& W) const;
    // Full elemental contribution G_E + P_E(...).
    Block element_residual(std::size_t e, const Block& W, const Block* Wdot) const;

private:
    void element_kernel(std::size_t e, const double* W, const double* Wdot, double* out) const;

    const CartesianMesh& mesh_;
    GasLaw gas_;
    SchemeOptions options_;
    ElementOperators ox_, oy_;
    std::vector<double> mass_;
    double tau_h1_ = 1.0, tau_h2_ = 1.0;  // node spacing h/K
    bool gravity_on_ = false;
    std::vector<double> phi_;
    std::vector<std::array<double, 2>> grad_;
    mutable std::vector<double> work_;
};

}  // namespace gfq
