#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gfq/boundary.hpp"
#include "gfq/euler_model.hpp"
#include "gfq/grid.hpp"

namespace gfq {

using PointFunction = std::function<PrimitiveState(double x, double y)>;

struct CaseSpec {
    std::string id;
    double x0 = 0.0, y0 = 0.0, length1 = 1.0, length2 = 1.0;
    double t_end = 1.0;
    BcType bc_x = BcType::Periodic, bc_y = BcType::Periodic;
    GasLaw gas;
    GravityField gravity;
    PointFunction initial;
    StateFunction exact;     // empty when no closed form exists
    StateFunction boundary;  // Dirichlet data; empty holds the initial values
    int default_n1 = 20, default_n2 = 20;
};

struct VortexParams {
    double eps = 5.0;
    double u_inf = 0.0, v_inf = 0.0;
    double xc = 5.0, yc = 5.0;
    double length = 10.0;
};

double vortex_strength_for_mach(double mach, double gamma = 1.4);
PrimitiveState isentropic_vortex(const VortexParams& v, double gamma, double x, double y, double t);

CaseSpec case_moving_vortex();
// mach <= 0 selects eps = 5.
CaseSpec case_steady_vortex(double mach = 0.0);
CaseSpec case_kelvin_helmholtz();
double kelvin_helmholtz_profile(double y);
CaseSpec case_isothermal_equilibrium(bool perturbed);
CaseSpec case_rayleigh_taylor();
CaseSpec case_thermal_bubble();
CaseSpec case_shock_vortex();

// Composite vortex temperature T(r) from radial equilibrium, isentropic,
// with T = 1 far away (upstream p = rho = 1).
struct CompositeVortex {
    double a = 0.075, b = 0.175, vm = 0.9 * 1.1832159566199232;
    double gamma = 1.4;
    double v_theta(double r) const;
    double temperature(double r) const;
};

const std::vector<std::string>& case_ids();
CaseSpec make_case(const std::string& id, double mach = 0.0);

MeshSpec mesh_for(const CaseSpec& c, int degree, int n1, int n2);
NodalField initialize(const CartesianMesh& mesh, const CaseSpec& c);
BoundaryConditions boundary_for(const CaseSpec& c);

// Per-component error norms of the conserved variables against `exact`
// at time t, using Gauss-Lobatto quadrature; p = 1, 2 or 0 for max.
std::array<double, 4> error_norms(const NodalField& W, const StateFunction& exact, double t, const GasLaw& gas,
                                  int p);
// Same in primitive variables (rho, u, v, p).
std::array<double, 4> primitive_error_norms(const NodalField& W, const StateFunction& exact, double t,
                                            const GasLaw& gas, int p);
// Norms of the exact conserved solution itself, for relative errors.
std::array<double, 4> exact_norms(const CartesianMesh& mesh, const StateFunction& exact, double t, const GasLaw& gas,
                                  int p);
double eoa(double e_coarse, double e_fine);

}  // namespace gfq
