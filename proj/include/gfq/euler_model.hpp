#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

namespace gfq {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct GasLaw {
    double gamma = 1.4;
    double R = 1.0;
};

struct PrimitiveState {
    double rho = 1.0, u = 0.0, v = 0.0, p = 1.0;
};

// Conserved ordering: (rho, rho u, rho v, rho E).
Vec4 to_conserved(const PrimitiveState& q, const GasLaw& gas);
PrimitiveState to_primitive(const Vec4& W, const GasLaw& gas);
bool is_admissible(const Vec4& W, const GasLaw& gas);

double sound_speed(const PrimitiveState& q, const GasLaw& gas);
double total_enthalpy(const PrimitiveState& q, const GasLaw& gas);

Vec4 flux(const Vec4& W, int direction, const GasLaw& gas);
Vec4 flux(const PrimitiveState& q, int direction, const GasLaw& gas);
Vec4 gravity_source(const Vec4& W, const std::array<double, 2>& grad_phi);

Mat4 jacobian(const Vec4& W, const std::array<double, 2>& n, const GasLaw& gas);
Mat4 jacobian(const PrimitiveState& q, int direction, const GasLaw& gas);
std::array<double, 4> wavespeeds(const Vec4& W, const std::array<double, 2>& n, const GasLaw& gas);

// Inverse of the summed directional wave-speed rates, 1 / [(|u|+c)/h1 + (|v|+c)/h2].
double inverse_rate(const PrimitiveState& q, double h1, double h2, const GasLaw& gas);
double tau_scalar(const PrimitiveState& q, double h1, double h2, const GasLaw& gas, double scale = 0.5);
Mat4 tau(const Vec4& W, double h1, double h2, const GasLaw& gas, double scale = 0.5);

// Gravitational potential: phi and its gradient at any point.
struct GravityField {
    std::function<double(double, double)> phi;
    std::function<std::array<double, 2>(double, double)> grad;
    bool active() const { return static_cast<bool>(phi); }
};

}  // namespace gfq
