#include "gfq/euler_model.hpp"

#include <cmath>

#include "gfq/errors.hpp"

namespace gfq {

Vec4 to_conserved(const PrimitiveState& q, const GasLaw& gas) {
    const double rhoE = q.p / (gas.gamma - 1.0) + 0.5 * q.rho * (q.u * q.u + q.v * q.v);
    return Vec4(q.rho, q.rho * q.u, q.rho * q.v, rhoE);
}

bool is_admissible(const Vec4& W, const GasLaw& gas) {
    if (!W.allFinite() || !(W[0] > 0.0)) return false;
    const double p = (gas.gamma - 1.0) * (W[3] - 0.5 * (W[1] * W[1] + W[2] * W[2]) / W[0]);
    return p > 0.0;
}

PrimitiveState to_primitive(const Vec4& W, const GasLaw& gas) {
    if (!W.allFinite()) throw AdmissibilityError("non-finite conserved state");
    if (!(W[0] > 0.0)) throw AdmissibilityError("non-positive density");
    PrimitiveState q;
    q.rho = W[0];
    q.u = W[1] / W[0];
    q.v = W[2] / W[0];
    q.p = (gas.gamma - 1.0) * (W[3] - 0.5 * (W[1] * q.u + W[2] * q.v));
    if (!(q.p > 0.0)) throw AdmissibilityError("non-positive pressure");
    return q;
}

double sound_speed(const PrimitiveState& q, const GasLaw& gas) { return std::sqrt(gas.gamma * q.p / q.rho); }

double total_enthalpy(const PrimitiveState& q, const GasLaw& gas) {
    return gas.gamma / (gas.gamma - 1.0) * q.p / q.rho + 0.5 * (q.u * q.u + q.v * q.v);
}

Vec4 flux(const PrimitiveState& q, int direction, const GasLaw& gas) {
    const double H = total_enthalpy(q, gas);
    const double vn = direction == 1 ? q.u : q.v;
    const double m = q.rho * vn;
    if (direction == 1) return Vec4(m, m * q.u + q.p, m * q.v, m * H);
    return Vec4(m, m * q.u, m * q.v + q.p, m * H);
}

Vec4 flux(const Vec4& W, int direction, const GasLaw& gas) { return flux(to_primitive(W, gas), direction, gas); }

Vec4 gravity_source(const Vec4& W, const std::array<double, 2>& g) {
    return Vec4(0.0, -W[0] * g[0], -W[0] * g[1], -(W[1] * g[0] + W[2] * g[1]));
}

Mat4 jacobian(const PrimitiveState& q, int direction, const GasLaw& gas) {
    const double g1 = gas.gamma - 1.0;
    const double u = q.u, v = q.v;
    const double phi2 = 0.5 * g1 * (u * u + v * v);
    const double H = total_enthalpy(q, gas);
    Mat4 J;
    if (direction == 1) {
        J << 0.0, 1.0, 0.0, 0.0,
             phi2 - u * u, (3.0 - gas.gamma) * u, -g1 * v, g1,
             -u * v, v, u, 0.0,
             u * (phi2 - H), H - g1 * u * u, -g1 * u * v, gas.gamma * u;
    } else {
        J << 0.0, 0.0, 1.0, 0.0,
             -u * v, v, u, 0.0,
             phi2 - v * v, -g1 * u, (3.0 - gas.gamma) * v, g1,
             v * (phi2 - H), -g1 * u * v, H - g1 * v * v, gas.gamma * v;
    }
    return J;
}

Mat4 jacobian(const Vec4& W, const std::array<double, 2>& n, const GasLaw& gas) {
    const PrimitiveState q = to_primitive(W, gas);
    return n[0] * jacobian(q, 1, gas) + n[1] * jacobian(q, 2, gas);
}

std::array<double, 4> wavespeeds(const Vec4& W, const std::array<double, 2>& n, const GasLaw& gas) {
    const PrimitiveState q = to_primitive(W, gas);
    const double vn = q.u * n[0] + q.v * n[1];
    const double c = sound_speed(q, gas);
    return {vn - c, vn, vn, vn + c};
}

double inverse_rate(const PrimitiveState& q, double h1, double h2, const GasLaw& gas) {
    const double c = sound_speed(q, gas);
    return 1.0 / ((std::abs(q.u) + c) / h1 + (std::abs(q.v) + c) / h2);
}

double tau_scalar(const PrimitiveState& q, double h1, double h2, const GasLaw& gas, double scale) {
    return scale * inverse_rate(q, h1, h2, gas);
}

Mat4 tau(const Vec4& W, double h1, double h2, const GasLaw& gas, double scale) {
    return tau_scalar(to_primitive(W, gas), h1, h2, gas, scale) * Mat4::Identity();
}

}  // namespace gfq
