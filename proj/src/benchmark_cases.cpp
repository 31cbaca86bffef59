#include "gfq/benchmark_cases.hpp"

#include <algorithm>
#include <cmath>

#include "gfq/errors.hpp"

namespace gfq {

double vortex_strength_for_mach(double mach, double gamma) {
    return 2.0 * M_PI * mach * std::sqrt(gamma / (1.0 + 0.5 * (gamma - 1.0) * mach * mach));
}

namespace {

// Minimal-image offset on a periodic interval.
double wrap_offset(double d, double L) {
    d = std::fmod(d, L);
    if (d >= 0.5 * L) d -= L;
    if (d < -0.5 * L) d += L;
    return d;
}

}  // namespace

PrimitiveState isentropic_vortex(const VortexParams& v, double gamma, double x, double y, double t) {
    const double dx = wrap_offset(x - v.xc - v.u_inf * t, v.length);
    const double dy = wrap_offset(y - v.yc - v.v_inf * t, v.length);
    const double r2 = dx * dx + dy * dy;
    const double amp = v.eps / (2.0 * M_PI) * std::exp(0.5 * (1.0 - r2));
    const double T = 1.0 - (gamma - 1.0) * v.eps * v.eps / (8.0 * gamma * M_PI * M_PI) * std::exp(1.0 - r2);
    PrimitiveState q;
    q.rho = std::pow(T, 1.0 / (gamma - 1.0));
    q.p = std::pow(T, gamma / (gamma - 1.0));
    q.u = v.u_inf - amp * dy;
    q.v = v.v_inf + amp * dx;
    return q;
}

namespace {

CaseSpec vortex_case(const std::string& id, const VortexParams& v, double t_end) {
    CaseSpec c;
    c.id = id;
    c.length1 = c.length2 = v.length;
    c.t_end = t_end;
    c.bc_x = c.bc_y = BcType::Periodic;
    const double g = c.gas.gamma;
    c.exact = [v, g](double x, double y, double t) { return isentropic_vortex(v, g, x, y, t); };
    c.initial = [v, g](double x, double y) { return isentropic_vortex(v, g, x, y, 0.0); };
    c.default_n1 = c.default_n2 = 30;
    return c;
}

}  // namespace

CaseSpec case_moving_vortex() {
    VortexParams v;
    v.u_inf = v.v_inf = 1.0;
    return vortex_case("moving-vortex", v, 2.0);
}

CaseSpec case_steady_vortex(double mach) {
    VortexParams v;
    if (mach > 0.0) {
        if (!(mach < 1.0)) throw ConfigError("steady vortex Mach number must lie in (0,1)");
        v.eps = vortex_strength_for_mach(mach);
    }
    return vortex_case("steady-vortex", v, mach > 0.0 ? 50.0 : 1.0);
}

double kelvin_helmholtz_profile(double y) {
    const double w = 1.0 / 16.0;
    if (y >= -0.25 - 0.5 * w && y < -0.25 + 0.5 * w) return -std::sin(M_PI / w * (y + 0.25));
    if (y >= -0.25 + 0.5 * w && y < 0.25 - 0.5 * w) return -1.0;
    if (y >= 0.25 - 0.5 * w && y < 0.25 + 0.5 * w) return std::sin(M_PI / w * (y - 0.25));
    return 1.0;
}

CaseSpec case_kelvin_helmholtz() {
    CaseSpec c;
    c.id = "kelvin-helmholtz";
    c.x0 = 0.0;
    c.y0 = -0.5;
    c.length1 = 2.0;
    c.length2 = 1.0;
    c.t_end = 80.0;
    const double gamma = c.gas.gamma, mach = 1e-2, r = 1e-3, delta = 0.1;
    c.initial = [=](double x, double y) {
        const double Ky = kelvin_helmholtz_profile(y);
        return PrimitiveState{gamma + Ky * r, mach * Ky, delta * mach * std::sin(2.0 * M_PI * x), 1.0};
    };
    c.default_n1 = 64;
    c.default_n2 = 32;
    return c;
}

CaseSpec case_isothermal_equilibrium(bool perturbed) {
    CaseSpec c;
    c.id = perturbed ? "hydrostatic-perturbed" : "hydrostatic";
    c.t_end = perturbed ? 0.15 : 1.0;
    c.bc_x = c.bc_y = BcType::Dirichlet;
    const double rho_bar = 1.21, p_bar = 1.0, amp = 2e-5;
    c.gravity.phi = [](double x, double y) { return x + y; };
    c.gravity.grad = [](double, double) { return std::array<double, 2>{1.0, 1.0}; };
    auto equilibrium = [=](double x, double y) {
        const double e = std::exp(-rho_bar * (x + y) / p_bar);
        return PrimitiveState{rho_bar * e, 0.0, 0.0, p_bar * e};
    };
    c.boundary = [equilibrium](double x, double y, double) { return equilibrium(x, y); };
    if (perturbed) {
        c.initial = [=](double x, double y) {
            PrimitiveState q = equilibrium(x, y);
            q.p += amp * std::exp(-100.0 * (rho_bar / p_bar) * ((x - 0.3) * (x - 0.3) + (y - 0.3) * (y - 0.3)));
            return q;
        };
    } else {
        c.initial = equilibrium;
        c.exact = c.boundary;
    }
    c.default_n1 = c.default_n2 = 40;
    return c;
}

CaseSpec case_rayleigh_taylor() {
    CaseSpec c;
    c.id = "rayleigh-taylor";
    c.x0 = c.y0 = -1.0;
    c.length1 = c.length2 = 2.0;
    c.t_end = 4.1;
    c.bc_x = c.bc_y = BcType::Dirichlet;
    const double r0 = 0.5, drho = 0.1, eta = 0.02, kmode = 20.0;
    const double alpha = std::exp(-r0) / (std::exp(-r0) + drho);
    c.gravity.phi = [](double x, double y) { return std::hypot(x, y); };
    c.gravity.grad = [](double x, double y) {
        const double r = std::hypot(x, y);
        if (r == 0.0) return std::array<double, 2>{0.0, 0.0};
        return std::array<double, 2>{x / r, y / r};
    };
    c.initial = [=](double x, double y) {
        const double r = std::hypot(x, y);
        const double theta = std::atan2(y, x);
        const double rI = r0 * (1.0 + eta * std::cos(kmode * theta));
        const double outer = std::exp(-r / alpha + r0 * (1.0 - alpha) / alpha);
        PrimitiveState q;
        q.p = r <= r0 ? std::exp(-r) : outer;
        q.rho = r <= rI ? std::exp(-r) : outer / alpha;
        return q;
    };
    c.default_n1 = c.default_n2 = 60;
    return c;
}

CaseSpec case_thermal_bubble() {
    CaseSpec c;
    c.id = "thermal-bubble";
    c.length1 = c.length2 = 1000.0;
    c.t_end = 700.0;
    c.bc_x = c.bc_y = BcType::SlipWall;
    const double g = 9.8, theta0 = 300.0, p0 = 1e5, rho0 = 1.1612055;
    c.gas.R = p0 / (rho0 * theta0);
    const double gamma = c.gas.gamma, R = c.gas.R;
    const double cp = gamma * R / (gamma - 1.0);
    const double xc = 500.0, yc = 350.0, rc = 250.0, thetac = 0.5;
    c.gravity.phi = [g](double, double y) { return g * y; };
    c.gravity.grad = [g](double, double) { return std::array<double, 2>{0.0, g}; };
    c.initial = [=](double x, double y) {
        const double r = std::hypot(x - xc, y - yc);
        const double dtheta = r <= rc ? 0.5 * thetac * (1.0 + std::cos(M_PI * r / rc)) : 0.0;
        const double theta = theta0 + dtheta;
        const double exner = 1.0 - g * y / (cp * theta0);
        PrimitiveState q;
        q.rho = p0 / (R * theta) * std::pow(exner, 1.0 / (gamma - 1.0));
        q.p = p0 * std::pow(exner, gamma / (gamma - 1.0));
        return q;
    };
    c.default_n1 = c.default_n2 = 60;
    return c;
}

double CompositeVortex::v_theta(double r) const {
    if (r <= a) return vm * r / a;
    if (r <= b) return vm * a / (a * a - b * b) * (r * r - b * b) / r;
    return 0.0;
}

double CompositeVortex::temperature(double r) const {
    // T = 1 - (gamma-1)/gamma * int_r^inf v_theta^2 / s ds.
    const double C = vm * a / (a * a - b * b);
    auto outer = [&](double s) {
        return C * C * (-2.0 * b * b * std::log(b) - 0.5 * s * s + 2.0 * b * b * std::log(s) + 0.5 * b * b * b * b / (s * s));
    };
    double Q;
    if (r > b)
        Q = 0.0;
    else if (r > a)
        Q = outer(r);
    else
        Q = outer(a) + vm * vm * (a * a - r * r) / (2.0 * a * a);
    return 1.0 - (gamma - 1.0) / gamma * Q;
}

CaseSpec case_shock_vortex() {
    CaseSpec c;
    c.id = "shock-vortex";
    c.length1 = 2.0;
    c.length2 = 1.0;
    c.t_end = 0.4;
    c.bc_x = BcType::Dirichlet;
    c.bc_y = BcType::SlipWall;
    const double gamma = c.gas.gamma, Ms = 1.1;
    const double uu = Ms * std::sqrt(gamma);
    const double rho_d = (gamma + 1.0) * Ms * Ms / ((gamma - 1.0) * Ms * Ms + 2.0);
    const double p_d = 1.0 + 2.0 * gamma / (gamma + 1.0) * (Ms * Ms - 1.0);
    const double u_d = uu / rho_d;
    CompositeVortex vortex;
    vortex.gamma = gamma;
    vortex.vm = 0.9 * std::sqrt(gamma);
    const double xc = 0.25, yc = 0.5;
    c.initial = [=](double x, double y) {
        if (x >= 0.5) return PrimitiveState{rho_d, u_d, 0.0, p_d};
        const double dx = x - xc, dy = y - yc;
        const double r = std::hypot(dx, dy);
        const double vt = vortex.v_theta(r);
        const double T = vortex.temperature(r);
        PrimitiveState q;
        q.rho = std::pow(T, 1.0 / (gamma - 1.0));
        q.p = std::pow(T, gamma / (gamma - 1.0));
        q.u = r > 0.0 ? uu - vt * dy / r : uu;
        q.v = r > 0.0 ? vt * dx / r : 0.0;
        return q;
    };
    c.default_n1 = 100;
    c.default_n2 = 50;
    return c;
}

const std::vector<std::string>& case_ids() {
    static const std::vector<std::string> ids = {"moving-vortex",  "steady-vortex",         "kelvin-helmholtz",
                                                 "hydrostatic",    "hydrostatic-perturbed", "rayleigh-taylor",
                                                 "thermal-bubble", "shock-vortex"};
    return ids;
}

CaseSpec make_case(const std::string& id, double mach) {
    if (id == "moving-vortex") return case_moving_vortex();
    if (id == "steady-vortex") return case_steady_vortex(mach);
    if (id == "kelvin-helmholtz") return case_kelvin_helmholtz();
    if (id == "hydrostatic") return case_isothermal_equilibrium(false);
    if (id == "hydrostatic-perturbed") return case_isothermal_equilibrium(true);
    if (id == "rayleigh-taylor") return case_rayleigh_taylor();
    if (id == "thermal-bubble") return case_thermal_bubble();
    if (id == "shock-vortex") return case_shock_vortex();
    throw ConfigError("unknown case '" + id + "'");
}

MeshSpec mesh_for(const CaseSpec& c, int degree, int n1, int n2) {
    MeshSpec m;
    m.n1 = n1;
    m.n2 = n2;
    m.degree = degree;
    m.x0 = c.x0;
    m.y0 = c.y0;
    m.length1 = c.length1;
    m.length2 = c.length2;
    m.periodic1 = c.bc_x == BcType::Periodic;
    m.periodic2 = c.bc_y == BcType::Periodic;
    return m;
}

NodalField initialize(const CartesianMesh& mesh, const CaseSpec& c) {
    NodalField W(mesh, 4);
    for (std::size_t a = 0; a < mesh.node_count(); ++a) {
        const auto xy = mesh.node_coordinates(a);
        const PrimitiveState q = c.initial(xy[0], xy[1]);
        if (!(q.rho > 0.0) || !(q.p > 0.0)) throw AdmissibilityError("inadmissible initial state", xy[0], xy[1]);
        const Vec4 w = to_conserved(q, c.gas);
        for (int k = 0; k < 4; ++k) W(a, k) = w[k];
    }
    return W;
}

BoundaryConditions boundary_for(const CaseSpec& c) { return BoundaryConditions(c.bc_x, c.bc_y, c.boundary); }

namespace {

template <class Sample>
std::array<double, 4> quadrature_norm(const CartesianMesh& mesh, int p, Sample&& sample) {
    const int n = mesh.nodes_per_side();
    const auto& w = mesh.rule().weights;
    std::array<double, 4> acc{0.0, 0.0, 0.0, 0.0};
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto nodes = mesh.element_nodes(e);
        const int i = static_cast<int>(e % mesh.n1()), j = static_cast<int>(e / mesh.n1());
        for (int k = 0; k < n; ++k)
            for (int q = 0; q < n; ++q) {
                const double x = mesh.coordinate1(i, q), y = mesh.coordinate2(j, k);
                const std::array<double, 4> d = sample(nodes[q + n * k], x, y);
                const double wt = w[q] * w[k] * mesh.h1() * mesh.h2();
                for (int c = 0; c < 4; ++c) {
                    const double v = std::abs(d[c]);
                    if (p == 0)
                        acc[c] = std::max(acc[c], v);
                    else if (p == 1)
                        acc[c] += wt * v;
                    else
                        acc[c] += wt * v * v;
                }
            }
    }
    if (p == 2)
        for (auto& v : acc) v = std::sqrt(v);
    return acc;
}

void require_exact(const StateFunction& exact) {
    if (!exact) throw std::invalid_argument("error norms need an exact solution");
    }

}  // namespace

std::array<double, 4> error_norms(const NodalField& W, const StateFunction& exact, double t, const GasLaw& gas,
                                  int p) {
    require_exact(exact);
    return quadrature_norm(W.mesh(), p, [&](std::size_t a, double x, double y) {
        const Vec4 e = to_conserved(exact(x, y, t), gas);
        const double* w = W.node(a);
        return std::array<double, 4>{w[0] - e[0], w[1] - e[1], w[2] - e[2], w[3] - e[3]};
    });
}

std::array<double, 4> primitive_error_norms(const NodalField& W, const StateFunction& exact, double t,
                                            const GasLaw& gas, int p) {
    require_exact(exact);
    return quadrature_norm(W.mesh(), p, [&](std::size_t a, double x, double y) {
        const PrimitiveState e = exact(x, y, t);
        const double* w = W.node(a);
        const PrimitiveState q = to_primitive(Vec4(w[0], w[1], w[2], w[3]), gas);
        return std::array<double, 4>{q.rho - e.rho, q.u - e.u, q.v - e.v, q.p - e.p};
    });
}

std::array<double, 4> exact_norms(const CartesianMesh& mesh, const StateFunction& exact, double t, const GasLaw& gas,
                                  int p) {
    require_exact(exact);
    return quadrature_norm(mesh, p, [&](std::size_t, double x, double y) {
        const Vec4 e = to_conserved(exact(x, y, t), gas);
        return std::array<double, 4>{e[0], e[1], e[2], e[3]};
    });
}

double eoa(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

}  // namespace gfq
