#include "gfq/fv_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gfq/errors.hpp"

namespace gfq {

CellAverageField make_cell_field(const MeshSpec& spec) {
    if (spec.n1 < 1 || spec.n2 < 1) throw InvalidGeometry("cell counts must be positive");
    if (!(spec.length1 > 0.0) || !(spec.length2 > 0.0)) throw InvalidGeometry("domain lengths must be positive");
    CellAverageField U;
    U.n1 = spec.n1;
    U.n2 = spec.n2;
    U.x0 = spec.x0;
    U.y0 = spec.y0;
    U.h1 = spec.length1 / spec.n1;
    U.h2 = spec.length2 / spec.n2;
    U.values.assign(static_cast<std::size_t>(spec.n1) * spec.n2 * 4, 0.0);
    return U;
}

CellAverageField project_cell_averages(const MeshSpec& spec, const std::function<PrimitiveState(double, double)>& f,
                                       const GasLaw& gas, int quad_degree) {
    CellAverageField U = make_cell_field(spec);
    const LobattoRule rule = build_lobatto_rule(quad_degree);
    for (int j = 0; j < U.n2; ++j)
        for (int i = 0; i < U.n1; ++i) {
            Vec4 acc = Vec4::Zero();
            for (int k = 0; k < rule.size(); ++k)
                for (int p = 0; p < rule.size(); ++p) {
                    const double x = U.x0 + U.h1 * (i + rule.nodes[p]);
                    const double y = U.y0 + U.h2 * (j + rule.nodes[k]);
                    acc += rule.weights[p] * rule.weights[k] * to_conserved(f(x, y), gas);
                }
            Eigen::Map<Vec4>(U.cell(i, j)) = acc;
        }
    return U;
}

namespace {

Vec4 conserved_star(const PrimitiveState& q, double S, double Sstar, int dir, const GasLaw& gas) {
    const double un = dir == 1 ? q.u : q.v;
    const double E = q.p / ((gas.gamma - 1.0) * q.rho) + 0.5 * (q.u * q.u + q.v * q.v);
    const double f = q.rho * (S - un) / (S - Sstar);
    Vec4 U;
    U[0] = f;
    U[1] = f * (dir == 1 ? Sstar : q.u);
    U[2] = f * (dir == 1 ? q.v : Sstar);
    U[3] = f * (E + (Sstar - un) * (Sstar + q.p / (q.rho * (S - un))));
    return U;
}

}  // namespace

Vec4 hllc_flux(const PrimitiveState& L, const PrimitiveState& R, int dir, const GasLaw& gas) {
    const double uL = dir == 1 ? L.u : L.v, uR = dir == 1 ? R.u : R.v;
    const double cL = sound_speed(L, gas), cR = sound_speed(R, gas);
    const double SL = std::min(uL - cL, uR - cR);
    const double SR = std::max(uL + cL, uR + cR);
    const Vec4 FL = flux(L, dir, gas);
    if (SL >= 0.0) return FL;
    const Vec4 FR = flux(R, dir, gas);
    if (SR <= 0.0) return FR;
    const double Sstar = (R.p - L.p + L.rho * uL * (SL - uL) - R.rho * uR * (SR - uR)) /
                         (L.rho * (SL - uL) - R.rho * (SR - uR));
    if (Sstar >= 0.0) return FL + SL * (conserved_star(L, SL, Sstar, dir, gas) - to_conserved(L, gas));
    return FR + SR * (conserved_star(R, SR, Sstar, dir, gas) - to_conserved(R, gas));
}

Vec4 hllc_flux(const Vec4& WL, const Vec4& WR, const std::array<double, 2>& n, const GasLaw& gas) {
    const int dir = std::abs(n[0]) > 0.5 ? 1 : 2;
    const double sign = dir == 1 ? n[0] : n[1];
    PrimitiveState L = to_primitive(WL, gas), R = to_primitive(WR, gas);
    if (sign > 0.0) return hllc_flux(L, R, dir, gas);
    // Mirror the normal axis so the solver always sees a +axis normal.
    auto mirror = [dir](PrimitiveState q) {
        if (dir == 1) q.u = -q.u;
        else q.v = -q.v;
        return q;
    };
    Vec4 F = hllc_flux(mirror(L), mirror(R), dir, gas);
    // Back from the mirrored frame only the normal momentum changes sign.
    F[dir] = -F[dir];
    return F;
}

double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
}

namespace {

PrimitiveState slope(const PrimitiveState& m, const PrimitiveState& c, const PrimitiveState& p) {
    return {minmod(c.rho - m.rho, p.rho - c.rho), minmod(c.u - m.u, p.u - c.u), minmod(c.v - m.v, p.v - c.v),
            minmod(c.p - m.p, p.p - c.p)};
}

PrimitiveState axpy(const PrimitiveState& q, double a, const PrimitiveState& d) {
    return {q.rho + a * d.rho, q.u + a * d.u, q.v + a * d.v, q.p + a * d.p};
}

}  // namespace

void muscl_reconstruct(const std::vector<PrimitiveState>& row, std::vector<PrimitiveState>& left,
                       std::vector<PrimitiveState>& right) {
    const std::size_t n = row.size();
    left.assign(n - 1, {});
    right.assign(n - 1, {});
    std::vector<PrimitiveState> d(n, PrimitiveState{0.0, 0.0, 0.0, 0.0});
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = slope(row[i - 1], row[i], row[i + 1]);
    for (std::size_t f = 0; f + 1 < n; ++f) {
        left[f] = axpy(row[f], 0.5, d[f]);
        right[f] = axpy(row[f + 1], -0.5, d[f + 1]);
    }
}

FvSolver::FvSolver(const MeshSpec& spec, const GasLaw& gas, const GravityField& gravity, BcType bc_x, BcType bc_y,
                   StateFunction boundary, FvOptions options)
    : spec_(spec), gas_(gas), gravity_(gravity), bc_x_(bc_x), bc_y_(bc_y), boundary_(std::move(boundary)),
      options_(options) {
    if (spec.n1 < 1 || spec.n2 < 1) throw InvalidGeometry("element counts must be at least 1");
    if (gravity_.active()) {
        const CellAverageField U = make_cell_field(spec);
        grad_.resize(static_cast<std::size_t>(spec.n1) * spec.n2);
        for (int j = 0; j < spec.n2; ++j)
            for (int i = 0; i < spec.n1; ++i)
                grad_[i + static_cast<std::size_t>(spec.n1) * j] = gravity_.grad(U.xc(i), U.yc(j));
    }
}

void FvSolver::bind(const CellAverageField& U0) { initial_ = U0; }

double FvSolver::compute_dt(const CellAverageField& U, double cfl) const {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < U.n2; ++j)
        for (int i = 0; i < U.n1; ++i) {
            const PrimitiveState q = to_primitive(Eigen::Map<const Vec4>(U.cell(i, j)), gas_);
            best = std::min(best, inverse_rate(q, U.h1, U.h2, gas_));
        }
    return cfl * best;
}

PrimitiveState FvSolver::ghost(const CellAverageField& U, int i, int j, double t) const {
    // (i,j) lies outside in at most the directions that are non-periodic.
    const bool out_x = i < 0 || i >= U.n1;
    const bool out_y = j < 0 || j >= U.n2;
    int ii = i, jj = j;
    bool flip_u = false, flip_v = false;
    bool dirichlet = false;
    if (out_x) {
        if (bc_x_ == BcType::Periodic) ii = (i % U.n1 + U.n1) % U.n1;
        else if (bc_x_ == BcType::SlipWall) { ii = i < 0 ? -1 - i : 2 * U.n1 - 1 - i; flip_u = true; }
        else dirichlet = true;
    }
    if (out_y) {
        if (bc_y_ == BcType::Periodic) jj = (j % U.n2 + U.n2) % U.n2;
        else if (bc_y_ == BcType::SlipWall) { jj = j < 0 ? -1 - j : 2 * U.n2 - 1 - j; flip_v = true; }
        else dirichlet = true;
    }
    if (dirichlet) {
        if (boundary_) return boundary_(U.xc(i), U.yc(j), t);
        // Hold the initial average of the nearest interior cell.
        const int ci = std::clamp(i, 0, U.n1 - 1), cj = std::clamp(j, 0, U.n2 - 1);
        return to_primitive(Eigen::Map<const Vec4>(initial_.cell(ci, cj)), gas_);
    }
    PrimitiveState q = to_primitive(Eigen::Map<const Vec4>(U.cell(ii, jj)), gas_);
    if (flip_u) q.u = -q.u;
    if (flip_v) q.v = -q.v;
    return q;
}

void FvSolver::rhs(const CellAverageField& U, double t, std::vector<double>& out) const {
    out.assign(U.values.size(), 0.0);
    std::vector<PrimitiveState> row, L, R;
    auto prim = [&](int i, int j) {
        if (i >= 0 && i < U.n1 && j >= 0 && j < U.n2) {
            try {
                return to_primitive(Eigen::Map<const Vec4>(U.cell(i, j)), gas_);
            } catch (const AdmissibilityError& err) {
                throw AdmissibilityError(std::string(err.what()) + " in cell (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")",
                                         U.xc(i), U.yc(j));
            }
        }
        return ghost(U, i, j, t);
    };
    auto reconstruct = [&]() {
        if (options_.limit) {
            muscl_reconstruct(row, L, R);
        } else {
            L.assign(row.begin(), row.end() - 1);
            R.assign(row.begin() + 1, row.end());
        }
    };
    // x sweeps: cells -2..n1+1, interfaces between cells f-1 and f for f=0..n1.
    for (int j = 0; j < U.n2; ++j) {
        row.clear();
        for (int i = -2; i < U.n1 + 2; ++i) row.push_back(prim(i, j));
        reconstruct();
        for (int f = 0; f <= U.n1; ++f) {
            // interface between cells f-1 and f sits at index f+1 of L/R
            const Vec4 F = hllc_flux(L[f + 1], R[f + 1], 1, gas_);
            if (f > 0)
                for (int c = 0; c < 4; ++c) out[4 * (f - 1 + static_cast<std::size_t>(U.n1) * j) + c] -= F[c] / U.h1;
            if (f < U.n1)
                for (int c = 0; c < 4; ++c) out[4 * (f + static_cast<std::size_t>(U.n1) * j) + c] += F[c] / U.h1;
        }
    }
    for (int i = 0; i < U.n1; ++i) {
        row.clear();
        for (int j = -2; j < U.n2 + 2; ++j) row.push_back(prim(i, j));
        reconstruct();
        for (int f = 0; f <= U.n2; ++f) {
            const Vec4 F = hllc_flux(L[f + 1], R[f + 1], 2, gas_);
            if (f > 0)
                for (int c = 0; c < 4; ++c) out[4 * (i + static_cast<std::size_t>(U.n1) * (f - 1)) + c] -= F[c] / U.h2;
            if (f < U.n2)
                for (int c = 0; c < 4; ++c) out[4 * (i + static_cast<std::size_t>(U.n1) * f) + c] += F[c] / U.h2;
        }
    }
    if (!grad_.empty()) {
        for (std::size_t e = 0; e < grad_.size(); ++e) {
            const Vec4 s = gravity_source(Eigen::Map<const Vec4>(U.values.data() + 4 * e), grad_[e]);
            for (int c = 0; c < 4; ++c) out[4 * e + c] += s[c];
        }
    }
}

void FvSolver::step(CellAverageField& U, double t, double dt) const {
    std::vector<double> k;
    rhs(U, t, k);
    CellAverageField U1 = U;
    for (std::size_t i = 0; i < U.values.size(); ++i) U1.values[i] += dt * k[i];
    rhs(U1, t + dt, k);
    for (std::size_t i = 0; i < U.values.size(); ++i)
        U.values[i] = 0.5 * U.values[i] + 0.5 * (U1.values[i] + dt * k[i]);
}

}  // namespace gfq
