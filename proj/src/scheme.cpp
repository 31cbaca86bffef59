#include "gfq/scheme.hpp"

#include <cmath>
#include <string>

#include "gfq/errors.hpp"
#include "gfq/supg_stabilization.hpp"
#include "gfq/wb_gravity.hpp"

namespace gfq {

SpatialOperator::SpatialOperator(const CartesianMesh& mesh, const GasLaw& gas, const GravityField& gravity,
                                 const SchemeOptions& options)
    : mesh_(mesh), gas_(gas), options_(options) {
    if (options.scheme == Scheme::FvHllc) throw std::invalid_argument("SpatialOperator handles the SUPG schemes only");
    const auto ref = build_element_operators(mesh.rule());
    ox_ = scale_to_element(ref, mesh.h1());
    oy_ = scale_to_element(ref, mesh.h2());
    mass_ = lumped_mass_diagonal(mesh);
    tau_h1_ = mesh.h1() / mesh.degree();
    tau_h2_ = mesh.h2() / mesh.degree();
    gravity_on_ = gravity.active();
    if (gravity_on_) {
        phi_.resize(mesh.node_count());
        grad_.resize(mesh.node_count());
        for (std::size_t a = 0; a < mesh.node_count(); ++a) {
            const auto xy = mesh.node_coordinates(a);
            phi_[a] = gravity.phi(xy[0], xy[1]);
            grad_[a] = gravity.grad ? gravity.grad(xy[0], xy[1]) : std::array<double, 2>{0.0, 0.0};
        }
    }
    work_.resize(static_cast<std::size_t>(mesh.nodes_per_element()) * 4 * 8);
}

void SpatialOperator::element_fluxes(std::size_t e, const double* W, double* F1, double* F2, double* S) const {
    const int m = mesh_.nodes_per_element();
    const auto nodes = mesh_.element_nodes(e);
    PrimitiveState q[(kMaxDegree + 1) * (kMaxDegree + 1)];
    for (int a = 0; a < m; ++a) {
        const Vec4 w(W[4 * a], W[4 * a + 1], W[4 * a + 2], W[4 * a + 3]);
        try {
            q[a] = to_primitive(w, gas_);
        } catch (const AdmissibilityError& err) {
            const auto xy = mesh_.node_coordinates(nodes[a]);
            throw AdmissibilityError(std::string(err.what()) + " at node " + std::to_string(nodes[a]), xy[0], xy[1]);
        }
        Eigen::Map<Vec4>(F1 + 4 * a) = flux(q[a], 1, gas_);
        Eigen::Map<Vec4>(F2 + 4 * a) = flux(q[a], 2, gas_);
    }
    if (!S) return;
    if (!gravity_on_) {
        for (int i = 0; i < 4 * m; ++i) S[i] = 0.0;
        return;
    }
    if (options_.well_balanced) {
        double rho[(kMaxDegree + 1) * (kMaxDegree + 1)], phi[(kMaxDegree + 1) * (kMaxDegree + 1)];
        std::array<double, 2> g[(kMaxDegree + 1) * (kMaxDegree + 1)];
        for (int a = 0; a < m; ++a) {
            rho[a] = q[a].rho;
            phi[a] = phi_[nodes[a]];
        }
        const WbReference ref{q[0].p, q[0].rho};
        wb_momentum_source_element(rho, phi, ref, ox_, oy_, g);
        for (int a = 0; a < m; ++a) {
            S[4 * a] = 0.0;
            S[4 * a + 1] = -g[a][0];
            S[4 * a + 2] = -g[a][1];
            S[4 * a + 3] = wb_energy_source(g[a], q[a].u, q[a].v);
        }
    } else {
        for (int a = 0; a < m; ++a) {
            const Vec4 w(W[4 * a], W[4 * a + 1], W[4 * a + 2], W[4 * a + 3]);
            Eigen::Map<Vec4>(S + 4 * a) = gravity_source(w, grad_[nodes[a]]);
        }
    }
}

void SpatialOperator::element_kernel(std::size_t e, const double* W, const double* Wdot, double* out) const {
    const int n = mesh_.nodes_per_side();
    const int m = n * n;
    const std::size_t len = static_cast<std::size_t>(m) * 4;
    double* F1 = work_.data();
    double* F2 = F1 + len;
    double* S = F2 + len;
    double* r = S + len;
    double* tmp = r + len;
    double* tmp2 = tmp + len;

    element_fluxes(e, W, F1, F2, S);
    const bool gfq = options_.scheme == Scheme::SupgGfq;
    const Table& Qx = gfq ? ox_.DI : ox_.M;
    const Table& Qy = gfq ? oy_.DI : oy_.M;
    mixed_divergence(F1, F2, gravity_on_ ? S : nullptr, ox_.D, Qx, oy_.D, Qy, out, tmp, n, 4);

    for (std::size_t i = 0; i < len; ++i) r[i] = out[i];
    if (Wdot) {
        for (int k = 0; k < n; ++k)
            for (int p = 0; p < n; ++p) {
                const double w = ox_.mass[p] * oy_.mass[k];
                const int a = p + n * k;
                for (int c = 0; c < 4; ++c) r[4 * a + c] += w * Wdot[4 * a + c];
            }
    }

    // Streamline-upwind terms with nodal J tau.
    for (int a = 0; a < m; ++a) {
        const Vec4 w(W[4 * a], W[4 * a + 1], W[4 * a + 2], W[4 * a + 3]);
        const PrimitiveState q = to_primitive(w, gas_);
        const double t = tau_scalar(q, tau_h1_, tau_h2_, gas_, options_.tau_scale);
        Eigen::Map<const Vec4> ra(r + 4 * a);
        Eigen::Map<Vec4>(tmp + 4 * a) = t * (jacobian(q, 1, gas_) * ra);
        Eigen::Map<Vec4>(tmp2 + 4 * a) = t * (jacobian(q, 2, gas_) * ra);
    }
    apply_x(ox_.DtMinv, tmp, out, n, 4, true);
    apply_y(oy_.DtMinv, tmp2, out, n, 4, true);
}

void SpatialOperator::residual(const NodalField& W, const NodalField* Wdot, NodalField& out) const {
    const std::size_t len = static_cast<std::size_t>(mesh_.nodes_per_element()) * 4;
    std::fill(out.values().begin(), out.values().end(), 0.0);
    std::vector<double> w(len), wd(len), blk(len);
    for (std::size_t e = 0; e < mesh_.element_count(); ++e) {
        gather_element(W, e, w);
        if (Wdot) gather_element(*Wdot, e, wd);
        element_kernel(e, w.data(), Wdot ? wd.data() : nullptr, blk.data());
        scatter_element(out, e, blk);
    }
}

Block SpatialOperator::element_galerkin(std::size_t e, const Block& W) const {
    const int n = mesh_.nodes_per_side();
    const std::size_t len = W.size();
    Block F1(len), F2(len), S(len), out(len), tmp(len);
    element_fluxes(e, W.data(), F1.data(), F2.data(), S.data());
    const bool gfq = options_.scheme == Scheme::SupgGfq;
    mixed_divergence(F1.data(), F2.data(), gravity_on_ ? S.data() : nullptr, ox_.D, gfq ? ox_.DI : ox_.M, oy_.D,
                     gfq ? oy_.DI : oy_.M, out.data(), tmp.data(), n, 4);
    return out;
}

Block SpatialOperator::element_residual(std::size_t e, const Block& W, const Block* Wdot) const {
    Block out(W.size());
    element_kernel(e, W.data(), Wdot ? Wdot->data() : nullptr, out.data());
    return out;
}

}  // namespace gfq
