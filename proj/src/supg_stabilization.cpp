#include "gfq/supg_stabilization.hpp"

namespace gfq {

StabContext make_stab_context(const Block& W, const ElementOperators& ox, const ElementOperators& oy,
                              const GasLaw& gas, double tau_scale) {
    StabContext ctx;
    ctx.ox = &ox;
    ctx.oy = &oy;
    const std::size_t m = W.size() / 4;
    ctx.J1tau.resize(m);
    ctx.J2tau.resize(m);
    for (std::size_t a = 0; a < m; ++a) {
        const Vec4 w(W[4 * a], W[4 * a + 1], W[4 * a + 2], W[4 * a + 3]);
        const PrimitiveState q = to_primitive(w, gas);
        const double t = tau_scalar(q, ox.h / ox.degree, oy.h / oy.degree, gas, tau_scale);
        ctx.J1tau[a] = t * jacobian(q, 1, gas);
        ctx.J2tau[a] = t * jacobian(q, 2, gas);
    }
    return ctx;
}

void stabilize(const double* r, const StabContext& ctx, double* out, double* tmp, bool accumulate) {
    const int n = ctx.ox->size();
    const int m = n * n;
    for (int a = 0; a < m; ++a) {
        Eigen::Map<const Vec4> ra(r + 4 * a);
        Eigen::Map<Vec4>(tmp + 4 * a) = ctx.J1tau[a] * ra;
    }
    apply_x(ctx.ox->DtMinv, tmp, out, n, 4, accumulate);
    for (int a = 0; a < m; ++a) {
        Eigen::Map<const Vec4> ra(r + 4 * a);
        Eigen::Map<Vec4>(tmp + 4 * a) = ctx.J2tau[a] * ra;
    }
    apply_y(ctx.oy->DtMinv, tmp, out, n, 4, true);
}

Block stabilize(const Block& r, const StabContext& ctx) {
    Block out(r.size()), tmp(r.size());
    stabilize(r.data(), ctx, out.data(), tmp.data());
    return out;
}

Block supg_mass_apply(const Block& Wdot, const StabContext& ctx) {
    const int n = ctx.ox->size();
    Block mw(Wdot.size()), tmp(Wdot.size());
    kron_apply(ctx.ox->M, ctx.oy->M, Wdot.data(), mw.data(), tmp.data(), n, 4);
    return stabilize(mw, ctx);
}

Block st_h_element(const Block& F1, const Block& F2, const Block& S, const StabContext& ctx) {
    Block r(F1.size()), tmp(F1.size());
    mixed_divergence(F1.data(), F2.data(), S.data(), ctx.ox->D, ctx.ox->M, ctx.oy->D, ctx.oy->M, r.data(), tmp.data(),
                     ctx.ox->size(), 4);
    return stabilize(r, ctx);
}

Block ST_h_element(const Block& F1, const Block& F2, const Block& S, const StabContext& ctx) {
    Block r(F1.size()), tmp(F1.size());
    mixed_divergence(F1.data(), F2.data(), S.data(), ctx.ox->D, ctx.ox->DI, ctx.oy->D, ctx.oy->DI, r.data(),
                     tmp.data(), ctx.ox->size(), 4);
    return stabilize(r, ctx);
}

}  // namespace gfq
