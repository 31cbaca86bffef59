#include "gfq/gfq_operators.hpp"

#include <cmath>
#include <stdexcept>

#include "gfq/errors.hpp"

namespace gfq {

void apply_x(const Table& A, const double* in, double* out, int n, int s, bool accumulate) {
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
            double* o = out + (p + n * k) * s;
            for (int c = 0; c < s; ++c) {
                double acc = 0.0;
                for (int q = 0; q < n; ++q) acc += A(p, q) * in[(q + n * k) * s + c];
                o[c] = accumulate ? o[c] + acc : acc;
            }
        }
}

void apply_y(const Table& B, const double* in, double* out, int n, int s, bool accumulate) {
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
            double* o = out + (p + n * k) * s;
            for (int c = 0; c < s; ++c) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l) acc += B(k, l) * in[(p + n * l) * s + c];
                o[c] = accumulate ? o[c] + acc : acc;
            }
        }
}

void kron_apply(const Table& A, const Table& B, const double* in, double* out, double* tmp, int n, int s,
                double alpha, bool accumulate) {
    const int len = n * n * s;
    apply_y(B, in, tmp, n, s, false);
    if (alpha != 1.0)
        for (int i = 0; i < len; ++i) tmp[i] *= alpha;
    apply_x(A, tmp, out, n, s, accumulate);
}

void mixed_divergence(const double* F1, const double* F2, const double* S, const Table& D1, const Table& Q1,
                      const Table& D2, const Table& Q2, double* out, double* tmp, int n, int s) {
    kron_apply(D1, Q2, F1, out, tmp, n, s, 1.0, false);
    kron_apply(Q1, D2, F2, out, tmp, n, s, 1.0, true);
    if (S) kron_apply(Q1, Q2, S, out, tmp, n, s, -1.0, true);
}

namespace {

Block zeros_like(const ElementOperators& ox, int s) { return Block(static_cast<std::size_t>(ox.size()) * ox.size() * s, 0.0); }

}  // namespace

Block standard_divergence_element(const Block& F1, const Block& F2, const ElementOperators& ox,
                                  const ElementOperators& oy, int s) {
    Block out = zeros_like(ox, s), tmp = out;
    mixed_divergence(F1.data(), F2.data(), nullptr, ox.D, ox.M, oy.D, oy.M, out.data(), tmp.data(), ox.size(), s);
    return out;
}

Block gfq_divergence_element(const Block& F1, const Block& F2, const ElementOperators& ox,
                             const ElementOperators& oy, int s) {
    Block out = zeros_like(ox, s), tmp = out;
    mixed_divergence(F1.data(), F2.data(), nullptr, ox.D, ox.DI, oy.D, oy.DI, out.data(), tmp.data(), ox.size(), s);
    return out;
}

Block source_primitive_element(const Block& S, const ElementOperators& ox, const ElementOperators& oy, int s) {
    Block out = zeros_like(ox, s), tmp = out;
    kron_apply(ox.I, oy.I, S.data(), out.data(), tmp.data(), ox.size(), s, -1.0, false);
    return out;
}

Block subcell_residual(const Block& F1, const Block& F2, const ElementOperators& ox, const ElementOperators& oy,
                       int s) {
    const int n = ox.size();
    Block g1 = zeros_like(ox, s), g2 = g1, out = g1;
    // Differences from the anchor column (p=0) for F1 and anchor row (k=0) for F2.
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
            for (int c = 0; c < s; ++c) {
                g1[(p + n * k) * s + c] = F1[(p + n * k) * s + c] - F1[(n * k) * s + c];
                g2[(p + n * k) * s + c] = F2[(p + n * k) * s + c] - F2[p * s + c];
            }
    apply_y(oy.I, g1.data(), out.data(), n, s, false);
    apply_x(ox.I, g2.data(), out.data(), n, s, true);
    return out;
}

Block gfq_residual_from_fluxes(const Block& F1, const Block& F2, const Block& S, const ElementOperators& ox,
                               const ElementOperators& oy, int s) {
    Block out = zeros_like(ox, s), tmp = out;
    mixed_divergence(F1.data(), F2.data(), S.data(), ox.D, ox.DI, oy.D, oy.DI, out.data(), tmp.data(), ox.size(), s);
    return out;
}

ElementResidual gfq_residual_element(const Block& F1, const Block& F2, const Block& S, const ElementOperators& ox,
                                     const ElementOperators& oy, int s) {
    ElementResidual r;
    r.galerkin = gfq_residual_from_fluxes(F1, F2, S, ox, oy, s);
    r.subcell = subcell_residual(F1, F2, ox, oy, s);
    r.source_primitive = source_primitive_element(S, ox, oy, s);
    return r;
}

NodalField assemble_divergence(const NodalField& F1, const NodalField& F2, const NodalField* S, Scheme scheme) {
    if (scheme == Scheme::FvHllc) throw std::invalid_argument("assemble_divergence: finite-volume scheme has no nodal divergence");
    const CartesianMesh& mesh = F1.mesh();
    const int s = F1.components();
    if (F2.components() != s || (S && S->components() != s)) throw std::invalid_argument("component mismatch");
    const auto ref = build_element_operators(mesh.rule());
    const auto ox = scale_to_element(ref, mesh.h1());
    const auto oy = scale_to_element(ref, mesh.h2());
    const Table& Qx = scheme == Scheme::SupgGfq ? ox.DI : ox.M;
    const Table& Qy = scheme == Scheme::SupgGfq ? oy.DI : oy.M;
    const int n = mesh.nodes_per_side();
    const std::size_t len = static_cast<std::size_t>(n) * n * s;
    Block f1(len), f2(len), src(len), out(len), tmp(len);
    NodalField result(mesh, s);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        gather_element(F1, e, f1);
        gather_element(F2, e, f2);
        if (S) gather_element(*S, e, src);
        mixed_divergence(f1.data(), f2.data(), S ? src.data() : nullptr, ox.D, Qx, oy.D, Qy, out.data(), tmp.data(), n,
                         s);
        scatter_element(result, e, out);
    }
    return result;
}

namespace {

MeshSpec unwrapped(const MeshSpec& spec) {
    MeshSpec u = spec;
    u.periodic1 = u.periodic2 = false;
    return u;
}

}  // namespace

FluxPotentials compute_potentials_global(const NodalField& F1, const NodalField& F2, const NodalField* S) {
    const CartesianMesh& mesh = F1.mesh();
    const int s = F1.components();
    FluxPotentials pot;
    pot.lattice = std::make_shared<CartesianMesh>(unwrapped(mesh.spec()));
    pot.F1 = NodalField(*pot.lattice, s);
    pot.F2 = NodalField(*pot.lattice, s);
    const auto ref = build_element_operators(mesh.rule());
    const auto ox = scale_to_element(ref, mesh.h1());
    const auto oy = scale_to_element(ref, mesh.h2());
    const int n = mesh.nodes_per_side();
    const std::size_t len = static_cast<std::size_t>(n) * n * s;
    Block f(len), integ(len);

    // Vertical sweep for F1, element rows bottom to top.
    for (int j = 0; j < mesh.n2(); ++j)
        for (int i = 0; i < mesh.n1(); ++i) {
            const std::size_t e = static_cast<std::size_t>(i) + static_cast<std::size_t>(mesh.n1()) * j;
            gather_element(F1, e, f);
            apply_y(oy.I, f.data(), integ.data(), n, s, false);
            const auto nodes = pot.lattice->element_nodes(e);
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p) {
                    const double* anchor = pot.F1.node(nodes[p]);
                    double* dst = pot.F1.node(nodes[p + n * k]);
                    if (k == 0) continue;
                    for (int c = 0; c < s; ++c) dst[c] = anchor[c] + integ[(p + n * k) * s + c];
                }
        }
    // Horizontal sweep for F2, element columns left to right.
    for (int i = 0; i < mesh.n1(); ++i)
        for (int j = 0; j < mesh.n2(); ++j) {
            const std::size_t e = static_cast<std::size_t>(i) + static_cast<std::size_t>(mesh.n1()) * j;
            gather_element(F2, e, f);
            apply_x(ox.I, f.data(), integ.data(), n, s, false);
            const auto nodes = pot.lattice->element_nodes(e);
            for (int k = 0; k < n; ++k)
                for (int p = 1; p < n; ++p) {
                    const double* anchor = pot.F2.node(nodes[n * k]);
                    double* dst = pot.F2.node(nodes[p + n * k]);
                    for (int c = 0; c < s; ++c) dst[c] = anchor[c] + integ[(p + n * k) * s + c];
                }
        }
    if (S) {
        pot.source.resize(mesh.element_count());
        for (std::size_t e = 0; e < mesh.element_count(); ++e) {
            gather_element(*S, e, f);
            pot.source[e] = source_primitive_element(f, ox, oy, s);
        }
    }
    return pot;
}

NodalField assemble_from_potentials(const FluxPotentials& pot, const CartesianMesh& mesh) {
    const int s = pot.F1.components();
    const auto ref = build_element_operators(mesh.rule());
    const auto ox = scale_to_element(ref, mesh.h1());
    const auto oy = scale_to_element(ref, mesh.h2());
    const int n = mesh.nodes_per_side();
    const std::size_t len = static_cast<std::size_t>(n) * n * s;
    Block a(len), b(len), out(len), tmp(len);
    NodalField result(mesh, s);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        gather_element(pot.F1, e, a);
        gather_element(pot.F2, e, b);
        for (std::size_t q = 0; q < len; ++q) a[q] += b[q];
        if (!pot.source.empty())
            for (std::size_t q = 0; q < len; ++q) a[q] += pot.source[e][q];
        kron_apply(ox.D, oy.D, a.data(), out.data(), tmp.data(), n, s);
        scatter_element(result, e, out);
    }
    return result;
}

NodalField kernel_synthesize(const NodalField& F1, const NodalField& S) {
    const CartesianMesh& mesh = F1.mesh();
    if (mesh.periodic1() || mesh.periodic2())
        throw InvalidGeometry("kernel synthesis requires non-periodic numbering");
    const int s = F1.components();
    const int n = mesh.nodes_per_side();
    const int K = mesh.degree();
    const auto ref = build_element_operators(mesh.rule());
    const auto ox = scale_to_element(ref, mesh.h1());
    const auto oy = scale_to_element(ref, mesh.h2());

    // LU of the interior block I[1..K][1..K].
    Eigen::MatrixXd sub(K, K);
    for (int p = 1; p <= K; ++p)
        for (int l = 1; l <= K; ++l) sub(p - 1, l - 1) = ox.I(p, l);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible()) throw std::runtime_error("kernel synthesis: singular integration sub-block");

    NodalField F2(mesh, s);
    const std::size_t len = static_cast<std::size_t>(n) * n * s;
    Block f1(len), src(len), psi1(len), g(len), tmp(len);
    Eigen::VectorXd rhs(K);
    for (int j = 0; j < mesh.n2(); ++j)
        for (int i = 0; i < mesh.n1(); ++i) {
            const std::size_t e = static_cast<std::size_t>(i) + static_cast<std::size_t>(mesh.n1()) * j;
            gather_element(F1, e, f1);
            gather_element(S, e, src);
            // psi1 = (1 (x) I2)(F1 - F1 at p=0) and the source primitive.
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int c = 0; c < s; ++c) g[(p + n * k) * s + c] = f1[(p + n * k) * s + c] - f1[(n * k) * s + c];
            apply_y(oy.I, g.data(), psi1.data(), n, s, false);
            kron_apply(ox.I, oy.I, src.data(), tmp.data(), g.data(), n, s, -1.0, false);
            const auto nodes = mesh.element_nodes(e);
            for (int k = 1; k < n; ++k)
                for (int c = 0; c < s; ++c) {
                    // I1 G = -(psi1 + Spot) with G_{lk} = F2_{lk} - F2_{l0}; G_{0k} is known.
                    const double G0 = F2(nodes[n * k], c) - F2(nodes[0], c);
                    for (int p = 1; p <= K; ++p)
                        rhs[p - 1] = -(psi1[(p + n * k) * s + c] + tmp[(p + n * k) * s + c]) - ox.I(p, 0) * G0;
                    const Eigen::VectorXd G = lu.solve(rhs);
                    for (int p = 1; p <= K; ++p) F2(nodes[p + n * k], c) = F2(nodes[p], c) + G[p - 1];
                }
        }
    return F2;
}

}  // namespace gfq
