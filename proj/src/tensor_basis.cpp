#include "gfq/tensor_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gfq/errors.hpp"

namespace gfq {

LobattoRule build_lobatto_rule(int K) {
    if (K < 1 || K > kMaxDegree)
        throw UnsupportedDegree("polynomial degree must lie in [1, 10], got " + std::to_string(K));

    const int n = K + 1;
    // Newton on (1-x^2) P_K'(x) over [-1,1], Chebyshev-Lobatto start.
    std::vector<double> x(n), xold(n);
    std::vector<double> P(static_cast<std::size_t>(n) * (n + 1));
    auto Pat = [&](int i, int k) -> double& { return P[static_cast<std::size_t>(i) * (n + 1) + k]; };
    for (int i = 0; i < n; ++i) x[i] = std::cos(M_PI * i / K);

    for (int it = 0; it < 100; ++it) {
        xold = x;
        for (int i = 0; i < n; ++i) {
            Pat(i, 0) = 1.0;
            Pat(i, 1) = x[i];
            for (int k = 2; k <= K; ++k)
                Pat(i, k) = ((2 * k - 1) * x[i] * Pat(i, k - 1) - (k - 1) * Pat(i, k - 2)) / k;
            x[i] = xold[i] - (x[i] * Pat(i, K) - Pat(i, K - 1)) / (n * Pat(i, K));
        }
        double change = 0.0;
        for (int i = 0; i < n; ++i) change = std::max(change, std::abs(x[i] - xold[i]));
        if (change <= 1e-15) break;
    }
    for (int i = 0; i < n; ++i) {
        double p0 = 1.0, p1 = x[i];
        for (int k = 2; k <= K; ++k) {
            const double p2 = ((2 * k - 1) * x[i] * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        Pat(i, K) = K == 0 ? 1.0 : p1;
    }

    LobattoRule rule;
    rule.degree = K;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // x is descending from +1; map to ascending nodes on [0,1].
    for (int i = 0; i < n; ++i) {
        const int j = n - 1 - i;
        rule.nodes[j] = 0.5 * (1.0 + x[i]);
        rule.weights[j] = 1.0 / (K * n * Pat(i, K) * Pat(i, K));
    }
    // Enforce exact symmetry and endpoints.
    for (int p = 0; p <= K / 2; ++p) {
        const int q = K - p;
        const double a = 0.5 * (rule.nodes[p] + 1.0 - rule.nodes[q]);
        const double w = 0.5 * (rule.weights[p] + rule.weights[q]);
        rule.nodes[p] = a;
        rule.nodes[q] = 1.0 - a;
        rule.weights[p] = rule.weights[q] = w;
    }
    rule.nodes[0] = 0.0;
    rule.nodes[K] = 1.0;
    if (K % 2 == 0) rule.nodes[K / 2] = 0.5;
    return rule;
}

namespace {

std::vector<double> barycentric_weights(const std::vector<double>& nodes) {
    const std::size_t n = nodes.size();
    std::vector<double> lam(n, 1.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m)
            if (m != j) lam[j] /= (nodes[j] - nodes[m]);
    return lam;
}

}  // namespace

std::vector<double> lagrange_values(const LobattoRule& rule, double xi) {
    const std::size_t n = rule.nodes.size();
    std::vector<double> phi(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (xi == rule.nodes[j]) {
            phi[j] = 1.0;
            return phi;
        }
    }
    const auto lam = barycentric_weights(rule.nodes);
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        phi[j] = lam[j] / (xi - rule.nodes[j]);
        denom += phi[j];
    }
    for (auto& v : phi) v /= denom;
    return phi;
}

ElementOperators build_element_operators(const LobattoRule& rule) {
    const int n = rule.size();
    ElementOperators ops;
    ops.degree = rule.degree;
    ops.h = 1.0;
    ops.rule = rule;
    ops.mass = rule.weights;

    const auto lam = barycentric_weights(rule.nodes);
    ops.nodal_derivative = Table::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        double diag = 0.0;
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const double v = (lam[b] / lam[a]) / (rule.nodes[a] - rule.nodes[b]);
            ops.nodal_derivative(a, b) = v;
            diag -= v;
        }
        ops.nodal_derivative(a, a) = diag;
    }
    // Integrand phi_a phi_b' has degree 2K-1: the Lobatto rule is exact.
    ops.D = Table::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ops.D(a, b) = rule.weights[a] * ops.nodal_derivative(a, b);

    // Map the rule onto [0, xi_p]; degree K integrands are integrated exactly.
    ops.I = Table::Zero(n, n);
    for (int p = 1; p < n; ++p) {
        const double len = rule.nodes[p];
        for (int q = 0; q < n; ++q) {
            const auto phi = lagrange_values(rule, len * rule.nodes[q]);
            for (int k = 0; k < n; ++k) ops.I(p, k) += len * rule.weights[q] * phi[k];
        }
    }
    for (int k = 0; k < n; ++k) ops.I(n - 1, k) = rule.weights[k];
    ops.theta = ops.I;
    ops.DI = ops.D * ops.I;
    ops.M = Table::Zero(n, n);
    ops.DtMinv = Table::Zero(n, n);
    for (int a = 0; a < n; ++a) ops.M(a, a) = ops.mass[a];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ops.DtMinv(a, b) = ops.D(b, a) / ops.mass[b];
    return ops;
}

ElementOperators scale_to_element(const ElementOperators& ops, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidGeometry("element length must be positive");
    ElementOperators out = ops;
    out.h = ops.h * h;
    for (auto& m : out.mass) m *= h;
    out.M *= h;
    out.I *= h;
    out.DI *= h;
    out.nodal_derivative /= h;
    out.DtMinv /= h;
    return out;
}

}  // namespace gfq
