#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gfq {

using Table = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kMaxDegree = 10;

// Gauss-Lobatto rule on [0,1].
struct LobattoRule {
    int degree = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return degree + 1; }
};

LobattoRule build_lobatto_rule(int K);

// Lagrange basis on the rule's nodes, evaluated at an arbitrary point.
std::vector<double> lagrange_values(const LobattoRule& rule, double xi);

// One-dimensional elemental operators. After scale_to_element the mass and
// integration tables carry the element length h; D is length independent.
struct ElementOperators {
    int degree = 0;
    double h = 1.0;
    LobattoRule rule;
    std::vector<double> mass;  // diagonal, h * w_p
    Table M;                   // the same mass as a dense diagonal table
    Table D;                   // D_ab = int phi_a phi_b'
    Table I;                   // I_pk = int_0^{xi_p} phi_k
    Table theta;               // I on reference [0,1], used as DeC coefficients
    Table nodal_derivative;    // phi_b'(x_a) = M^{-1} D
    Table DI;                  // D * I, replaces M in the GFQ divergence
    Table DtMinv;              // D^T M^{-1}, test-function gradient in the SUPG terms

    int size() const { return degree + 1; }
};

ElementOperators build_element_operators(const LobattoRule& rule);
ElementOperators scale_to_element(const ElementOperators& ops, double h);

}  // namespace gfq
