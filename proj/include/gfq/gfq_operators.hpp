#pragma once

#include <memory>
#include <vector>

#include "gfq/grid.hpp"
#include "gfq/tensor_basis.hpp"

namespace gfq {

using Block = std::vector<double>;

// out (+)= alpha (A (x) B) in, where A acts on the x index p and B on the y
// index k of a block laid out as in[(p + n*k)*s + c]. tmp holds n*n*s values.
void kron_apply(const Table& A, const Table& B, const double* in, double* out, double* tmp, int n, int s,
                double alpha = 1.0, bool accumulate = false);
void apply_x(const Table& A, const double* in, double* out, int n, int s, bool accumulate = false);
void apply_y(const Table& B, const double* in, double* out, int n, int s, bool accumulate = false);

// (D1 (x) Q2) F1 + (Q1 (x) D2) F2 - (Q1 (x) Q2) S. Q = M gives the standard
// Galerkin divergence, Q = D I the global-flux one. S may be null.
void mixed_divergence(const double* F1, const double* F2, const double* S, const Table& D1, const Table& Q1,
                      const Table& D2, const Table& Q2, double* out, double* tmp, int n, int s);

Block standard_divergence_element(const Block& F1, const Block& F2, const ElementOperators& ox,
                                  const ElementOperators& oy, int s = 4);
Block gfq_divergence_element(const Block& F1, const Block& F2, const ElementOperators& ox,
                             const ElementOperators& oy, int s = 4);
// -(I1 (x) I2) S, anchored at zero on the lower-left node.
Block source_primitive_element(const Block& S, const ElementOperators& ox, const ElementOperators& oy, int s = 4);
// Subcell integrals of div F_h from the element's lower-left node.
Block subcell_residual(const Block& F1, const Block& F2, const ElementOperators& ox, const ElementOperators& oy,
                       int s = 4);
// DIV - (D1 I1 (x) D2 I2) S.
Block gfq_residual_from_fluxes(const Block& F1, const Block& F2, const Block& S, const ElementOperators& ox,
                               const ElementOperators& oy, int s = 4);

struct ElementResidual {
    Block galerkin;          // R_h^E
    Block subcell;           // Psi
    Block source_primitive;  // S-potential; Psi + S-potential vanishes in the discrete kernel
};

ElementResidual gfq_residual_element(const Block& F1, const Block& F2, const Block& S, const ElementOperators& ox,
                                     const ElementOperators& oy, int s = 4);

enum class Scheme { SupgStd, SupgGfq, FvHllc };

// Galerkin part of the residual assembled from nodal flux/source fields.
NodalField assemble_divergence(const NodalField& F1, const NodalField& F2, const NodalField* S, Scheme scheme);

// Line-integrated fluxes on the unwrapped node lattice of the mesh.
struct FluxPotentials {
    std::shared_ptr<CartesianMesh> lattice;  // non-periodic copy of the mesh
    NodalField F1;                           // int F1 dy, zero on the bottom boundary
    NodalField F2;                           // int F2 dx, zero on the left boundary
    std::vector<Block> source;               // per element, anchored locally
};

FluxPotentials compute_potentials_global(const NodalField& F1, const NodalField& F2, const NodalField* S);
// (D1 (x) D2)(F1pot + F2pot + Spot) per element, scattered into the mesh numbering of `like`.
NodalField assemble_from_potentials(const FluxPotentials& pot, const CartesianMesh& mesh);

// Given F1 and S on a non-periodic mesh, returns F2 such that every element
// satisfies Psi + S-potential = 0. The free anchors (bottom row and left
// column of F2) are set to zero.
NodalField kernel_synthesize(const NodalField& F1, const NodalField& S);

}  // namespace gfq
