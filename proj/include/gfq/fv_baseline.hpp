#pragma once

#include <array>
#include <vector>

#include "gfq/boundary.hpp"
#include "gfq/euler_model.hpp"
#include "gfq/grid.hpp"

namespace gfq {

// N1 x N2 cell averages of the conserved variables, cell (i,j) at index i + N1*j.
struct CellAverageField {
    int n1 = 0, n2 = 0;
    double x0 = 0.0, y0 = 0.0, h1 = 1.0, h2 = 1.0;
    std::vector<double> values;

    double* cell(int i, int j) { return values.data() + 4 * (static_cast<std::size_t>(i) + static_cast<std::size_t>(n1) * j); }
    const double* cell(int i, int j) const {
        return values.data() + 4 * (static_cast<std::size_t>(i) + static_cast<std::size_t>(n1) * j);
    }
    double xc(int i) const { return x0 + h1 * (i + 0.5); }
    double yc(int j) const { return y0 + h2 * (j + 0.5); }
};

CellAverageField make_cell_field(const MeshSpec& spec);
// Cell averages of a point function by tensor Gauss-Lobatto quadrature.
CellAverageField project_cell_averages(const MeshSpec& spec, const std::function<PrimitiveState(double, double)>& f,
                                       const GasLaw& gas, int quad_degree = 4);

Vec4 hllc_flux(const PrimitiveState& L, const PrimitiveState& R, int direction, const GasLaw& gas);
Vec4 hllc_flux(const Vec4& WL, const Vec4& WR, const std::array<double, 2>& n, const GasLaw& gas);

// Interface states of a row of cells: left[f], right[f] are the states on
// either side of interface f between cells f and f+1, f = 0..n-2.
void muscl_reconstruct(const std::vector<PrimitiveState>& row, std::vector<PrimitiveState>& left,
                       std::vector<PrimitiveState>& right);
double minmod(double a, double b);

struct FvOptions {
    bool limit = true;  // false gives the first-order scheme
};

class FvSolver {
public:
    FvSolver(const MeshSpec& spec, const GasLaw& gas, const GravityField& gravity, BcType bc_x, BcType bc_y,
             StateFunction boundary, FvOptions options = {});

    double compute_dt(const CellAverageField& U, double cfl) const;
    // One SSP-RK2 step.
    void step(CellAverageField& U, double t, double dt) const;
    // Semi-discrete right-hand side dU/dt.
    void rhs(const CellAverageField& U, double t, std::vector<double>& out) const;
    void bind(const CellAverageField& U0);

private:
    PrimitiveState ghost(const CellAverageField& U, int i, int j, double t) const;

    MeshSpec spec_;
    GasLaw gas_;
    GravityField gravity_;
    BcType bc_x_, bc_y_;
    StateFunction boundary_;
    FvOptions options_;
    CellAverageField initial_;
    std::vector<std::array<double, 2>> grad_;
};

}  // namespace gfq
