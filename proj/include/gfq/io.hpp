#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gfq/euler_model.hpp"
#include "gfq/fv_baseline.hpp"
#include "gfq/grid.hpp"

namespace gfq {

// Writes `contents` to path via a sibling temporary file and a rename, so a
// reader never sees a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Legacy ASCII VTK STRUCTURED_GRID over the full node lattice (periodic
// seams duplicated), POINT_DATA rho, p, Mach and velocity, %.16e.
std::string vtk_nodal(const NodalField& W, const GasLaw& gas, const std::string& title);
// Same layout on the cell-centre lattice of an FV field.
std::string vtk_cells(const CellAverageField& U, const GasLaw& gas, const std::string& title);

struct ConvergenceRow {
    int n = 0;
    std::array<double, 4> err{};
    std::array<std::optional<double>, 4> eoa{};
    double seconds = 0.0;
};

// EOA is filled only between consecutive rows whose N doubles and whose
// errors are both positive.
void fill_eoa(std::vector<ConvergenceRow>& rows);
// Columns: N,err_rho,eoa_rho,err_rhou,eoa_rhou,err_rhov,eoa_rhov,err_rhoE,eoa_rhoE,seconds
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace gfq
