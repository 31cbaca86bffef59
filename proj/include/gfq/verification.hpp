#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfq/euler_model.hpp"
#include "gfq/grid.hpp"

namespace gfq {

struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool must_exceed = false;  // pass when measured > tolerance instead of <=
    bool passed() const { return must_exceed ? measured > tolerance : measured <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool passed() const;
    std::string text() const;
};

const std::vector<std::string>& suite_ids();
// Runs one suite; "all" runs every suite into one report.
SuiteReport run_suite(const std::string& id, std::uint64_t seed);

SuiteReport suite_kernel(std::uint64_t seed, int draws = 100);
SuiteReport suite_conservation(std::uint64_t seed, int draws = 100, long steps = 1000);
SuiteReport suite_objectivity(std::uint64_t seed);
SuiteReport suite_anchor(std::uint64_t seed);
SuiteReport suite_counterexample();
SuiteReport suite_wb_balance();
SuiteReport suite_counting();
SuiteReport suite_stationarity(long steps = 50);

// Minimum-norm Gauss-Newton projection of a gravity-free state onto the
// GFQ discrete kernel Psi_h = 0 (subcell form, every element). The mesh
// must be non-periodic. Returns the final max-norm constraint defect.
double project_to_kernel(NodalField& W, const GasLaw& gas, int max_iterations = 30, double tol = 1e-14);
// Max-norm of Psi_h over all elements and subcells.
double kernel_defect(const NodalField& W, const GasLaw& gas);

}  // namespace gfq
