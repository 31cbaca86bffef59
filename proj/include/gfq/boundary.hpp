#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gfq/euler_model.hpp"
#include "gfq/grid.hpp"

namespace gfq {

enum class BcType { Periodic, Dirichlet, SlipWall };

BcType parse_bc(const std::string& name);
std::string to_string(BcType bc);

using StateFunction = std::function<PrimitiveState(double x, double y, double t)>;

// Strong boundary treatment applied after every stage update.
// Dirichlet nodes take `data` when given, otherwise keep their values from bind().
class BoundaryConditions {
public:
    BoundaryConditions() = default;
    BoundaryConditions(BcType x, BcType y, StateFunction data = {}) : bc_x_(x), bc_y_(y), data_(std::move(data)) {}

    BcType x() const { return bc_x_; }
    BcType y() const { return bc_y_; }

    void bind(const NodalField& W0, const GasLaw& gas);
    void apply(NodalField& W, double t) const;

private:
    BcType bc_x_ = BcType::Periodic, bc_y_ = BcType::Periodic;
    StateFunction data_;
    GasLaw gas_;
    std::vector<std::size_t> dirichlet_nodes_;
    std::vector<double> held_;
    std::vector<std::array<double, 2>> coords_;
    std::vector<std::size_t> wall_x_, wall_y_;
};

}  // namespace gfq
