#include "gfq/boundary.hpp"

#include "gfq/errors.hpp"

namespace gfq {

BcType parse_bc(const std::string& name) {
    if (name == "periodic") return BcType::Periodic;
    if (name == "dirichlet") return BcType::Dirichlet;
    if (name == "slip" || name == "slip-wall" || name == "wall") return BcType::SlipWall;
    throw ConfigError("unknown boundary condition '" + name + "'");
}

std::string to_string(BcType bc) {
    switch (bc) {
        case BcType::Periodic: return "periodic";
        case BcType::Dirichlet: return "dirichlet";
        case BcType::SlipWall: return "slip";
    }
    return "?";
}

void BoundaryConditions::bind(const NodalField& W0, const GasLaw& gas) {
    const CartesianMesh& mesh = W0.mesh();
    if ((bc_x_ == BcType::Periodic) != mesh.periodic1() || (bc_y_ == BcType::Periodic) != mesh.periodic2())
        throw ConfigError("periodic boundary conditions must match the mesh numbering");
    gas_ = gas;
    dirichlet_nodes_.clear();
    held_.clear();
    coords_.clear();
    wall_x_.clear();
    wall_y_.clear();
    for (std::size_t a = 0; a < mesh.node_count(); ++a) {
        const bool bx = mesh.on_boundary1(a), by = mesh.on_boundary2(a);
        const bool dir = (bx && bc_x_ == BcType::Dirichlet) || (by && bc_y_ == BcType::Dirichlet);
        if (dir) {
            dirichlet_nodes_.push_back(a);
            coords_.push_back(mesh.node_coordinates(a));
            for (int c = 0; c < 4; ++c) held_.push_back(W0(a, c));
            continue;
        }
        if (bx && bc_x_ == BcType::SlipWall) wall_x_.push_back(a);
        if (by && bc_y_ == BcType::SlipWall) wall_y_.push_back(a);
    }
}

void BoundaryConditions::apply(NodalField& W, double t) const {
    for (std::size_t i = 0; i < dirichlet_nodes_.size(); ++i) {
        double* w = W.node(dirichlet_nodes_[i]);
        if (data_) {
            const Vec4 v = to_conserved(data_(coords_[i][0], coords_[i][1], t), gas_);
            for (int c = 0; c < 4; ++c) w[c] = v[c];
        } else {
            for (int c = 0; c < 4; ++c) w[c] = held_[4 * i + c];
        }
    }
    for (auto a : wall_x_) W(a, 1) = 0.0;
    for (auto a : wall_y_) W(a, 2) = 0.0;
}

}  // namespace gfq
