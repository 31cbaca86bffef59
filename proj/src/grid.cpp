#include "gfq/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gfq/errors.hpp"

namespace gfq {

CartesianMesh::CartesianMesh(const MeshSpec& spec) : spec_(spec), rule_(build_lobatto_rule(spec.degree)) {
    if (spec.n1 < 1 || spec.n2 < 1) throw InvalidGeometry("element counts must be at least 1");
    if (!(spec.length1 > 0.0) || !(spec.length2 > 0.0)) throw InvalidGeometry("domain lengths must be positive");
    const std::size_t m = nodes_per_element();
    connectivity_.resize(element_count() * m);
    const int n = nodes_per_side();
    for (int j = 0; j < spec.n2; ++j)
        for (int i = 0; i < spec.n1; ++i) {
            const std::size_t e = static_cast<std::size_t>(i) + static_cast<std::size_t>(spec.n1) * j;
            for (int k = 0; k < n; ++k)
                for (int p = 0; p < n; ++p) connectivity_[e * m + p + n * k] = local_to_global(i, j, p, k);
        }
}

std::size_t CartesianMesh::local_to_global(int i, int j, int p, int k) const {
    const int K = spec_.degree;
    if (i < 0 || i >= spec_.n1 || j < 0 || j >= spec_.n2 || p < 0 || p > K || k < 0 || k > K)
        throw std::out_of_range("local index out of range");
    int a1 = i * K + p;
    int a2 = j * K + k;
    if (spec_.periodic1) a1 %= spec_.n1 * K;
    if (spec_.periodic2) a2 %= spec_.n2 * K;
    return static_cast<std::size_t>(a1) + static_cast<std::size_t>(line_nodes1()) * a2;
}

namespace {

void split_line_index(int a, int K, int& elem, int& local) {
    if (a == 0) {
        elem = 0;
        local = 0;
    } else {
        elem = (a - 1) / K;
        local = a - elem * K;
    }
}

}  // namespace

LocalIndex CartesianMesh::global_to_local(std::size_t alpha) const {
    if (alpha >= node_count()) throw std::out_of_range("global index out of range");
    const int a1 = static_cast<int>(alpha % line_nodes1());
    const int a2 = static_cast<int>(alpha / line_nodes1());
    LocalIndex out{};
    split_line_index(a1, spec_.degree, out.i, out.p);
    split_line_index(a2, spec_.degree, out.j, out.k);
    return out;
}

std::array<double, 2> CartesianMesh::node_coordinates(std::size_t alpha) const {
    const LocalIndex l = global_to_local(alpha);
    return {coordinate1(l.i, l.p), coordinate2(l.j, l.k)};
}

bool CartesianMesh::on_boundary1(std::size_t alpha) const {
    if (spec_.periodic1) return false;
    const int a1 = static_cast<int>(alpha % line_nodes1());
    return a1 == 0 || a1 == line_nodes1() - 1;
}

bool CartesianMesh::on_boundary2(std::size_t alpha) const {
    if (spec_.periodic2) return false;
    const int a2 = static_cast<int>(alpha / line_nodes1());
    return a2 == 0 || a2 == line_nodes2() - 1;
}

void NodalField::check_finite() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            const std::size_t alpha = i / components_;
            const auto xy = mesh_->node_coordinates(alpha);
            throw AdmissibilityError("non-finite value at node " + std::to_string(alpha), xy[0], xy[1]);
        }
    }
}

void gather_element(const NodalField& field, std::size_t e, std::span<double> block) {
    const int s = field.components();
    const auto nodes = field.mesh().element_nodes(e);
    if (block.size() != nodes.size() * s) throw std::invalid_argument("gather: block size mismatch");
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        const double* src = field.node(nodes[a]);
        for (int c = 0; c < s; ++c) block[a * s + c] = src[c];
    }
}

void scatter_element(NodalField& field, std::size_t e, std::span<const double> block) {
    const int s = field.components();
    const auto nodes = field.mesh().element_nodes(e);
    if (block.size() != nodes.size() * s) throw std::invalid_argument("scatter: block size mismatch");
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        double* dst = field.node(nodes[a]);
        for (int c = 0; c < s; ++c) dst[c] += block[a * s + c];
    }
}

std::vector<double> lumped_mass_diagonal(const CartesianMesh& mesh) {
    NodalField diag(mesh, 1);
    const int n = mesh.nodes_per_side();
    const auto& w = mesh.rule().weights;
    std::vector<double> block(mesh.nodes_per_element());
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) block[p + n * k] = w[p] * mesh.h1() * w[k] * mesh.h2();
    for (std::size_t e = 0; e < mesh.element_count(); ++e) scatter_element(diag, e, block);
    return diag.values();
}

}  // namespace gfq
