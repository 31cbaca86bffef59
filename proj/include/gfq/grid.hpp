#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gfq/tensor_basis.hpp"

namespace gfq {

struct MeshSpec {
    int n1 = 1, n2 = 1;
    int degree = 1;
    double x0 = 0.0, y0 = 0.0;
    double length1 = 1.0, length2 = 1.0;
    bool periodic1 = false, periodic2 = false;
};

struct LocalIndex {
    int i, j, p, k;
};

// Uniform Cartesian mesh of Q_K elements with lexicographic (x fastest)
// numbering of the Gauss-Lobatto nodes. Periodic directions wrap by index.
class CartesianMesh {
public:
    explicit CartesianMesh(const MeshSpec& spec);

    const MeshSpec& spec() const { return spec_; }
    int n1() const { return spec_.n1; }
    int n2() const { return spec_.n2; }
    int degree() const { return spec_.degree; }
    int nodes_per_side() const { return spec_.degree + 1; }
    int nodes_per_element() const { return nodes_per_side() * nodes_per_side(); }
    double h1() const { return spec_.length1 / spec_.n1; }
    double h2() const { return spec_.length2 / spec_.n2; }
    bool periodic1() const { return spec_.periodic1; }
    bool periodic2() const { return spec_.periodic2; }
    const LobattoRule& rule() const { return rule_; }

    int line_nodes1() const { return spec_.periodic1 ? spec_.n1 * spec_.degree : spec_.n1 * spec_.degree + 1; }
    int line_nodes2() const { return spec_.periodic2 ? spec_.n2 * spec_.degree : spec_.n2 * spec_.degree + 1; }
    std::size_t node_count() const { return static_cast<std::size_t>(line_nodes1()) * line_nodes2(); }
    std::size_t element_count() const { return static_cast<std::size_t>(spec_.n1) * spec_.n2; }

    std::size_t local_to_global(int i, int j, int p, int k) const;
    LocalIndex global_to_local(std::size_t alpha) const;
    std::array<double, 2> node_coordinates(std::size_t alpha) const;
    double coordinate1(int i, int p) const { return spec_.x0 + h1() * (i + rule_.nodes[p]); }
    double coordinate2(int j, int k) const { return spec_.y0 + h2() * (j + rule_.nodes[k]); }

    // Global indices of element e = i + n1*j, local order a = p + (K+1)*k.
    std::span<const std::size_t> element_nodes(std::size_t e) const {
        const std::size_t m = nodes_per_element();
        return {connectivity_.data() + e * m, m};
    }

    bool on_boundary1(std::size_t alpha) const;  // x = x0 or x = x0 + L1, non-periodic only
    bool on_boundary2(std::size_t alpha) const;

private:
    MeshSpec spec_;
    LobattoRule rule_;
    std::vector<std::size_t> connectivity_;
};

class NodalField {
public:
    NodalField() = default;
    NodalField(const CartesianMesh& mesh, int components, double fill = 0.0)
        : mesh_(&mesh), components_(components), values_(mesh.node_count() * components, fill) {}

    const CartesianMesh& mesh() const { return *mesh_; }
    int components() const { return components_; }
    std::size_t node_count() const { return values_.size() / components_; }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    double* node(std::size_t alpha) { return values_.data() + alpha * components_; }
    const double* node(std::size_t alpha) const { return values_.data() + alpha * components_; }
    double& operator()(std::size_t alpha, int c) { return values_[alpha * components_ + c]; }
    double operator()(std::size_t alpha, int c) const { return values_[alpha * components_ + c]; }

    // Throws AdmissibilityError on the first NaN/Inf, reporting its node position.
    void check_finite() const;

private:
    const CartesianMesh* mesh_ = nullptr;
    int components_ = 0;
    std::vector<double> values_;
};

// Local block layout: block[a*s + c], a = p + (K+1)*k.
void gather_element(const NodalField& field, std::size_t e, std::span<double> block);
void scatter_element(NodalField& field, std::size_t e, std::span<const double> block);

// Assembled diagonal of the lumped 2D mass matrix.
std::vector<double> lumped_mass_diagonal(const CartesianMesh& mesh);

}  // namespace gfq
