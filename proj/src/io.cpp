#include "gfq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "gfq/errors.hpp"

namespace gfq {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

struct PointValues {
    double x, y, rho, p, mach, u, v;
};

PointValues point_values(double x, double y, const Vec4& W, const GasLaw& gas) {
    const PrimitiveState q = to_primitive(W, gas);
    const double c = sound_speed(q, gas);
    return {x, y, q.rho, q.p, std::hypot(q.u, q.v) / c, q.u, q.v};
}

std::string vtk_lattice(int nx, int ny, const std::vector<PointValues>& pts, const std::string& title) {
    std::ostringstream os;
    os << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET STRUCTURED_GRID\n";
    os << "DIMENSIONS " << nx << ' ' << ny << " 1\n";
    os << "POINTS " << pts.size() << " double\n";
    for (const auto& p : pts) os << fmt(p.x) << ' ' << fmt(p.y) << ' ' << fmt(0.0) << '\n';
    os << "POINT_DATA " << pts.size() << '\n';
    auto scalar = [&](const char* name, double PointValues::*field) {
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (const auto& p : pts) os << fmt(p.*field) << '\n';
    };
    scalar("rho", &PointValues::rho);
    scalar("p", &PointValues::p);
    scalar("Mach", &PointValues::mach);
    os << "VECTORS velocity double\n";
    for (const auto& p : pts) os << fmt(p.u) << ' ' << fmt(p.v) << ' ' << fmt(0.0) << '\n';
    return os.str();
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("rename to " + path.string() + " failed: " + ec.message());
}

std::string vtk_nodal(const NodalField& W, const GasLaw& gas, const std::string& title) {
    const CartesianMesh& mesh = W.mesh();
    const int K = mesh.degree();
    const int nx = mesh.n1() * K + 1, ny = mesh.n2() * K + 1;
    std::vector<PointValues> pts;
    pts.reserve(static_cast<std::size_t>(nx) * ny);
    for (int gy = 0; gy < ny; ++gy) {
        const int j = std::min(gy / K, mesh.n2() - 1), k = gy - j * K;
        for (int gx = 0; gx < nx; ++gx) {
            const int i = std::min(gx / K, mesh.n1() - 1), p = gx - i * K;
            const std::size_t a = mesh.local_to_global(i, j, p, k);
            pts.push_back(point_values(mesh.coordinate1(i, p), mesh.coordinate2(j, k), Vec4(Eigen::Map<const Vec4>(W.node(a))),
                                       gas));
        }
    }
    return vtk_lattice(nx, ny, pts, title);
}

std::string vtk_cells(const CellAverageField& U, const GasLaw& gas, const std::string& title) {
    std::vector<PointValues> pts;
    pts.reserve(static_cast<std::size_t>(U.n1) * U.n2);
    for (int j = 0; j < U.n2; ++j)
        for (int i = 0; i < U.n1; ++i)
            pts.push_back(point_values(U.xc(i), U.yc(j), Vec4(Eigen::Map<const Vec4>(U.cell(i, j))), gas));
    return vtk_lattice(U.n1, U.n2, pts, title);
}

void fill_eoa(std::vector<ConvergenceRow>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rows[r].eoa.fill(std::nullopt);
        if (r == 0 || rows[r].n != 2 * rows[r - 1].n) continue;
        for (int c = 0; c < 4; ++c) {
            const double a = rows[r - 1].err[c], b = rows[r].err[c];
            if (a > 0.0 && b > 0.0) rows[r].eoa[c] = std::log2(a / b);
        }
    }
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << "N,err_rho,eoa_rho,err_rhou,eoa_rhou,err_rhov,eoa_rhov,err_rhoE,eoa_rhoE,seconds\n";
    for (const auto& r : rows) {
        os << r.n;
        for (int c = 0; c < 4; ++c) {
            os << ',' << fmt(r.err[c]) << ',';
            if (r.eoa[c]) os << fmt(*r.eoa[c]);
        }
        os << ',' << fmt(r.seconds) << '\n';
    }
    return os.str();
}

}  // namespace gfq
