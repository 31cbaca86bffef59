#include "gfq/wb_gravity.hpp"

#include <cmath>
#include <vector>

#include "gfq/errors.hpp"

namespace gfq {

double kappa(double rho, double phi, const WbReference& ref) {
    if (!(rho > 0.0)) throw AdmissibilityError("kappa: non-positive density");
    return ref.p_bar * std::log(rho) + ref.rho_bar * phi;
}

void wb_momentum_source_element(const double* rho, const double* phi, const WbReference& ref,
                                const ElementOperators& ox, const ElementOperators& oy,
                                std::array<double, 2>* out) {
    if (!(ref.p_bar > 0.0) || !(ref.rho_bar > 0.0)) throw AdmissibilityError("non-positive WB reference");
    const int n = ox.size();
    const int m = n * n;
    const double beta = ref.rho_bar / ref.p_bar;
    // Exponentials are shifted by phi at the first node; the shift cancels
    // between e^{kappa/p_bar} and e^{-rho_bar phi_beta / p_bar}.
    const double phi_ref = phi[0];
    double E[(kMaxDegree + 1) * (kMaxDegree + 1)];
    for (int a = 0; a < m; ++a) E[a] = std::exp(-beta * (phi[a] - phi_ref));
    const double scale = -ref.p_bar / ref.rho_bar;
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
            double gx = 0.0, gy = 0.0;
            for (int q = 0; q < n; ++q) gx += ox.nodal_derivative(p, q) * E[q + n * k];
            for (int l = 0; l < n; ++l) gy += oy.nodal_derivative(k, l) * E[p + n * l];
            const int a = p + n * k;
            const double pre = scale * rho[a] / E[a];
            out[a] = {pre * gx, pre * gy};
        }
}

double wb_energy_source(const std::array<double, 2>& g, double u, double v) { return -(u * g[0] + v * g[1]); }

}  // namespace gfq
