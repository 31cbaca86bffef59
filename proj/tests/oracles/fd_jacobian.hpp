#pragma once

// Central finite-difference Jacobian of a map R^4 -> R^4.

#include <Eigen/Dense>

namespace oracle {

template <class F>
Eigen::Matrix4d fd_jacobian(F&& f, const Eigen::Vector4d& x, double eps = 1e-6) {
    Eigen::Matrix4d J;
    for (int j = 0; j < 4; ++j) {
        Eigen::Vector4d xp = x, xm = x;
        const double h = eps * std::max(1.0, std::abs(x[j]));
        xp[j] += h;
        xm[j] -= h;
        J.col(j) = (f(xp) - f(xm)) / (2.0 * h);
    }
    return J;
}

}  // namespace oracle
