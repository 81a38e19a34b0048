//! \file spatial.cpp

#include "semibolt/spatial.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace semibolt {

int weno_radius(int order) {
    if (order == 3) return 2;
    if (order == 5) return 3;
    throw std::invalid_argument("weno_radius: order must be 3 or 5");
}

namespace {

// Third-order reconstruction at interface m from cells {m-2, m-1, m}.
inline double weno3_left(const double* c, int m, double we) {
    double cm2 = c[m - 2], cm1 = c[m - 1], c0 = c[m];
    double p0 = 0.5 * (cm1 + c0);        // centered pair
    double p1 = 0.5 * (3.0 * cm1 - cm2); // fully upwind pair
    double b0 = (c0 - cm1) * (c0 - cm1);
    double b1 = (cm1 - cm2) * (cm1 - cm2);
    double a0 = (2.0 / 3.0) / ((we + b0) * (we + b0));
    double a1 = (1.0 / 3.0) / ((we + b1) * (we + b1));
    return (a0 * p0 + a1 * p1) / (a0 + a1);
}

inline double weno3_right(const double* c, int m, double we) {
    double c0 = c[m - 1], cp0 = c[m], cp1 = c[m + 1];
    double p0 = 0.5 * (cp0 + c0);
    double p1 = 0.5 * (3.0 * cp0 - cp1);
    double b0 = (cp0 - c0) * (cp0 - c0);
    double b1 = (cp1 - cp0) * (cp1 - cp0);
    double a0 = (2.0 / 3.0) / ((we + b0) * (we + b0));
    double a1 = (1.0 / 3.0) / ((we + b1) * (we + b1));
    return (a0 * p0 + a1 * p1) / (a0 + a1);
}

// Fifth-order (Jiang-Shu) reconstruction at interface m from cells m-3..m+1.
inline double weno5_left(const double* c, int m, double we) {
    double v0 = c[m - 3], v1 = c[m - 2], v2 = c[m - 1], v3 = c[m], v4 = c[m + 1];
    double p0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0;
    double p1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0;
    double p2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0;
    double b0 = (13.0 / 12.0) * (v0 - 2.0 * v1 + v2) * (v0 - 2.0 * v1 + v2) +
                0.25 * (v0 - 4.0 * v1 + 3.0 * v2) * (v0 - 4.0 * v1 + 3.0 * v2);
    double b1 = (13.0 / 12.0) * (v1 - 2.0 * v2 + v3) * (v1 - 2.0 * v2 + v3) +
                0.25 * (v1 - v3) * (v1 - v3);
    double b2 = (13.0 / 12.0) * (v2 - 2.0 * v3 + v4) * (v2 - 2.0 * v3 + v4) +
                0.25 * (3.0 * v2 - 4.0 * v3 + v4) * (3.0 * v2 - 4.0 * v3 + v4);
    double a0 = 0.1 / ((we + b0) * (we + b0));
    double a1 = 0.6 / ((we + b1) * (we + b1));
    double a2 = 0.3 / ((we + b2) * (we + b2));
    return (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2);
}

inline double weno5_right(const double* c, int m, double we) {
    double v0 = c[m + 2], v1 = c[m + 1], v2 = c[m], v3 = c[m - 1], v4 = c[m - 2];
    double p0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0;
    double p1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0;
    double p2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0;
    double b0 = (13.0 / 12.0) * (v0 - 2.0 * v1 + v2) * (v0 - 2.0 * v1 + v2) +
                0.25 * (v0 - 4.0 * v1 + 3.0 * v2) * (v0 - 4.0 * v1 + 3.0 * v2);
    double b1 = (13.0 / 12.0) * (v1 - 2.0 * v2 + v3) * (v1 - 2.0 * v2 + v3) +
                0.25 * (v1 - v3) * (v1 - v3);
    double b2 = (13.0 / 12.0) * (v2 - 2.0 * v3 + v4) * (v2 - 2.0 * v3 + v4) +
                0.25 * (3.0 * v2 - 4.0 * v3 + v4) * (3.0 * v2 - 4.0 * v3 + v4);
    double a0 = 0.1 / ((we + b0) * (we + b0));
    double a1 = 0.6 / ((we + b1) * (we + b1));
    double a2 = 0.3 / ((we + b2) * (we + b2));
    return (a0 * p0 + a1 * p1 + a2 * p2) / (a0 + a1 + a2);
}

} // namespace

double weno_reconstruct_left(const double* c, int m, int order, double we) {
    return order == 3 ? weno3_left(c, m, we) : weno5_left(c, m, we);
}

double weno_reconstruct_right(const double* c, int m, int order, double we) {
    return order == 3 ? weno3_right(c, m, we) : weno5_right(c, m, we);
}

void transport_divergence(const double* h, const double* k, double v, double alpha,
                          double dx, int i0, int i1, int order, double weno_eps,
                          double* out) {
    if (order != 3 && order != 5)
        throw std::invalid_argument("transport_divergence: order must be 3 or 5");
    int n = i1 - i0;
    std::vector<double> flux(n + 1);
    double av = 0.5 * alpha * std::abs(v);
    for (int m = i0; m <= i1; ++m) {
        double hl = weno_reconstruct_left(h, m, order, weno_eps);
        double hr = weno_reconstruct_right(h, m, order, weno_eps);
        flux[m - i0] = 0.5 * v * (hl + hr) - av * (k[m] - k[m - 1]);
    }
    for (int i = 0; i < n; ++i) out[i] = (flux[i + 1] - flux[i]) / dx;
}

void second_derivative(const double* c, int nx, double dx, int order, double* out) {
    double h2 = dx * dx;
    if (order == 2) {
        for (int i = 0; i < nx; ++i) out[i] = (c[i + 1] - 2.0 * c[i] + c[i - 1]) / h2;
    } else if (order == 4) {
        for (int i = 0; i < nx; ++i)
            out[i] = (-c[i + 2] + 16.0 * c[i + 1] - 30.0 * c[i] + 16.0 * c[i - 1] -
                      c[i - 2]) /
                     (12.0 * h2);
    } else {
        throw std::invalid_argument("second_derivative: order must be 2 or 4");
    }
}

std::vector<double> stencil_weights(std::span<const double> xs, double x0, int deriv) {
    int n = static_cast<int>(xs.size());
    if (deriv >= n) throw std::invalid_argument("stencil_weights: not enough nodes");
    // Solve V^T a = e, where V_{pk} = (xs_k - x0)^p and e_p = p! [p == deriv]:
    // then sum_k a_k f(xs_k) equals the deriv-th derivative at x0 of the
    // interpolating polynomial.
    Eigen::MatrixXd V(n, n);
    for (int p = 0; p < n; ++p)
        for (int kk = 0; kk < n; ++kk) V(p, kk) = std::pow(xs[kk] - x0, p);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    double fact = 1.0;
    for (int p = 2; p <= deriv; ++p) fact *= p;
    e(deriv) = fact;
    Eigen::VectorXd a = V.fullPivLu().solve(e);
    return std::vector<double>(a.data(), a.data() + n);
}

std::vector<double> wall_gradient_weights(int order, double dx) {
    std::vector<double> xs(order + 1);
    xs[0] = 0.0;
    for (int kk = 0; kk < order; ++kk) xs[kk + 1] = (kk + 0.5) * dx;
    return stencil_weights(xs, 0.0, 1);
}

double extrapolate_to_wall(const double* c, int order, double dx) {
    std::vector<double> xs(order);
    for (int kk = 0; kk < order; ++kk) xs[kk] = (kk + 0.5) * dx;
    auto w = stencil_weights(xs, 0.0, 0);
    double s = 0.0;
    for (int kk = 0; kk < order; ++kk) s += w[kk] * c[kk];
    return s;
}

double one_sided_gradient(const double* c, int order, double dx) {
    // Gradient at the wall (x = 0) from order+1 interior cell values.
    std::vector<double> xs(order + 1);
    for (int kk = 0; kk <= order; ++kk) xs[kk] = (kk + 0.5) * dx;
    auto w = stencil_weights(xs, 0.0, 1);
    double s = 0.0;
    for (int kk = 0; kk <= order; ++kk) s += w[kk] * c[kk];
    return s;
}

} // namespace semibolt
