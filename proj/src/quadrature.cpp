//! \file quadrature.cpp
//! \brief Golub-Welsch construction of the Gauss-Hermite rule and the
//!        spectral differentiation matrix.

#include "semibolt/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace semibolt {

double GaussHermiteBasis::hermite(int k, double x) {
    // Orthonormal under M(v) dv: H~_0 = 1, H~_1 = sqrt(2) x.
    double hm = 0.0, h = 1.0;
    for (int n = 0; n < k; ++n) {
        double hp = x * std::sqrt(2.0 / (n + 1)) * h - std::sqrt(double(n) / (n + 1)) * hm;
        hm = h;
        h = hp;
    }
    return h;
}

GaussHermiteBasis::GaussHermiteBasis(int nv) : nv_(nv) {
    if (nv < 2 || nv % 2 != 0)
        throw std::invalid_argument("GaussHermiteBasis: nv must be even and >= 2");

    // Symmetric tridiagonal Jacobi matrix for the orthonormal recurrence:
    // zero diagonal, off-diagonal b_k = sqrt(k/2). Nodes are its eigenvalues;
    // weights are mu_0 * (first eigenvector component)^2 with mu_0 = 1.
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(nv, nv);
    for (int k = 1; k < nv; ++k) {
        double b = std::sqrt(0.5 * k);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("GaussHermiteBasis: eigensolve failed");

    v_.resize(nv);
    w_.resize(nv);
    for (int j = 0; j < nv; ++j) {
        // Newton-polish each eigenvalue on the recurrence so nodes are roots
        // of H~_nv to full precision (H~_nv' = sqrt(2 nv) H~_{nv-1}).
        double x = es.eigenvalues()(j);
        for (int it = 0; it < 3; ++it) {
            double h = hermite(nv, x);
            double dh = std::sqrt(2.0 * nv) * hermite(nv - 1, x);
            x -= h / dh;
        }
        v_[j] = x;
    }

    // Enforce the +/- pairing exactly: mirror the positive half onto the
    // negative half so v_j == -v_{nv-1-j} to the bit.
    for (int j = 0; j < nv / 2; ++j) {
        int m = nv - 1 - j;
        double mag = 0.5 * (v_[m] - v_[j]);
        v_[m] = mag;
        v_[j] = -mag;
    }

    // Christoffel-function weights, w_j = 1 / sum_{k<nv} H~_k(v_j)^2: unlike
    // squared eigenvector components this keeps full *relative* accuracy for
    // the exponentially small edge weights. Evaluate on the positive half and
    // mirror so the pairing is exact.
    for (int j = nv / 2; j < nv; ++j) {
        double hm = 0.0, h = 1.0, s = 1.0;
        for (int k = 0; k + 1 < nv; ++k) {
            double hp =
                v_[j] * std::sqrt(2.0 / (k + 1)) * h - std::sqrt(double(k) / (k + 1)) * hm;
            hm = h;
            h = hp;
            s += h * h;
        }
        w_[j] = 1.0 / s;
        w_[nv - 1 - j] = w_[j];
    }
    // Renormalize so the discrete Maxwellian mass is 1 (symmetric scaling).
    double s = 0.0;
    for (double wj : w_) s += wj;
    for (double& wj : w_) wj /= s;

    // Differentiation matrix: expand in H~, use H~_k' = sqrt(2k) H~_{k-1}:
    // D(i,j) = w_j * sum_{k=1}^{nv-1} sqrt(2k) H~_k(v_j) H~_{k-1}(v_i).
    dmat_.resize(nv, nv);
    Eigen::MatrixXd H(nv, nv); // H(k, j) = H~_k(v_j)
    for (int j = 0; j < nv; ++j) {
        double hm = 0.0, h = 1.0;
        H(0, j) = 1.0;
        for (int k = 0; k + 1 < nv; ++k) {
            double hp =
                v_[j] * std::sqrt(2.0 / (k + 1)) * h - std::sqrt(double(k) / (k + 1)) * hm;
            hm = h;
            h = hp;
            H(k + 1, j) = h;
        }
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = 0; j < nv; ++j) {
            double sum = 0.0;
            for (int k = 1; k < nv; ++k)
                sum += std::sqrt(2.0 * k) * H(k, j) * H(k - 1, i);
            dmat_(i, j) = w_[j] * sum;
        }
    }
}

double GaussHermiteBasis::density(const double* phi) const {
    double s = 0.0;
    for (int j = 0; j < nv_; ++j) s += w_[j] * phi[j];
    return s;
}

void GaussHermiteBasis::derivative(const double* phi, double* out) const {
    for (int i = 0; i < nv_; ++i) {
        double s = 0.0;
        for (int j = 0; j < nv_; ++j) s += dmat_(i, j) * phi[j];
        out[i] = s;
    }
}

} // namespace semibolt
