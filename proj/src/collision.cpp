//! \file collision.cpp

#include "semibolt/collision.hpp"

#include <cmath>

namespace semibolt {

CollisionKernel::CollisionKernel(KernelKind kind, const GaussHermiteBasis& basis,
                                 double beta)
    : kind_(kind), beta_(beta), weights_(basis.weights()) {
    int nv = basis.size();
    sigma_.resize(nv, nv);
    scatter_.resize(nv, nv);
    lambda_.assign(nv, 0.0);
}

void CollisionKernel::finalize(const GaussHermiteBasis& basis) {
    int nv = basis.size();
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) scatter_(i, j) = sigma_(i, j) * basis.weight(j);

    if (kind_ == KernelKind::RTA) {
        // sigma == 1 integrates to exactly 1 against M; pin it analytically.
        std::fill(lambda_.begin(), lambda_.end(), 1.0);
    } else {
        for (int i = 0; i < nv; ++i) {
            double s = 0.0;
            for (int j = 0; j < nv; ++j) s += scatter_(i, j);
            lambda_[i] = s;
        }
    }
    lambda_max_ = 0.0;
    for (double l : lambda_) lambda_max_ = std::max(lambda_max_, l);

    diffusion_ = 0.0;
    for (int j = 0; j < nv; ++j)
        diffusion_ += basis.weight(j) * basis.node(j) * basis.node(j) / lambda_[j];
}

CollisionKernel CollisionKernel::rta(const GaussHermiteBasis& basis, double beta) {
    CollisionKernel k(KernelKind::RTA, basis, beta);
    k.sigma_.setOnes();
    k.finalize(basis);
    return k;
}

CollisionKernel CollisionKernel::epi(const GaussHermiteBasis& basis, double C,
                                     double beta) {
    CollisionKernel k(KernelKind::EPI, basis, beta);
    int nv = basis.size();
    for (int i = 0; i < nv; ++i) {
        double vi2 = basis.node(i) * basis.node(i);
        for (int j = 0; j < nv; ++j) {
            double a = vi2 - basis.node(j) * basis.node(j);
            k.sigma_(i, j) =
                std::exp(-C * (a + 1.0) * (a + 1.0)) + std::exp(-C * (a - 1.0) * (a - 1.0));
        }
    }
    k.finalize(basis);
    return k;
}

CollisionKernel CollisionKernel::make(KernelKind kind, const GaussHermiteBasis& basis,
                                      double beta) {
    return kind == KernelKind::RTA ? rta(basis, beta) : epi(basis, beta);
}

void CollisionKernel::apply_Q(const double* phi, double* out) const {
    int nv = size();
    for (int i = 0; i < nv; ++i) {
        double s = 0.0;
        for (int j = 0; j < nv; ++j) s += scatter_(i, j) * (phi[j] - phi[i]);
        out[i] = s;
    }
}

void CollisionKernel::apply_L(const double* phi, double* out) const {
    int nv = size();
    for (int i = 0; i < nv; ++i) {
        double s = 0.0;
        for (int j = 0; j < nv; ++j) s += weights_[j] * (phi[j] - phi[i]);
        out[i] = beta_ * s;
    }
}

} // namespace semibolt
