#pragma once
//! \file collision.hpp
//! \brief Linear collision operator in the Maxwellian-scaled representation
//!        phi = f / M, plus its BGK-type penalization.
//!
//! Q(phi)_i = sum_j sigma(v_i, v_j) w_j (phi_j - phi_i); the difference form
//! is algebraically the gain/loss split with frequency
//! lambda_i = sum_j sigma_ij w_j, and is exactly zero on constants.
//! The penalization L(phi)_i = beta (rho - phi_i) uses the same difference
//! form, so for the relaxation-time kernel with beta = 1 the explicit residue
//! Q - L vanishes to the bit.

#include <vector>

#include <Eigen/Dense>

#include "semibolt/quadrature.hpp"

namespace semibolt {

enum class KernelKind { RTA, EPI };

class CollisionKernel {
  public:
    //! Relaxation-time kernel: sigma == 1, lambda == 1 (set analytically).
    static CollisionKernel rta(const GaussHermiteBasis& basis, double beta = 1.0);

    //! Energy-peaked inelastic-like kernel
    //! sigma(v,w) = exp(-C (v^2 - w^2 + 1)^2) + exp(-C (v^2 - w^2 - 1)^2).
    static CollisionKernel epi(const GaussHermiteBasis& basis, double C = 0.1,
                               double beta = 1.0);

    static CollisionKernel make(KernelKind kind, const GaussHermiteBasis& basis,
                                double beta = 1.0);

    KernelKind kind() const { return kind_; }
    double beta() const { return beta_; }
    int size() const { return static_cast<int>(lambda_.size()); }

    const Eigen::MatrixXd& sigma() const { return sigma_; }
    const std::vector<double>& lambda() const { return lambda_; }
    double lambda(int j) const { return lambda_[j]; }
    double lambda_max() const { return lambda_max_; }

    //! Diffusion coefficient of the hydrodynamic limit,
    //! D = sum_j w_j v_j^2 / lambda_j (= 1/2 for RTA). Mobility eta = 2 D.
    double diffusion() const { return diffusion_; }
    double mobility() const { return 2.0 * diffusion_; }

    //! out_i = sum_j sigma_ij w_j (phi_j - phi_i).
    void apply_Q(const double* phi, double* out) const;

    //! out_i = beta sum_j w_j (phi_j - phi_i)  (== beta (rho - phi_i)).
    void apply_L(const double* phi, double* out) const;

  private:
    CollisionKernel(KernelKind kind, const GaussHermiteBasis& basis, double beta);

    KernelKind kind_;
    double beta_;
    Eigen::MatrixXd sigma_;   // sigma(v_i, v_j)
    Eigen::MatrixXd scatter_; // sigma_ij * w_j (row-applied)
    std::vector<double> weights_;
    std::vector<double> lambda_;
    double lambda_max_ = 0.0;
    double diffusion_ = 0.0;

    void finalize(const GaussHermiteBasis& basis);
};

} // namespace semibolt
