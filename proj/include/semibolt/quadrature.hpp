#pragma once
//! \file quadrature.hpp
//! \brief Gauss-Hermite velocity basis for the normalized Maxwellian weight
//!        M(v) = pi^{-1/2} exp(-v^2).
//!
//! Velocity-space integrals int g(v) M(v) dv are approximated by
//! sum_j w_j g(v_j); the rule is exact for polynomials of degree <= 2 nv - 1.
//! A nodal differentiation matrix (exact for degree <= nv - 1) provides d/dv.

#include <vector>

#include <Eigen/Dense>

namespace semibolt {

class GaussHermiteBasis {
  public:
    //! Builds the nv-point rule. nv must be even and >= 2 so that nodes come
    //! in exact +/- pairs (the parity split of the transport operator relies
    //! on v -> -v being a node permutation).
    explicit GaussHermiteBasis(int nv);

    int size() const { return nv_; }
    const std::vector<double>& nodes() const { return v_; }
    const std::vector<double>& weights() const { return w_; }
    double node(int j) const { return v_[j]; }
    double weight(int j) const { return w_[j]; }
    double vmax() const { return v_.back(); }

    //! Discrete density sum_j w_j phi_j (fixed summation order).
    double density(const double* phi) const;

    //! Nodal derivative (d/dv of the degree nv-1 interpolant):
    //! out_i = sum_j D(i,j) phi_j.
    void derivative(const double* phi, double* out) const;

    const Eigen::MatrixXd& derivative_matrix() const { return dmat_; }

    //! Orthonormal Hermite value H~_k(x) under M, via the three-term
    //! recurrence H~_{k+1} = x sqrt(2/(k+1)) H~_k - sqrt(k/(k+1)) H~_{k-1}.
    static double hermite(int k, double x);

  private:
    int nv_;
    std::vector<double> v_, w_;
    Eigen::MatrixXd dmat_;
};

} // namespace semibolt
