#pragma once
//! \file field.hpp
//! \brief Electric field sources: prescribed potentials, a constant applied
//!        bias, and the self-consistent Poisson coupling with a doping
//!        background.

#include <vector>

#include <Eigen/Dense>

#include "semibolt/grid.hpp"

namespace semibolt {

enum class FieldMode {
    None,          //!< E = 0
    GaussianWell,  //!< potential exp(-c (1/4 - x)^2), c = 50 e (max |E| = 10)
    LinearRamp,    //!< potential V x (constant field E = -V)
    SelfConsistent //!< gamma * potential'' = rho - rho_d, Dirichlet walls
};

//! Doping profile rho_d(x) = 1 - (1-m)/2 [tanh((x-x1)/s) - tanh((x-x2)/s)].
struct DopingProfile {
    double m = 0.001;
    double s = 0.02;
    double x1 = 0.3;
    double x2 = 0.7;
    double operator()(double x) const;
};

struct FieldState {
    std::vector<double> potential; //!< cell-centered
    std::vector<double> efield;    //!< cell-centered E = -d potential / dx
    double e_left = 0.0;           //!< E evaluated at the left wall
    double e_right = 0.0;          //!< E evaluated at the right wall
};

class FieldSolver {
  public:
    FieldMode mode = FieldMode::None;
    double bias = 1.0;      //!< LinearRamp slope / SelfConsistent right-wall value
    double gamma = 0.002;   //!< scaled Debye coefficient (SelfConsistent)
    DopingProfile doping;

    //! Prescribed-potential value (GaussianWell/LinearRamp); used analytically.
    double potential_at(double x) const;
    double efield_at(double x) const;

    //! Fills fs for the given density. Prescribed modes ignore rho; the
    //! self-consistent mode solves gamma phi'' = rho - rho_d with
    //! potential(0) = 0, potential(1) = bias on the cell-centered grid
    //! (ghost closure phi_ghost = 2 phi_wall - phi_adjacent), then
    //! E = -d phi/dx centrally, one-sided at the end cells and walls.
    void update(const SpatialGrid& grid, const std::vector<double>& rho,
                FieldState& fs) const;

    bool is_static() const { return mode != FieldMode::SelfConsistent; }
};

//! Scaled current J_i = eps * sum_j w_j v_j psi_ij.
std::vector<double> compute_current(const class GaussHermiteBasis& basis,
                                    const PhaseField& psi, double eps);

} // namespace semibolt
