//! \file field.cpp

#include "semibolt/field.hpp"

#include <cmath>
#include <stdexcept>

#include "semibolt/quadrature.hpp"
#include "semibolt/spatial.hpp"

namespace semibolt {

namespace {
// Gaussian-well sharpness: makes the peak field exactly 10.
const double kWellSharpness = 50.0 * std::exp(1.0);
} // namespace

double DopingProfile::operator()(double x) const {
    return 1.0 - 0.5 * (1.0 - m) * (std::tanh((x - x1) / s) - std::tanh((x - x2) / s));
}

double FieldSolver::potential_at(double x) const {
    switch (mode) {
        case FieldMode::None: return 0.0;
        case FieldMode::GaussianWell: {
            double d = 0.25 - x;
            return std::exp(-kWellSharpness * d * d);
        }
        case FieldMode::LinearRamp: return bias * x;
        case FieldMode::SelfConsistent:
            throw std::logic_error("potential_at: self-consistent field is not analytic");
    }
    return 0.0;
}

double FieldSolver::efield_at(double x) const {
    switch (mode) {
        case FieldMode::None: return 0.0;
        case FieldMode::GaussianWell: {
            double d = 0.25 - x;
            return -2.0 * kWellSharpness * d * std::exp(-kWellSharpness * d * d);
        }
        case FieldMode::LinearRamp: return -bias;
        case FieldMode::SelfConsistent:
            throw std::logic_error("efield_at: self-consistent field is not analytic");
    }
    return 0.0;
}

void FieldSolver::update(const SpatialGrid& grid, const std::vector<double>& rho,
                         FieldState& fs) const {
    int nx = grid.nx;
    double dx = grid.dx();
    fs.potential.resize(nx);
    fs.efield.resize(nx);

    if (mode != FieldMode::SelfConsistent) {
        for (int i = 0; i < nx; ++i) {
            double x = grid.center(i);
            fs.potential[i] = potential_at(x);
            fs.efield[i] = efield_at(x);
        }
        fs.e_left = efield_at(grid.xmin);
        fs.e_right = efield_at(grid.xmax);
        return;
    }

    // gamma phi'' = rho - rho_d, phi(0) = 0, phi(1) = bias. Cell-centered
    // tridiagonal with the reflect-through-wall ghost closure
    // phi_ghost = 2 phi_wall - phi_adjacent brings the Dirichlet data in at
    // second order.
    if (static_cast<int>(rho.size()) != nx)
        throw std::invalid_argument("FieldSolver::update: rho size mismatch");
    const double phi_l = 0.0, phi_r = bias;
    Eigen::VectorXd diag(nx), lower(nx), upper(nx), rhs(nx);
    double s = gamma / (dx * dx);
    for (int i = 0; i < nx; ++i) {
        diag(i) = -2.0 * s;
        lower(i) = s;
        upper(i) = s;
        rhs(i) = rho[i] - doping(grid.center(i));
    }
    // Ghost elimination: phi_{-1} = 2 phi_l - phi_0 and symmetrically.
    diag(0) -= s;
    rhs(0) -= 2.0 * s * phi_l;
    diag(nx - 1) -= s;
    rhs(nx - 1) -= 2.0 * s * phi_r;

    // Thomas solve.
    Eigen::VectorXd c(nx), d(nx);
    c(0) = upper(0) / diag(0);
    d(0) = rhs(0) / diag(0);
    for (int i = 1; i < nx; ++i) {
        double m = diag(i) - lower(i) * c(i - 1);
        c(i) = upper(i) / m;
        d(i) = (rhs(i) - lower(i) * d(i - 1)) / m;
    }
    fs.potential[nx - 1] = d(nx - 1);
    for (int i = nx - 2; i >= 0; --i) fs.potential[i] = d(i) - c(i) * fs.potential[i + 1];

    // E = -d phi/dx: central inside, one-sided (with the wall value) at the
    // end cells and the walls themselves.
    for (int i = 1; i < nx - 1; ++i)
        fs.efield[i] = -(fs.potential[i + 1] - fs.potential[i - 1]) / (2.0 * dx);

    // Quadratic fit through the wall value and two adjacent cells; evaluate
    // the derivative at the wall and at the first cell center. The right wall
    // uses the mirrored stencil (distance-from-wall coordinate).
    std::array<double, 3> xs_l = {0.0, 0.5 * dx, 1.5 * dx};
    auto w_wall = stencil_weights(std::span<const double>(xs_l.data(), 3), 0.0, 1);
    auto w_cell = stencil_weights(std::span<const double>(xs_l.data(), 3), 0.5 * dx, 1);
    fs.e_left = -(w_wall[0] * phi_l + w_wall[1] * fs.potential[0] + w_wall[2] * fs.potential[1]);
    fs.efield[0] = -(w_cell[0] * phi_l + w_cell[1] * fs.potential[0] + w_cell[2] * fs.potential[1]);
    fs.e_right = -(-w_wall[0] * phi_r - w_wall[1] * fs.potential[nx - 1] -
                   w_wall[2] * fs.potential[nx - 2]);
    fs.efield[nx - 1] = -(-w_cell[0] * phi_r - w_cell[1] * fs.potential[nx - 1] -
                          w_cell[2] * fs.potential[nx - 2]);
}

std::vector<double> compute_current(const GaussHermiteBasis& basis, const PhaseField& psi,
                                    double eps) {
    int nx = psi.nx(), nv = psi.nv();
    std::vector<double> J(nx, 0.0);
    for (int j = 0; j < nv; ++j) {
        double wv = basis.weight(j) * basis.node(j);
        const double* row = psi.row(j);
        for (int i = 0; i < nx; ++i) J[i] += wv * row[i];
    }
    for (int i = 0; i < nx; ++i) J[i] *= eps;
    return J;
}

} // namespace semibolt
