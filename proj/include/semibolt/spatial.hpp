#pragma once
//! \file spatial.hpp
//! \brief One-dimensional spatial operators on ghost-padded rows: WENO
//!        interface reconstruction, the dissipated transport divergence, and
//!        centered/one-sided derivative stencils.
//!
//! All row pointers refer to logical cell 0; negative indices reach into the
//! ghost padding. The transport divergence of a pair (h, k) is
//!   Gamma_i = (H_{i+1/2} - H_{i-1/2}) / dx,
//!   H_{m}   = (v/2) (h^L_m + h^R_m) - (alpha |v| / 2) (k_m - k_{m-1}),
//! with h^L/h^R the left/right-biased WENO reconstructions at interface m.
//! The dissipation uses plain point differences of k so that the implicit
//! stage solves stay banded.

#include <span>
#include <vector>

namespace semibolt {

//! Stencil half-width of the reconstruction (2 for WENO3, 3 for WENO5).
int weno_radius(int order);

//! Left-biased (upwind-from-the-left) reconstruction at interface m, i.e. at
//! the boundary between cells m-1 and m. Requires cells m-1-radius .. m+radius-2
//! ... m+... to be addressable; callers guarantee padding.
double weno_reconstruct_left(const double* c, int m, int order, double weno_eps);
//! Right-biased mirror image.
double weno_reconstruct_right(const double* c, int m, int order, double weno_eps);

//! Gamma_i for i in [i0, i1), written to out[i - i0]. Ghost padding of both
//! rows must cover [i0 - radius - 1, i1 + radius] for h and [i0 - 1, i1] for k.
void transport_divergence(const double* h, const double* k, double v, double alpha,
                          double dx, int i0, int i1, int order, double weno_eps,
                          double* out);

//! Centered second derivative on interior cells [0, nx): order 2 or 4;
//! needs order/2 ghost layers.
void second_derivative(const double* c, int nx, double dx, int order, double* out);

//! Weights of the `deriv`-th derivative at x0 of the interpolating polynomial
//! through nodes xs (exact for polynomials of degree < xs.size()).
std::vector<double> stencil_weights(std::span<const double> xs, double x0, int deriv);

//! Derivative at the wall (x = 0) from the wall value u_w and the first
//! `order` interior cell values at (k + 1/2) dx: convenience wrapper around
//! stencil_weights used by the Robin wall condition. Returns weights
//! {c_w, c_0, c_1, ...}.
std::vector<double> wall_gradient_weights(int order, double dx);

//! One-sided value/derivative estimate at the left wall (x = 0) from interior
//! cells only (cell k at (k + 1/2) dx). `order` interior values give a
//! polynomial of degree order-1.
double extrapolate_to_wall(const double* c, int order, double dx);
double one_sided_gradient(const double* c, int order, double dx);

} // namespace semibolt
