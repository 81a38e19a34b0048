//! \file test_quadrature.cpp
//! \brief Gauss-Hermite rule vs. independent oracles: analytic Gaussian
//!        moments, a recurrence-based Newton root for the largest node, and
//!        exact differentiation identities.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "semibolt/quadrature.hpp"

using semibolt::GaussHermiteBasis;

namespace {

// Moments m_p = int v^p M(v) dv, M = pi^{-1/2} e^{-v^2}: m_0 = 1 and
// m_p = (p-1)/2 * m_{p-2}; odd moments vanish.
double gaussian_moment(int p) {
    if (p % 2 == 1) return 0.0;
    double m = 1.0;
    for (int q = 2; q <= p; q += 2) m *= 0.5 * (q - 1);
    return m;
}

// Largest root of the nv-th orthonormal Hermite polynomial by Newton
// iteration on the recurrence (independent of the eigensolver path).
double largest_root(int nv) {
    double x = std::sqrt(2.0 * nv + 1.0); // above every root
    for (int it = 0; it < 200; ++it) {
        double h = GaussHermiteBasis::hermite(nv, x);
        // H~_nv' = sqrt(2 nv) H~_{nv-1}
        double dh = std::sqrt(2.0 * nv) * GaussHermiteBasis::hermite(nv - 1, x);
        double step = h / dh;
        x -= step;
        if (std::abs(step) < 1e-15 * x) break;
    }
    return x;
}

} // namespace

TEST_CASE("quadrature: weights and moments") {
    for (int nv : {8, 16, 32}) {
        GaussHermiteBasis b(nv);
        double w_sum = 0.0, v2_sum = 0.0;
        for (int j = 0; j < nv; ++j) {
            w_sum += b.weight(j);
            v2_sum += b.weight(j) * b.node(j) * b.node(j);
        }
        CHECK(std::abs(w_sum - 1.0) <= 1e-12);
        CHECK(std::abs(v2_sum - 0.5) <= 1e-12);

        // Exactness for all polynomial moments of degree <= 2 nv - 1. Odd
        // moments cancel between +/- pairs, so the roundoff scale is the
        // magnitude sum, not the (zero) result.
        for (int p = 0; p < 2 * nv; ++p) {
            double s = 0.0, mag = 0.0;
            for (int j = 0; j < nv; ++j) {
                double t = b.weight(j) * std::pow(b.node(j), p);
                s += t;
                mag += std::abs(t);
            }
            double exact = gaussian_moment(p);
            double scale = std::max(1.0, mag);
            CHECK(std::abs(s - exact) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("quadrature: node symmetry is exact") {
    GaussHermiteBasis b(16);
    for (int j = 0; j < 8; ++j) {
        CHECK(b.node(j) == -b.node(15 - j));
        CHECK(b.weight(j) == b.weight(15 - j));
    }
    // Nodes ascend.
    for (int j = 1; j < 16; ++j) CHECK(b.node(j) > b.node(j - 1));
}

TEST_CASE("quadrature: largest node matches Newton oracle and frozen value") {
    GaussHermiteBasis b(16);
    CHECK(b.vmax() == doctest::Approx(largest_root(16)).epsilon(1e-13));
    CHECK(b.vmax() == doctest::Approx(4.688738939305818).epsilon(1e-13));
    for (int nv : {8, 32}) {
        GaussHermiteBasis bb(nv);
        CHECK(bb.vmax() == doctest::Approx(largest_root(nv)).epsilon(1e-13));
    }
}

TEST_CASE("quadrature: density of simple fields") {
    GaussHermiteBasis b(16);
    std::vector<double> one(16, 1.0), v(16), v2(16);
    for (int j = 0; j < 16; ++j) {
        v[j] = b.node(j);
        v2[j] = b.node(j) * b.node(j);
    }
    CHECK(b.density(one.data()) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(b.density(v.data())) <= 1e-14);
    CHECK(b.density(v2.data()) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("quadrature: differentiation matrix is exact on the basis") {
    const int nv = 16;
    GaussHermiteBasis b(nv);
    std::vector<double> f(nv), df(nv);

    // Constants and low powers.
    std::fill(f.begin(), f.end(), 3.5);
    b.derivative(f.data(), df.data());
    for (int i = 0; i < nv; ++i) CHECK(std::abs(df[i]) <= 1e-9);

    // Edge rows of the spectral differentiation matrix are conditioned like
    // 1/sqrt(w_min) ~ 1e5, so exact identities hold to ~1e-11 absolute.
    for (int j = 0; j < nv; ++j) f[j] = b.node(j);
    b.derivative(f.data(), df.data());
    for (int i = 0; i < nv; ++i) CHECK(std::abs(df[i] - 1.0) <= 1e-9);

    for (int j = 0; j < nv; ++j) f[j] = b.node(j) * b.node(j);
    b.derivative(f.data(), df.data());
    for (int i = 0; i < nv; ++i) CHECK(std::abs(df[i] - 2.0 * b.node(i)) <= 1e-9);

    // H~_k' = sqrt(2k) H~_{k-1} for every representable degree.
    for (int k = 1; k < nv; ++k) {
        for (int j = 0; j < nv; ++j) f[j] = GaussHermiteBasis::hermite(k, b.node(j));
        b.derivative(f.data(), df.data());
        for (int i = 0; i < nv; ++i) {
            double exact = std::sqrt(2.0 * k) * GaussHermiteBasis::hermite(k - 1, b.node(i));
            CHECK(std::abs(df[i] - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("quadrature: Maxwellian-weighted derivative moment vanishes") {
    // sum_j w_j [ (d psi/dv)_j - 2 v_j psi_j ] = int (psi M)' dv = 0 for any
    // nodal field psi (degree <= nv-1 interpolant): this is what makes the
    // field term mass-neutral in the moment hierarchy.
    const int nv = 16;
    GaussHermiteBasis b(nv);
    std::vector<double> psi(nv), dpsi(nv);
    for (int j = 0; j < nv; ++j) {
        double v = b.node(j);
        psi[j] = 0.3 + 1.7 * v - 0.9 * v * v + 0.2 * v * v * v;
    }
    b.derivative(psi.data(), dpsi.data());
    double mom = 0.0;
    for (int j = 0; j < nv; ++j) mom += b.weight(j) * (dpsi[j] - 2.0 * b.node(j) * psi[j]);
    CHECK(std::abs(mom) <= 1e-12);
}

TEST_CASE("quadrature: invalid sizes are rejected") {
    CHECK_THROWS(GaussHermiteBasis(0));
    CHECK_THROWS(GaussHermiteBasis(1));
    CHECK_THROWS(GaussHermiteBasis(7));
}
