//! \file test_tableau.cpp
//! \brief Tableau coefficient freezes, row-sum consistency, classification,
//!        and scalar-ODE convergence orders for each registered pair.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "semibolt/tableau.hpp"

using namespace semibolt;

namespace {

// One IMEX step for u' = f_ex(u) + f_im(u) with scalar linear parts:
// explicit lambda_e, implicit lambda_i (diagonally implicit solve is scalar).
double imex_scalar_step(const ImexTableau& t, double u, double dt, double le,
                        double li) {
    int s = t.stages;
    std::vector<double> U(s), fe(s), fi(s);
    for (int k = 0; k < s; ++k) {
        double rhs = u;
        for (int l = 0; l < k; ++l)
            rhs += dt * (t.a_ex(k, l) * fe[l] + t.a_im(k, l) * fi[l]);
        double akk = t.a_im(k, k);
        U[k] = (akk == 0.0) ? rhs : rhs / (1.0 - dt * akk * li);
        fe[k] = le * U[k];
        fi[k] = li * U[k];
    }
    double un = u;
    for (int k = 0; k < s; ++k) un += dt * (t.w_ex(k) * fe[k] + t.w_im(k) * fi[k]);
    return un;
}

double imex_order(const ImexTableau& t, double le, double li) {
    // u' = (le + li) u, u(0) = 1, T = 1; error vs exp at dt and dt/2.
    auto solve = [&](int n) {
        double u = 1.0, dt = 1.0 / n;
        for (int i = 0; i < n; ++i) u = imex_scalar_step(t, u, dt, le, li);
        return std::abs(u - std::exp(le + li));
    };
    double e1 = solve(64), e2 = solve(128);
    return std::log2(e1 / e2);
}

} // namespace

TEST_CASE("tableau: registry and shape invariants") {
    for (const char* name : {"euler", "ars222", "bpr353"}) {
        const auto& t = ImexTableau::get(name);
        CHECK(t.name == name);
        // Row sums equal the abscissae for both tables.
        for (int k = 0; k < t.stages; ++k) {
            CHECK(t.a_ex.row(k).sum() == doctest::Approx(t.c_ex(k)).epsilon(1e-14));
            CHECK(t.a_im.row(k).sum() == doctest::Approx(t.c_im(k)).epsilon(1e-14));
        }
        // Consistency: weights sum to one.
        CHECK(t.w_ex.sum() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(t.w_im.sum() == doctest::Approx(1.0).epsilon(1e-14));
        // Explicit table strictly lower triangular; implicit lower triangular.
        for (int k = 0; k < t.stages; ++k)
            for (int l = k; l < t.stages; ++l) {
                CHECK(t.a_ex(k, l) == 0.0);
                if (l > k) CHECK(t.a_im(k, l) == 0.0);
            }
    }
    CHECK_THROWS(ImexTableau::get("rk4"));
}

TEST_CASE("tableau: frozen coefficients") {
    const double g = 1.0 - std::sqrt(2.0) / 2.0;
    const auto& a = ImexTableau::get("ars222");
    CHECK(a.stages == 3);
    CHECK(a.a_im(1, 1) == doctest::Approx(g).epsilon(1e-15));
    CHECK(a.a_im(2, 1) == doctest::Approx(1.0 - g).epsilon(1e-15));
    CHECK(a.a_im(2, 2) == doctest::Approx(g).epsilon(1e-15));
    CHECK(a.a_ex(1, 0) == doctest::Approx(g).epsilon(1e-15));
    CHECK(a.a_ex(2, 0) == doctest::Approx(1.0 - 1.0 / (2.0 * g)).epsilon(1e-14));

    const auto& b = ImexTableau::get("bpr353");
    CHECK(b.stages == 5);
    CHECK(b.a_im(2, 0) == doctest::Approx(5.0 / 18.0).epsilon(1e-15));
    CHECK(b.a_im(2, 1) == doctest::Approx(-1.0 / 9.0).epsilon(1e-15));
    CHECK(b.a_im(4, 3) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(b.w_ex(0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(b.w_ex(2) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(b.c_ex(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const auto& e = ImexTableau::get("euler");
    CHECK(e.stages == 2);
    CHECK(e.a_im(0, 0) == 1.0);
    CHECK(e.a_im(1, 1) == 1.0);
    CHECK(e.a_ex(1, 0) == 1.0);
}

TEST_CASE("tableau: classification") {
    auto ce = classify(ImexTableau::get("euler"));
    CHECK(ce.type == TableauType::A);
    CHECK(ce.isa);
    CHECK(ce.gsa);

    auto ca = classify(ImexTableau::get("ars222"));
    CHECK(ca.type == TableauType::CK);
    CHECK(ca.isa);
    CHECK(ca.gsa);

    auto cb = classify(ImexTableau::get("bpr353"));
    CHECK(cb.type == TableauType::CK);
    CHECK(cb.isa);
    CHECK(cb.gsa);
}

TEST_CASE("tableau: scalar convergence orders") {
    // Split linear ODE with both parts active.
    double le = -0.7, li = -2.0;
    CHECK(imex_order(ImexTableau::get("euler"), le, li) == doctest::Approx(1.0).epsilon(0.15));
    CHECK(imex_order(ImexTableau::get("ars222"), le, li) == doctest::Approx(2.0).epsilon(0.1));
    CHECK(imex_order(ImexTableau::get("bpr353"), le, li) == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("tableau: stiff-limit damping and equilibrium invariance") {
    // u' = -(1/eps^2)(u - g): equilibrium data stays put exactly for every
    // pair; unprepared data is damped in one step. euler/ars222 annihilate
    // the deviation (R(inf) = 0); bpr353 contracts it by R(inf) = -1/3.
    const double g = 0.37;
    for (const char* name : {"euler", "ars222", "bpr353"}) {
        const auto& t = ImexTableau::get(name);
        int s = t.stages;
        double li = -1e12, dt = 0.1;
        auto step_affine = [&](double u0) {
            std::vector<double> U(s), fi(s);
            for (int k = 0; k < s; ++k) {
                double rhs = u0;
                for (int l = 0; l < k; ++l) rhs += dt * t.a_im(k, l) * fi[l];
                double akk = t.a_im(k, k);
                U[k] = (akk == 0.0) ? rhs : (rhs - dt * akk * li * g) / (1.0 - dt * akk * li);
                fi[k] = li * (U[k] - g);
            }
            double u = u0;
            for (int k = 0; k < s; ++k) u += dt * t.w_im(k) * fi[k];
            return u;
        };
        CHECK(step_affine(g) == doctest::Approx(g).epsilon(1e-12));
        double dev = std::abs(step_affine(g + 1.0) - g);
        CHECK(dev <= 0.5);
        if (std::string(name) != "bpr353")
            CHECK(dev <= 1e-9);
        else
            CHECK(dev == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    }
}

TEST_CASE("tableau: diffusion stencil order per scheme") {
    CHECK(diffusion_stencil_order(ImexTableau::get("euler")) == 2);
    CHECK(diffusion_stencil_order(ImexTableau::get("ars222")) == 2);
    CHECK(diffusion_stencil_order(ImexTableau::get("bpr353")) == 4);
}
