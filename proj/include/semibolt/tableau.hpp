#pragma once
//! \file tableau.hpp
//! \brief Double Butcher tableaux for implicit-explicit Runge-Kutta pairs and
//!        their structural classification.
//!
//! The explicit table (a_ex, w_ex, c_ex) advances non-stiff terms; the
//! diagonally-implicit table (a_im, w_im, c_im) advances stiff ones. Type A
//! pairs have a nonsingular implicit diagonal; type CK pairs start with a zero
//! implicit row and keep the trailing block invertible. A pair is implicitly
//! stiffly accurate (ISA) when the last implicit row equals w_im, and globally
//! stiffly accurate (GSA) when additionally the last explicit row equals w_ex,
//! in which case the step equals the last stage value.

#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace semibolt {

struct ImexTableau {
    std::string name;
    int stages = 0;
    Eigen::MatrixXd a_ex, a_im; // a_ex strictly lower triangular, a_im lower
    Eigen::VectorXd w_ex, w_im;
    Eigen::VectorXd c_ex, c_im;

    //! Registered pairs: "euler" (2-stage, first order), "ars222"
    //! (second order), "bpr353" (third order).
    static const ImexTableau& get(std::string_view name);
};

enum class TableauType { A, CK, Other };

struct TableauClass {
    TableauType type = TableauType::Other;
    bool isa = false;
    bool gsa = false;
};

TableauClass classify(const ImexTableau& t);

//! Spatial order of the centered second-derivative used for the added
//! diffusion term: 2 for first/second-order pairs, 4 for third order.
int diffusion_stencil_order(const ImexTableau& t);

} // namespace semibolt
