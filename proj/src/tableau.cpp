//! \file tableau.cpp

#include "semibolt/tableau.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace semibolt {

namespace {

ImexTableau make_euler() {
    // Stiffly accurate IMEX Euler written as a 2-stage pair so that both the
    // type-A and the globally-stiffly-accurate properties hold: the step is
    // u1 = un + dt f_ex(un) + dt f_im(u1), duplicated through a final stage
    // whose value is the update itself.
    ImexTableau t;
    t.name = "euler";
    t.stages = 2;
    t.a_ex = Eigen::MatrixXd::Zero(2, 2);
    t.a_ex(1, 0) = 1.0;
    t.a_im = Eigen::MatrixXd::Identity(2, 2);
    t.w_ex = Eigen::VectorXd::Zero(2);
    t.w_ex(0) = 1.0;
    t.w_im = Eigen::VectorXd::Zero(2);
    t.w_im(1) = 1.0;
    t.c_ex = Eigen::VectorXd::Zero(2);
    t.c_ex(1) = 1.0;
    t.c_im = Eigen::VectorXd::Ones(2);
    return t;
}

ImexTableau make_ars222() {
    const double g = 1.0 - std::sqrt(2.0) / 2.0;
    const double d = 1.0 - 1.0 / (2.0 * g);
    ImexTableau t;
    t.name = "ars222";
    t.stages = 3;
    t.a_ex = Eigen::MatrixXd::Zero(3, 3);
    t.a_ex(1, 0) = g;
    t.a_ex(2, 0) = d;
    t.a_ex(2, 1) = 1.0 - d;
    t.a_im = Eigen::MatrixXd::Zero(3, 3);
    t.a_im(1, 1) = g;
    t.a_im(2, 1) = 1.0 - g;
    t.a_im(2, 2) = g;
    t.w_ex = t.a_ex.row(2).transpose();
    t.w_im = t.a_im.row(2).transpose();
    t.c_ex = Eigen::VectorXd::Zero(3);
    t.c_ex(1) = g;
    t.c_ex(2) = 1.0;
    t.c_im = t.c_ex;
    return t;
}

ImexTableau make_bpr353() {
    ImexTableau t;
    t.name = "bpr353";
    t.stages = 5;
    t.a_ex = Eigen::MatrixXd::Zero(5, 5);
    t.a_ex(1, 0) = 1.0;
    t.a_ex(2, 0) = 4.0 / 9.0;
    t.a_ex(2, 1) = 2.0 / 9.0;
    t.a_ex(3, 0) = 0.25;
    t.a_ex(3, 2) = 0.75;
    t.a_ex(4, 0) = 0.25;
    t.a_ex(4, 2) = 0.75;
    t.a_im = Eigen::MatrixXd::Zero(5, 5);
    t.a_im(1, 0) = 0.5;
    t.a_im(1, 1) = 0.5;
    t.a_im(2, 0) = 5.0 / 18.0;
    t.a_im(2, 1) = -1.0 / 9.0;
    t.a_im(2, 2) = 0.5;
    t.a_im(3, 0) = 0.5;
    t.a_im(3, 3) = 0.5;
    t.a_im(4, 0) = 0.25;
    t.a_im(4, 2) = 0.75;
    t.a_im(4, 3) = -0.5;
    t.a_im(4, 4) = 0.5;
    t.w_ex = t.a_ex.row(4).transpose();
    t.w_im = t.a_im.row(4).transpose();
    t.c_ex = Eigen::VectorXd::Zero(5);
    t.c_ex(1) = 1.0;
    t.c_ex(2) = 2.0 / 3.0;
    t.c_ex(3) = 1.0;
    t.c_ex(4) = 1.0;
    t.c_im = t.c_ex;
    return t;
}

} // namespace

const ImexTableau& ImexTableau::get(std::string_view name) {
    static const std::map<std::string, ImexTableau, std::less<>> reg = [] {
        std::map<std::string, ImexTableau, std::less<>> m;
        m.emplace("euler", make_euler());
        m.emplace("ars222", make_ars222());
        m.emplace("bpr353", make_bpr353());
        return m;
    }();
    auto it = reg.find(name);
    if (it == reg.end())
        throw std::invalid_argument("unknown scheme '" + std::string(name) +
                                    "' (expected euler, ars222 or bpr353)");
    return it->second;
}

TableauClass classify(const ImexTableau& t) {
    TableauClass c;
    int s = t.stages;

    bool all_diag = true;
    for (int k = 0; k < s; ++k)
        if (t.a_im(k, k) == 0.0) all_diag = false;

    bool first_row_zero = true;
    for (int k = 0; k < s; ++k)
        if (t.a_im(0, k) != 0.0) first_row_zero = false;
    bool trailing_invertible = true;
    for (int k = 1; k < s; ++k) // lower triangular: determinant = diag product
        if (t.a_im(k, k) == 0.0) trailing_invertible = false;

    if (all_diag)
        c.type = TableauType::A;
    else if (first_row_zero && trailing_invertible)
        c.type = TableauType::CK;
    else
        c.type = TableauType::Other;

    const double tol = 1e-14;
    c.isa = (t.a_im.row(s - 1).transpose() - t.w_im).lpNorm<Eigen::Infinity>() <= tol;
    bool ex_match =
        (t.a_ex.row(s - 1).transpose() - t.w_ex).lpNorm<Eigen::Infinity>() <= tol;
    c.gsa = c.isa && ex_match;
    return c;
}

int diffusion_stencil_order(const ImexTableau& t) {
    return t.name == "bpr353" ? 4 : 2;
}

} // namespace semibolt
