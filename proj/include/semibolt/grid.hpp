#pragma once
//! \file grid.hpp
//! \brief Cell-centered spatial grid and ghost-padded phase-space storage.

#include <cassert>
#include <vector>

namespace semibolt {

//! Uniform cell-centered grid on [xmin, xmax] with `nghost` ghost layers.
//! Cell i (i = 0..nx-1) is centered at xmin + (i + 1/2) dx; ghost cells use
//! the same indexing extended to i in [-nghost, nx + nghost).
struct SpatialGrid {
    int nx = 0;
    int nghost = 0;
    double xmin = 0.0;
    double xmax = 1.0;

    SpatialGrid() = default;
    SpatialGrid(int nx_, int nghost_, double x0 = 0.0, double x1 = 1.0)
        : nx(nx_), nghost(nghost_), xmin(x0), xmax(x1) {
        assert(nx > 0 && nghost >= 0 && xmax > xmin);
    }

    double dx() const { return (xmax - xmin) / nx; }
    double center(int i) const { return xmin + (i + 0.5) * dx(); }
    //! Position of the interface between cells m-1 and m (m = 0..nx).
    double interface(int m) const { return xmin + m * dx(); }
};

//! Nodal phase-space field phi(x_i, v_j) stored with x-ghost padding.
//! Layout is v-major: for each velocity node j the x-row is contiguous,
//! so spatial stencils stream through memory.
class PhaseField {
  public:
    PhaseField() = default;
    PhaseField(int nx, int nv, int nghost)
        : nx_(nx), nv_(nv), ng_(nghost), stride_(nx + 2 * nghost),
          data_(static_cast<size_t>(stride_) * nv, 0.0) {}

    int nx() const { return nx_; }
    int nv() const { return nv_; }
    int nghost() const { return ng_; }

    //! i in [-nghost, nx + nghost), j in [0, nv).
    double& operator()(int i, int j) {
        assert(i >= -ng_ && i < nx_ + ng_ && j >= 0 && j < nv_);
        return data_[static_cast<size_t>(j) * stride_ + (i + ng_)];
    }
    double operator()(int i, int j) const {
        assert(i >= -ng_ && i < nx_ + ng_ && j >= 0 && j < nv_);
        return data_[static_cast<size_t>(j) * stride_ + (i + ng_)];
    }

    //! Pointer to logical cell 0 of row j; indices [-nghost, nx+nghost) valid.
    double* row(int j) { return data_.data() + static_cast<size_t>(j) * stride_ + ng_; }
    const double* row(int j) const {
        return data_.data() + static_cast<size_t>(j) * stride_ + ng_;
    }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  private:
    int nx_ = 0, nv_ = 0, ng_ = 0, stride_ = 0;
    std::vector<double> data_;
};

} // namespace semibolt
