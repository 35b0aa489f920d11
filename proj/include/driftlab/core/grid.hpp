#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "driftlab/core/vec.hpp"

namespace driftlab {

/// Axis-aligned truncation box [lo_k, hi_k]^d.
struct Box {
    std::array<double, kMaxDim> lo{};
    std::array<double, kMaxDim> hi{};
    int d = 1;

    Box() = default;
    static Box centered(int dim, double half_width) {
        Box b;
        b.d = dim;
        for (int k = 0; k < dim; ++k) {
            b.lo[k] = -half_width;
            b.hi[k] = half_width;
        }
        return b;
    }
    double extent(int k) const { return hi[k] - lo[k]; }
    bool contains(const Vec& x) const {
        for (int k = 0; k < d; ++k)
            if (x[k] < lo[k] || x[k] > hi[k]) return false;
        return true;
    }
    Box scaled(double lambda) const {
        Box b = *this;
        for (int k = 0; k < d; ++k) {
            b.lo[k] *= lambda;
            b.hi[k] *= lambda;
        }
        return b;
    }
};

/// Uniform node-centered grid on a box: nodes x_i = lo + i*h, i = 0..n.
/// Quadrature is composite trapezoid; all fixtures are compactly supported
/// well inside the box, so the boundary weights are immaterial.
struct Grid {
    Box box;
    std::array<int, kMaxDim> cells{1, 1, 1};  // cells per dim; nodes = cells+1

    Grid() = default;
    Grid(const Box& b, int cells_per_dim) : box(b) {
        for (int k = 0; k < b.d; ++k) cells[k] = cells_per_dim;
    }
    Grid(const Box& b, const std::array<int, kMaxDim>& c) : box(b), cells(c) {}

    int dim() const { return box.d; }
    int nodes(int k) const { return cells[k] + 1; }
    double h(int k) const { return box.extent(k) / cells[k]; }
    double coord(int k, int i) const { return box.lo[k] + i * h(k); }

    std::size_t total_nodes() const {
        std::size_t n = 1;
        for (int k = 0; k < dim(); ++k) n *= static_cast<std::size_t>(nodes(k));
        return n;
    }

    // Row-major flattening, last dimension fastest.
    std::size_t index(const std::array<int, kMaxDim>& id) const {
        std::size_t r = 0;
        for (int k = 0; k < dim(); ++k) r = r * static_cast<std::size_t>(nodes(k)) + static_cast<std::size_t>(id[k]);
        return r;
    }
    std::array<int, kMaxDim> unindex(std::size_t flat) const {
        std::array<int, kMaxDim> id{0, 0, 0};
        for (int k = dim() - 1; k >= 0; --k) {
            id[k] = static_cast<int>(flat % static_cast<std::size_t>(nodes(k)));
            flat /= static_cast<std::size_t>(nodes(k));
        }
        return id;
    }
    Vec node(std::size_t flat) const {
        auto id = unindex(flat);
        Vec x(dim());
        for (int k = 0; k < dim(); ++k) x[k] = coord(k, id[k]);
        return x;
    }

    double cell_volume() const {
        double v = 1.0;
        for (int k = 0; k < dim(); ++k) v *= h(k);
        return v;
    }

    /// Trapezoid weight of a node (product of 1/2 factors on boundary planes).
    double trapezoid_weight(const std::array<int, kMaxDim>& id) const {
        double w = cell_volume();
        for (int k = 0; k < dim(); ++k)
            if (id[k] == 0 || id[k] == cells[k]) w *= 0.5;
        return w;
    }

    bool same_layout(const Grid& o) const {
        if (dim() != o.dim()) return false;
        for (int k = 0; k < dim(); ++k)
            if (cells[k] != o.cells[k] || box.lo[k] != o.box.lo[k] || box.hi[k] != o.box.hi[k]) return false;
        return true;
    }
};

namespace detail {

/// 1d Catmull-Rom interpolation of four equally spaced samples, local
/// coordinate u in [0,1] between f1 and f2.
inline double catmull_rom(double f0, double f1, double f2, double f3, double u) {
    const double a = -0.5 * f0 + 1.5 * f1 - 1.5 * f2 + 0.5 * f3;
    const double b = f0 - 2.5 * f1 + 2.0 * f2 - 0.5 * f3;
    const double c = 0.5 * (f2 - f0);
    return ((a * u + b) * u + c) * u + f1;
}

}  // namespace detail

/// Scalar field sampled on a Grid with interpolation, differencing and
/// weighted quadrature. Values are zero-extended outside the box (compact
/// support convention).
class GridFunction {
  public:
    GridFunction() = default;
    explicit GridFunction(const Grid& g) : grid_(g), v_(g.total_nodes(), 0.0) {}
    GridFunction(const Grid& g, std::vector<double> values) : grid_(g), v_(std::move(values)) {
        assert(v_.size() == g.total_nodes());
    }

    template <typename F>
    static GridFunction sample(const Grid& g, F&& f) {
        GridFunction u(g);
        const std::size_t n = g.total_nodes();
        for (std::size_t i = 0; i < n; ++i) u.v_[i] = f(g.node(i));
        return u;
    }

    const Grid& grid() const { return grid_; }
    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }
    double& operator[](std::size_t i) { return v_[i]; }
    double operator[](std::size_t i) const { return v_[i]; }
    std::size_t size() const { return v_.size(); }

    double at(const std::array<int, kMaxDim>& id) const { return v_[grid_.index(id)]; }

    /// Piecewise-cubic (Catmull-Rom) interpolation; zero outside the box.
    /// Supported for d = 1, 2; d = 3 falls back to multilinear.
    double interp(const Vec& x) const;

    /// Central-difference partial derivative in direction k at a node
    /// (one-sided second-order stencils at the box boundary).
    double deriv(std::size_t flat, int k) const;

    GridFunction derivative(int k) const;

    /// Trapezoid quadrature of integrand(node_value, node_position).
    template <typename F>
    double quadrature(F&& integrand) const {
        const std::size_t n = grid_.total_nodes();
        double acc = 0.0;
        // Pairwise summation over fixed-size chunks keeps the reduction order
        // identical regardless of traversal strategy.
        std::vector<double> partial;
        partial.reserve(n / 4096 + 1);
        double chunk = 0.0;
        std::size_t in_chunk = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto id = grid_.unindex(i);
            chunk += grid_.trapezoid_weight(id) * integrand(v_[i], grid_.node(i));
            if (++in_chunk == 4096) {
                partial.push_back(chunk);
                chunk = 0.0;
                in_chunk = 0;
            }
        }
        if (in_chunk > 0) partial.push_back(chunk);
        for (double p : partial) acc += p;
        return acc;
    }

    double integral() const {
        return quadrature([](double v, const Vec&) { return v; });
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

    double lp_norm(double p) const;

  private:
    Grid grid_;
    std::vector<double> v_;
};

}  // namespace driftlab
