#include "driftlab/core/grid.hpp"

#include <algorithm>

namespace driftlab {

namespace {

// Fetch a sample with clamped index in one dimension (used only for stencil
// neighbors of interior cells; the zero-extension happens before we get here).
inline int clamp_idx(int i, int n_nodes) { return std::min(std::max(i, 0), n_nodes - 1); }

}  // namespace

double GridFunction::interp(const Vec& x) const {
    const Grid& g = grid_;
    const int d = g.dim();
    if (!g.box.contains(x)) return 0.0;

    std::array<int, kMaxDim> base{0, 0, 0};
    std::array<double, kMaxDim> u{0.0, 0.0, 0.0};
    for (int k = 0; k < d; ++k) {
        double s = (x[k] - g.box.lo[k]) / g.h(k);
        int i = static_cast<int>(std::floor(s));
        i = std::min(std::max(i, 0), g.cells[k] - 1);
        base[k] = i;
        u[k] = s - i;
    }

    if (d == 1) {
        const int n = g.nodes(0);
        auto f = [&](int i) { return v_[static_cast<std::size_t>(clamp_idx(i, n))]; };
        return detail::catmull_rom(f(base[0] - 1), f(base[0]), f(base[0] + 1), f(base[0] + 2), u[0]);
    }
    if (d == 2) {
        const int n0 = g.nodes(0), n1 = g.nodes(1);
        auto f = [&](int i, int j) {
            return v_[static_cast<std::size_t>(clamp_idx(i, n0)) * static_cast<std::size_t>(n1) +
                      static_cast<std::size_t>(clamp_idx(j, n1))];
        };
        double rows[4];
        for (int di = -1; di <= 2; ++di) {
            rows[di + 1] = detail::catmull_rom(f(base[0] + di, base[1] - 1), f(base[0] + di, base[1]),
                                               f(base[0] + di, base[1] + 1), f(base[0] + di, base[1] + 2), u[1]);
        }
        return detail::catmull_rom(rows[0], rows[1], rows[2], rows[3], u[0]);
    }

    // d == 3: multilinear (only quadrature-grade accuracy is needed in 3d).
    const int n1 = g.nodes(1), n2 = g.nodes(2);
    auto f = [&](int i, int j, int k3) {
        return v_[(static_cast<std::size_t>(i) * static_cast<std::size_t>(n1) + static_cast<std::size_t>(j)) *
                      static_cast<std::size_t>(n2) +
                  static_cast<std::size_t>(k3)];
    };
    double acc = 0.0;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 1; ++c) {
                double w = (a ? u[0] : 1 - u[0]) * (b ? u[1] : 1 - u[1]) * (c ? u[2] : 1 - u[2]);
                acc += w * f(base[0] + a, base[1] + b, base[2] + c);
            }
    return acc;
}

double GridFunction::deriv(std::size_t flat, int k) const {
    const Grid& g = grid_;
    auto id = g.unindex(flat);
    const double hk = g.h(k);
    const int i = id[k];
    const int n = g.cells[k];
    auto value_at = [&](int j) {
        auto id2 = id;
        id2[k] = j;
        return v_[g.index(id2)];
    };
    if (i == 0) return (-3.0 * value_at(0) + 4.0 * value_at(1) - value_at(2)) / (2.0 * hk);
    if (i == n) return (3.0 * value_at(n) - 4.0 * value_at(n - 1) + value_at(n - 2)) / (2.0 * hk);
    return (value_at(i + 1) - value_at(i - 1)) / (2.0 * hk);
}

GridFunction GridFunction::derivative(int k) const {
    GridFunction out(grid_);
    const std::size_t n = grid_.total_nodes();
    for (std::size_t i = 0; i < n; ++i) out[i] = deriv(i, k);
    return out;
}

double GridFunction::lp_norm(double p) const {
    if (std::isinf(p)) return max_abs();
    double s = quadrature([p](double v, const Vec&) { return std::pow(std::abs(v), p); });
    return std::pow(s, 1.0 / p);
}

}  // namespace driftlab
