#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>

namespace driftlab {

// Maximum spatial dimension supported by the lab (the demos live in d <= 2,
// interpolation calibration uses d = 3).
inline constexpr int kMaxDim = 3;

/// Small fixed-capacity vector for points in R^d, d <= 3.
struct Vec {
    std::array<double, kMaxDim> c{0.0, 0.0, 0.0};
    int d = 1;

    Vec() = default;
    explicit Vec(int dim) : d(dim) { assert(dim >= 1 && dim <= kMaxDim); }
    Vec(double x) : d(1) { c[0] = x; }
    Vec(double x, double y) : d(2) {
        c[0] = x;
        c[1] = y;
    }
    Vec(double x, double y, double z) : d(3) {
        c[0] = x;
        c[1] = y;
        c[2] = z;
    }

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < d; ++i) c[i] += o.c[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < d; ++i) c[i] -= o.c[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < d; ++i) c[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }

    double norm2() const {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += c[i] * c[i];
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    static Vec zero(int dim) { return Vec(dim); }
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (int i = 0; i < a.d; ++i) s += a[i] * b[i];
    return s;
}

/// Row-major d x d matrix, d <= 3.
struct Mat {
    std::array<double, kMaxDim * kMaxDim> m{};
    int d = 1;

    Mat() = default;
    explicit Mat(int dim) : d(dim) { assert(dim >= 1 && dim <= kMaxDim); }

    double& operator()(int i, int j) { return m[static_cast<std::size_t>(i * kMaxDim + j)]; }
    double operator()(int i, int j) const { return m[static_cast<std::size_t>(i * kMaxDim + j)]; }

    static Mat identity(int dim) {
        Mat r(dim);
        for (int i = 0; i < dim; ++i) r(i, i) = 1.0;
        return r;
    }

    Vec apply(const Vec& x) const {
        Vec y(d);
        for (int i = 0; i < d; ++i) {
            double s = 0.0;
            for (int j = 0; j < d; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    Mat& operator+=(const Mat& o) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
        return *this;
    }
    Mat& operator*=(double s) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] *= s;
        return *this;
    }
    friend Mat operator*(double s, Mat a) { return a *= s; }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }

    /// Matrix product this * o.
    Mat mul(const Mat& o) const {
        Mat r(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double s = 0.0;
                for (int k = 0; k < d; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += (*this)(i, i);
        return s;
    }

    double det() const {
        if (d == 1) return (*this)(0, 0);
        if (d == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
        const Mat& a = *this;
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }
};

}  // namespace driftlab
