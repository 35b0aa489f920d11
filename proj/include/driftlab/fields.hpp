#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "driftlab/core/grid.hpp"
#include "driftlab/core/vec.hpp"

namespace driftlab::fields {

/// Declared singular points evaluate to the zero vector; the convention
/// extends to a tiny ball so that trajectories may step across them.
inline constexpr double kSingularRadius = 1e-8;

/// Time-dependent vector field b(t,x). Evaluation is pure and reentrant.
class Drift {
  public:
    virtual ~Drift() = default;
    virtual int dim() const = 0;
    virtual Vec value(double t, const Vec& x) const = 0;
    virtual bool time_dependent() const { return false; }

    /// True when the spatial Jacobian is bounded and safe to use in
    /// variational equations (mollified or globally Lipschitz fields).
    virtual bool has_smooth_jacobian() const { return false; }
    virtual Mat jacobian(double t, const Vec& x) const;
    virtual double divergence(double t, const Vec& x) const { return jacobian(t, x).trace(); }

    /// Bound K with |b(t,x)| <= K(1+|x|) for the regular part, when known.
    virtual double linear_growth_bound() const { return 0.0; }

    void check_dim(const Vec& x) const {
        if (x.d != dim()) throw std::invalid_argument("drift evaluation: point dimension mismatch");
    }
};

using DriftPtr = std::shared_ptr<const Drift>;

enum class DriftKind { zero, constant, power_law, bessel, bessel_capped, mixed_sign, rotation };

std::string to_string(DriftKind k);
DriftKind drift_kind_from_string(const std::string& s);

struct LpsExponents {
    double p = std::numeric_limits<double>::infinity();
    double q = std::numeric_limits<double>::infinity();
};

/// Analytic drift descriptor: rough part glued to a linear-growth regular
/// part, plus LPS metadata and declared singular points. Serializable.
class DriftSpec : public Drift {
  public:
    int d = 1;
    DriftKind kind = DriftKind::zero;
    double alpha = 0.5;        // power-law exponent
    double beta = 1.0;         // strength of the |x|^-2 x field
    double orientation = 1.0;  // +1 outward, -1 inward (power_law / mixed_sign)
    double cap_radius = 1e-4;  // bessel_capped only
    Vec const_value;           // constant kind
    double lipschitz_bound = 1.0;
    LpsExponents pq;
    std::vector<Vec> singular_points;
    Box default_box = Box::centered(1, 8.0);

    int dim() const override { return d; }
    Vec value(double t, const Vec& x) const override;
    bool has_smooth_jacobian() const override;
    Mat jacobian(double t, const Vec& x) const override;
    double divergence(double t, const Vec& x) const override;
    double linear_growth_bound() const override;

    /// The rough LPS component b^(1) (supported in the unit ball for the
    /// catalog fields); value() equals rough + regular away from singular
    /// points.
    Vec rough_value(double t, const Vec& x) const;
    Vec regular_value(double t, const Vec& x) const;

    nlohmann::json to_json() const;
    static DriftSpec from_json(const nlohmann::json& j);

    static DriftSpec zero_field(int d);
    static DriftSpec constant(const Vec& v);
    static DriftSpec power_law(int d, double alpha, double orientation);
    static DriftSpec bessel(int d, double beta);
    static DriftSpec bessel_capped(int d, double beta, double cap_radius);
    static DriftSpec mixed_sign(double alpha);  // d = 2
    static DriftSpec rotation2d();

  private:
    bool near_singular(const Vec& x) const;
};

/// Drift defined by callables; test/laboratory use, not serializable.
class FunctionDrift : public Drift {
  public:
    using ValueFn = std::function<Vec(double, const Vec&)>;
    using JacFn = std::function<Mat(double, const Vec&)>;

    FunctionDrift(int d, ValueFn f, JacFn jac = nullptr, bool time_dep = false)
        : d_(d), f_(std::move(f)), jac_(std::move(jac)), time_dep_(time_dep) {}

    int dim() const override { return d_; }
    Vec value(double t, const Vec& x) const override { return f_(t, x); }
    bool time_dependent() const override { return time_dep_; }
    bool has_smooth_jacobian() const override { return static_cast<bool>(jac_); }
    Mat jacobian(double t, const Vec& x) const override {
        if (!jac_) return Drift::jacobian(t, x);
        return jac_(t, x);
    }

  private:
    int d_;
    ValueFn f_;
    JacFn jac_;
    bool time_dep_;
};

/// Convenience entry point matching the operation contract: evaluates the
/// drift, returning the zero vector at declared singular points.
inline Vec eval_drift(const Drift& spec, double t, const Vec& x) {
    spec.check_dim(x);
    return spec.value(t, x);
}

// ---------------------------------------------------------------------------
// Scalar coefficient c(t,x)
// ---------------------------------------------------------------------------

enum class ScalarRole { zero, divergence_of_drift, custom };

class Scalar {
  public:
    virtual ~Scalar() = default;
    virtual int dim() const = 0;
    virtual double value(double t, const Vec& x) const = 0;
    virtual Vec gradient(double t, const Vec& x) const;
    virtual bool has_gradient() const { return false; }
    virtual ScalarRole role() const { return ScalarRole::custom; }
};

using ScalarPtr = std::shared_ptr<const Scalar>;

class ZeroScalar : public Scalar {
  public:
    explicit ZeroScalar(int d) : d_(d) {}
    int dim() const override { return d_; }
    double value(double, const Vec&) const override { return 0.0; }
    Vec gradient(double, const Vec&) const override { return Vec::zero(d_); }
    bool has_gradient() const override { return true; }
    ScalarRole role() const override { return ScalarRole::zero; }

  private:
    int d_;
};

class ConstantScalar : public Scalar {
  public:
    ConstantScalar(int d, double v) : d_(d), v_(v) {}
    int dim() const override { return d_; }
    double value(double, const Vec&) const override { return v_; }
    Vec gradient(double, const Vec&) const override { return Vec::zero(d_); }
    bool has_gradient() const override { return true; }

  private:
    int d_;
    double v_;
};

/// c = div b for a paired drift (the continuity-equation coefficient).
class DivergenceScalar : public Scalar {
  public:
    explicit DivergenceScalar(DriftPtr b) : b_(std::move(b)) {}
    int dim() const override { return b_->dim(); }
    double value(double t, const Vec& x) const override { return b_->divergence(t, x); }
    ScalarRole role() const override { return ScalarRole::divergence_of_drift; }
    const Drift& drift() const { return *b_; }

  private:
    DriftPtr b_;
};

class FunctionScalar : public Scalar {
  public:
    using ValueFn = std::function<double(double, const Vec&)>;
    using GradFn = std::function<Vec(double, const Vec&)>;
    FunctionScalar(int d, ValueFn f, GradFn g = nullptr) : d_(d), f_(std::move(f)), g_(std::move(g)) {}
    int dim() const override { return d_; }
    double value(double t, const Vec& x) const override { return f_(t, x); }
    bool has_gradient() const override { return static_cast<bool>(g_); }
    Vec gradient(double t, const Vec& x) const override {
        if (!g_) return Scalar::gradient(t, x);
        return g_(t, x);
    }

  private:
    int d_;
    ValueFn f_;
    GradFn g_;
};

// ---------------------------------------------------------------------------
// LPS norms, criticality, rescaling
// ---------------------------------------------------------------------------

enum class Criticality { subcritical, critical, supercritical };

std::string to_string(Criticality c);

/// |d/p + 2/q - 1| below this counts as critical (exponents are rationals
/// supplied by the user; quadrature noise never enters the classification).
inline constexpr double kCriticalTol = 1e-12;

struct LpsReport {
    double norm_value = 0.0;
    double exponent_sum = 0.0;
    Criticality classification = Criticality::subcritical;
    double quadrature_error_estimate = 0.0;
};

Criticality classify(int d, double p, double q);

struct LpsOptions {
    Box box;
    int resolution = 512;  // spatial cells per dimension
    double t0 = 0.0;
    double T = 1.0;
    int time_slices = 16;  // midpoint slices (1 is exact for autonomous fields)
};

/// Composite quadrature of (int_0^T (int_box |f|^p dx)^{q/p} dt)^{1/q}.
/// p = inf uses the grid max (a documented lower bound of the ess-sup);
/// q = inf uses the max over time slices.
LpsReport lps_norm(const std::function<double(double, const Vec&)>& magnitude, int d, double p, double q,
                   const LpsOptions& opt);
LpsReport lps_norm(const Drift& f, double p, double q, const LpsOptions& opt);
LpsReport lps_norm(const Scalar& f, double p, double q, const LpsOptions& opt);

/// The parabolically rescaled drift b_lambda(t,x) = lambda * b(lambda^2 t, lambda x).
class RescaledDrift : public Drift {
  public:
    RescaledDrift(DriftPtr base, double lambda) : base_(std::move(base)), lambda_(lambda) {
        if (lambda <= 0.0) throw std::invalid_argument("rescale: lambda must be positive");
    }
    int dim() const override { return base_->dim(); }
    bool time_dependent() const override { return base_->time_dependent(); }
    Vec value(double t, const Vec& x) const override {
        return lambda_ * base_->value(lambda_ * lambda_ * t, lambda_ * x);
    }
    bool has_smooth_jacobian() const override { return base_->has_smooth_jacobian(); }
    Mat jacobian(double t, const Vec& x) const override {
        Mat j = base_->jacobian(lambda_ * lambda_ * t, lambda_ * x);
        return lambda_ * lambda_ * j;
    }
    double lambda() const { return lambda_; }

  private:
    DriftPtr base_;
    double lambda_;
};

inline DriftPtr rescale(DriftPtr spec, double lambda) {
    return std::make_shared<RescaledDrift>(std::move(spec), lambda);
}

struct ScalingCheck {
    double lhs = 0.0;  // ||b_lambda|| on [0, T/lambda^2] x box
    double rhs = 0.0;  // lambda^{1-(2/q+d/p)} ||b|| on [0, T] x (lambda box)
    double relative_error = 0.0;
    double quadrature_error_estimate = 0.0;
};

ScalingCheck scaling_identity_check(DriftPtr spec, double lambda, double p, double q, const LpsOptions& opt);

// ---------------------------------------------------------------------------
// Interpolation-inequality ratio
// ---------------------------------------------------------------------------

/// R = int |fg|^2 dx / (||f||_p^2 ||g||_2^{2(1-d/p)} ||grad g||_2^{2d/p}),
/// the scale-invariant combination behind the product estimate; for p = d
/// the denominator is ||f||_d^2 ||grad g||_2^2. Requires p > max(d,2) or
/// p = d >= 3. Throws on a degenerate denominator.
double interpolation_ratio(const GridFunction& f, const GridFunction& g, double p);

}  // namespace driftlab::fields
