#pragma once

#include <cmath>
#include <cstdint>

namespace driftlab {

// Counter-based splittable generator in the SplitMix64 family (Steele, Lea,
// Flood 2014; finalizer by Vigna). A (seed, stream) pair derives a key; the
// k-th variate of the stream is a pure function of (key, k), so draws are
// reproducible independent of evaluation order and worker count.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id)
        : key_(mix(mix(seed ^ 0x6A09E667F3BCC909ULL) + (stream_id + 1) * 0x9E3779B97F4A7C15ULL)) {}

    std::uint64_t bits(std::uint64_t counter) const { return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL); }

    /// Uniform draw in the open interval (0,1).
    double uniform(std::uint64_t counter) const {
        return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw via the inverse CDF (no rejection, so the stream
    /// position of every draw is fixed).
    double normal(std::uint64_t counter) const { return normal_icdf(uniform(counter)); }

    /// Inverse standard normal CDF: Acklam's rational approximation polished
    /// by one Halley step through erfc. Absolute error below 1e-13.
    static double normal_icdf(double p);

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
};

inline double CounterRng::normal_icdf(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,  -2.759285104469687e+02,
                                    1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                    6.680131188771972e+01, -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                    -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double dd[4] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                     3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }

    // One Halley refinement step.
    constexpr double sqrt_2pi = 2.5066282746310002;
    double e = 0.5 * std::erfc(-x / 1.4142135623730951) - p;
    double u = e * sqrt_2pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace driftlab
