#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace mcshane {

inline constexpr double kDefaultTol = 1e-9;

/// ln(e^a + e^b) without overflow.
inline double log_add_exp(double a, double b) {
    double m = a > b ? a : b;
    if (m == -std::numeric_limits<double>::infinity()) return m;
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// ln(cosh(a) + cosh(b)), stable for arbitrarily large |a|, |b|.
inline double log_cosh_plus_cosh(double a, double b) {
    a = std::fabs(a);
    b = std::fabs(b);
    double m = a > b ? a : b;
    // cosh a + cosh b = e^m (e^{a-m} + e^{-a-m} + e^{b-m} + e^{-b-m}) / 2
    double s = std::exp(a - m) + std::exp(-a - m) + std::exp(b - m) + std::exp(-b - m);
    return m + std::log(0.5 * s);
}

/// ln(1 + e^t), the softplus function.
inline double log1p_exp(double t) {
    if (t > 36.0) return t + std::exp(-t);
    return std::log1p(std::exp(t));
}

/// arccosh(1 + u) for u >= 0, accurate near u = 0.
inline double acosh1p(double u) {
    if (u < 0) u = 0;
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

/// arccosh(t) for t >= 1, stable near t = 1.
inline double stable_acosh(double t) { return acosh1p(t - 1.0); }

inline bool close(double a, double b, double tol = kDefaultTol) {
    return std::fabs(a - b) <= tol;
}

// --- deterministic RNG (splitmix64) -----------------------------------

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small deterministic generator; identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // decorrelate trivial seeds
        splitmix64(state_);
        splitmix64(state_);
    }

    /// Substream derived from (seed, index), independent of call order.
    static Rng for_index(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed ^ (0x632be59bd9b4e019ULL * (index + 1));
        return Rng(s);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

  private:
    std::uint64_t state_;
};

} // namespace mcshane
