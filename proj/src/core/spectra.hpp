#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "mat2.hpp"

namespace mcshane {

/// Recursion constant Z = (c + y0^2 + y1^2)/(y0 y1) of a one-sided trace
/// sequence.  For the punctured case (c = 1) this equals 2 cosh(l_gamma/2).
/// Throws InvalidSeed if the seed is not hyperbolic (Z <= 2, or within 1e-12
/// of the parabolic boundary where no tail can be certified).
double z_from_seed(double y0, double y1, double c);

/// Recursion constant of the bordered one-holed Klein bottle with boundary
/// length L:  c(L) = cosh^2(L/4); c(0) = 1 recovers the punctured case.
double bordered_constant(double L);

/// Bi-infinite sequence {y_i} with y_{i+1} = y_i Z - y_{i-1} and
/// y_{i-1} y_{i+1} - y_i^2 = c, grown lazily in both directions.
/// Values are plain data; extension returns nothing shared.
template <class T>
class BasicSpectrum {
  public:
    BasicSpectrum(T y0, T y1, T z, T c)
        : z_(z), c_(c) {
        fwd_.push_back(y0);
        fwd_.push_back(y1);
    }

    T z() const { return z_; }
    T c() const { return c_; }

    /// Logical index range currently generated, inclusive.
    std::int64_t lo() const { return -static_cast<std::int64_t>(bwd_.size()); }
    std::int64_t hi() const { return static_cast<std::int64_t>(fwd_.size()) - 1; }

    T term(std::int64_t i) const {
        if (i >= 0) return fwd_[static_cast<std::size_t>(i)];
        return bwd_[static_cast<std::size_t>(-i) - 1];
    }

    bool truncated_forward() const { return trunc_fwd_; }
    bool truncated_backward() const { return trunc_bwd_; }

    /// Append up to n terms in the forward direction; stops early at the
    /// overflow guard (|y| > 1e300) and marks the tail truncated.  Each new
    /// term is checked against the product relation on the fly.
    void extend_forward(std::int64_t n) {
        for (std::int64_t k = 0; k < n; ++k) {
            if (trunc_fwd_) return;
            T prev = fwd_[fwd_.size() - 2];
            T cur = fwd_.back();
            T next = cur * z_ - prev;
            if (std::abs(next) > 1e300) {
                trunc_fwd_ = true;
                return;
            }
            verify_step(prev, cur, next);
            fwd_.push_back(next);
        }
    }

    void extend_backward(std::int64_t n) {
        for (std::int64_t k = 0; k < n; ++k) {
            if (trunc_bwd_) return;
            T cur = term(lo());
            T after = term(lo() + 1);
            T prev = cur * z_ - after;
            if (std::abs(prev) > 1e300) {
                trunc_bwd_ = true;
                return;
            }
            verify_step(prev, cur, after);
            bwd_.push_back(prev);
        }
    }

    /// Make sure indices [a, b] exist (subject to the overflow guard).
    void ensure(std::int64_t a, std::int64_t b) {
        if (b > hi()) extend_forward(b - hi());
        if (a < lo()) extend_backward(lo() - a);
    }

  private:
    std::vector<T> fwd_; // y_0, y_1, ...
    std::vector<T> bwd_; // y_{-1}, y_{-2}, ...
    T z_, c_;
    bool trunc_fwd_ = false;
    bool trunc_bwd_ = false;
};

using Spectrum = BasicSpectrum<double>;
using ComplexSpectrum = BasicSpectrum<std::complex<double>>;

/// Punctured Klein bottle sequence (c = 1).  Validates the seed.
Spectrum make_punctured_spectrum(double y0, double y1);

/// Bordered sequence with c = cosh^2(L/4).
Spectrum make_bordered_spectrum(double L, double y0, double y1);

/// Two-sided geodesic length 2 arccosh(Z/2) of a real sequence.
double spectrum_l_gamma(double z);

/// Index and value of the minimal element; extends the sequence until both
/// tails are strictly increasing.
std::pair<std::int64_t, double> spectrum_min(Spectrum& s);

/// Coefficients of y_n = c_plus e^{n l/2} + c_minus e^{-n l/2} with
/// c_plus + c_minus = y0 and c_plus c_minus = c / (4 sinh^2(l/2)).
struct GeneralSolutionCoeffs {
    double c_plus = 0.0;
    double c_minus = 0.0;
    double l_gamma = 0.0;

    double predict(std::int64_t n) const;
};

/// Without a y1 hint the larger root is assigned to c_plus (the sequence that
/// grows in the +n direction).  The hinted overload picks the assignment
/// whose predicted y_1 matches.
GeneralSolutionCoeffs general_solution(double y0, double l_gamma, double c);
GeneralSolutionCoeffs general_solution_matching(double y0, double y1, double l_gamma, double c);

/// Traces (x, y, z) = 2 cosh(l/2) of three simple closed geodesics meeting
/// pairwise once, with x^2 + y^2 + z^2 - xyz = -delta + 2.
struct MarkoffTriple {
    double x = 3, y = 3, z = 3;
    double delta = 2;

    double residual() const;
};

/// Breadth-first Vieta-flip enumeration of distinct triples up to sorting.
/// depth 0 yields just the (validated) root.
std::vector<MarkoffTriple> markoff_tree(int depth, double delta);
std::vector<MarkoffTriple> markoff_tree(int depth, double delta, const MarkoffTriple& root);

/// The integral-trace surface: generators of the index-12 subgroup of
/// PGL(2,Z) together with its spectrum, seeded (1, 2) with Z = 3 so that
/// y_i runs through the even-index Fibonacci numbers.
struct FibonacciSurface {
    Mat2 A;
    Mat2 B;
    Spectrum spectrum;
};

FibonacciSurface fibonacci_surface();

} // namespace mcshane
