#pragma once

#include <complex>
#include <cstdint>

#include "spectra.hpp"

namespace mcshane {

enum class SeriesKind { PuncturedKlein, BorderedKlein, PuncturedTorus, ComplexKlein };

/// Outcome of one series evaluation: partial sum, certified tail bound and
/// the closed-form target it is checked against.
struct SeriesReport {
    SeriesKind kind = SeriesKind::PuncturedKlein;
    std::complex<double> partial_sum{0.0, 0.0};
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
    std::complex<double> target{0.0, 0.0};
    bool converged = false;
    double residual = 0.0;

    // evaluation context, echoed into reports
    std::complex<double> y0{0.0, 0.0};
    std::complex<double> y1{0.0, 0.0};
    std::complex<double> z{0.0, 0.0};
    std::complex<double> l_gamma{0.0, 0.0};
    double c = 1.0;
    double boundary_length = 0.0; // L, bordered case only
    int depth = 0;                // torus case only
};

/// Punctured Klein bottle:  sum over i of 1/(1 + y_i^2 + y_{i+1}^2) with
/// target tanh(l_gamma/2).  Terms are pulled symmetrically; the remaining
/// tail is evaluated exactly from the telescoping form, so tail_bound is the
/// true remainder.
SeriesReport sum_punctured_klein(double y0, double y1, double tol,
                                 std::int64_t max_terms = 10000);

/// Bordered Klein bottle of boundary length L > 0:  sum over i of
/// F(L, l_i, l_{i+1}) + F(L, l_{i+1}, l_i) with l_i = 2 asinh(y_i) and
/// target bordered_rhs(L, l_gamma).  The tail constant is estimated from the
/// last pairs and doubled.
SeriesReport sum_bordered_klein(double L, double y0, double y1, double tol,
                                std::int64_t max_terms = 10000);

/// Orientable baseline: simple closed geodesics of the square punctured
/// torus enumerated through the flip tree of its trace triples, summing
/// 1/(1 + e^l) per geodesic.  Converges to 1/2.
SeriesReport sum_punctured_torus(int depth, double tol);

/// Complex-length extension.  The recursion is run over C; convergence is
/// certified through the exponential growth envelope of |y_n|, which needs
/// Re(l_gamma) bounded away from zero (the loxodromic condition).  Seeds
/// violating it throw LoxodromicViolation.
SeriesReport sum_complex(std::complex<double> y0, std::complex<double> y1,
                         double tol, std::int64_t max_terms = 20000);

/// Exact telescoped value of the punctured-Klein partial sum over the index
/// window [a, b]:  (1/Z) (y_{a-1}/y_a - y_b/y_{b+1}).  This is the proof
/// mechanism of the identity and doubles as the summation oracle in tests.
double telescoped_partial_sum(Spectrum& s, std::int64_t a, std::int64_t b);

} // namespace mcshane
