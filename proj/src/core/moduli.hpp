#pragma once

#include <cstdint>
#include <utility>

namespace mcshane {

/// Fenchel-Nielsen point of the one-holed Klein bottle chart: length of the
/// two-sided geodesic and the twist along it.
struct FNPoint {
    double l_gamma = 0.0;
    double theta = 0.0;
};

/// Solve the quadrilateral ratio relation together with the quadratic trace
/// constraint at boundary length L for the one-sided coordinates
/// (Y1, Y2) = (2 sinh(l_mu1/2), 2 sinh(l_mu2/2)).
std::pair<double, double> chart_one_sided_from_fn(double L, const FNPoint& p);

/// Inverse chart: recover (l_gamma, theta) from (Y1, Y2).
FNPoint fn_from_one_sided(double L, double Y1, double Y2);

/// Central-difference check that the volume form in the (l_gamma, theta)
/// chart equals coth(l_mu1/2) coth(l_mu2/2) dl_mu1 ^ dl_mu2.  Returns the
/// deviation of the form ratio from 1.
double jacobian_check_klein(double L, const FNPoint& p, double h);

/// Central-difference residual of coth(z/2) dz + coth(z'/2) dz' = 0 along
/// the fourth-length constraint at fixed (x, y).
double jacobian_check_moebius(double x, double y, double z, double h);

/// Integrand of the unfolded moduli integral in one-sided length
/// coordinates (x, y) for decay power n >= 1.
double klein_unfolded_integrand(int n, double x, double y);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0; // quadrature: certified estimate; MC: 1 sigma
    bool has_target = false;
    double target = 0.0;
    double residual = 0.0;
    std::int64_t samples = 0;
    bool converged = true;
};

/// Unfolded integral over (0,inf)^2 by adaptive quadrature on the truncated
/// square [0, 60]^2 (exponential envelope keeps the tail below 1e-10).
/// Only n = 1 carries the closed-form target 2*pi.
IntegralResult integrate_punctured_klein_quad(int n, double tol);

/// The same integral in its direct single-variable form (n = 1):
/// int_0^inf l tanh(l/2) / cosh(l/2) dl.
IntegralResult integrate_punctured_klein_direct(double tol);

/// Importance-sampled Monte Carlo with Exp(1/2) proposals in each variable;
/// batches are seeded independently so the result is scheduling-invariant.
IntegralResult integrate_punctured_klein_mc(int n, std::int64_t samples, std::uint64_t seed);

} // namespace mcshane
