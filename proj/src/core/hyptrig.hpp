#pragma once

#include <complex>

#include "mat2.hpp"

namespace mcshane {

enum class Sidedness { TwoSided, OneSided };

/// Length of a closed geodesic together with the sidedness of the curve.
/// Lengths are always stored in full (never half); every half-argument in a
/// formula is taken at the use site.
struct GeodesicLength {
    double value = 0.0;
    Sidedness sidedness = Sidedness::TwoSided;
};

/// Complex translation length: real part is the geodesic length, imaginary
/// part the rotation angle of the normal bundle, reduced mod pi to (-pi/2, pi/2].
struct ComplexLength {
    std::complex<double> value;
};

ComplexLength make_complex_length(std::complex<double> raw);

/// Trace -> length.  det_sign = +1: tr = 2 cosh(l/2), requires t >= 2.
/// det_sign = -1: tr = 2 sinh(l/2), requires t > 0.
GeodesicLength length_from_trace(double t, int det_sign);

/// Length -> trace: 2 cosh(l/2) for two-sided, 2 sinh(l/2) for one-sided.
double trace_from_length(const GeodesicLength& l);

/// |LHS - RHS| of the PGL(2,R) trace identity
///   detB tr(A)^2 + detA tr(B)^2 + tr(AB)^2 - trA trB trAB = tr(A B A^+ B^+) + 2 detA detB.
double trace_identity_residual(const Mat2& A, const Mat2& B);

/// |LHS - RHS| of  tr(AB) + tr(A B^+) = tr(A) tr(B).
double product_trace_residual(const Mat2& A, const Mat2& B);

/// Fourth length on a Moebius strip minus a disk: given boundary lengths x, y
/// and one interior one-sided length z, the other satisfies
///   cosh(x/2) + cosh(y/2) = 2 sinh(z/2) sinh(z'/2).
double fourth_length_mobius(double x, double y, double z);

/// Side of a right-angled hexagon opposite the y-side, for alternating sides
/// (x/2, y, z):  cosh y' = (cosh y + cosh(x/2) cosh z) / (sinh(x/2) sinh z).
double hexagon_opposite_side(double x, double y, double z);

/// Foot length in a quadrilateral with three right angles:
///   tanh a = tanh(half_side) / cosh(opposite).
double quad_foot_length(double half_side, double opposite);

/// Trace of the three-fold-symmetric geodesic around a pair of pants whose
/// cuffs have traces x, y, z:  tr = x^2 + y^2 + z^2 - xyz - 2.
double three_fold_trace(double x, double y, double z);

} // namespace mcshane
