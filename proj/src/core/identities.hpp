#pragma once

namespace mcshane {

// Summand functions of the boundary-partition identities.  All arguments are
// full geodesic lengths, finite and non-negative; every log-ratio is computed
// in overflow-safe form so tails at lengths ~100 stay representable.

/// R(x,y,z) = x - ln[(cosh(y/2) + cosh((x+z)/2)) / (cosh(y/2) + cosh((x-z)/2))].
/// Satisfies 0 <= R <= x; R/x is the probability that a perpendicular
/// geodesic from the x-boundary of a pair of pants avoids the z-cuff.
double identity_R(double x, double y, double z);

/// D(x,y,z) = R(x,y,z) + R(x,z,y) - x, symmetric in (y,z).
double identity_D(double x, double y, double z);

/// E(x,y,z) = R(x,2z,y) - x/2.  Only pair sums E(x,y,z) + E(x,y,z') carry
/// probability meaning; the individual split is a convention.
double identity_E(double x, double y, double z);

/// F(x,y,z) = x/2 - ln[(cosh y + e^{x/2} cosh z - sinh(x/2)) /
///                     (cosh y + e^{-x/2} cosh z + sinh(x/2))].
double identity_F(double x, double y, double z);

/// Consistency residual of the E/R splitting against the partition relation
///   E(x,y,z) + E(x,y,z') + (x - R(x,2z,y)) + (x - R(x,2z',y)) = x,
/// with z' the fourth length.  Zero identically (algebraic identity).
double relation_DER_residual(double x, double y, double z);

/// Closed form of the bordered one-holed Klein series:
///   2 ln[(1 + e^{L/2} e^{l}) / (e^{L/2} + e^{l})]  ==  L - D(L, l, l).
double bordered_rhs(double L, double l_gamma);

} // namespace mcshane
