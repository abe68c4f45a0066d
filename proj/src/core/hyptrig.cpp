#include "hyptrig.hpp"

#include <cmath>

#include "errors.hpp"
#include "mathutil.hpp"

namespace mcshane {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ComplexLength make_complex_length(std::complex<double> raw) {
    double re = raw.real();
    double im = raw.imag();
    // reduce the rotation angle to the canonical mod-pi representative
    im = std::fmod(im, kPi);
    if (im <= -kPi / 2) im += kPi;
    if (im > kPi / 2) im -= kPi;
    return ComplexLength{{re, im}};
}

GeodesicLength length_from_trace(double t, int det_sign) {
    if (det_sign > 0) {
        if (t < 2.0) {
            if (t > 2.0 - 1e-12) t = 2.0; // parabolic boundary case
            else
                throw DomainError("length_from_trace: trace < 2 with det +1 is elliptic/parabolic");
        }
        return GeodesicLength{2.0 * acosh1p(t / 2.0 - 1.0), Sidedness::TwoSided};
    }
    if (t <= 0.0)
        throw DomainError("length_from_trace: one-sided class requires positive trace");
    return GeodesicLength{2.0 * std::asinh(t / 2.0), Sidedness::OneSided};
}

double trace_from_length(const GeodesicLength& l) {
    if (l.value < 0) throw DomainError("trace_from_length: negative length");
    if (l.sidedness == Sidedness::TwoSided) return 2.0 * std::cosh(l.value / 2.0);
    return 2.0 * std::sinh(l.value / 2.0);
}

namespace {

// the identities cancel totals that grow like the fourth power of the
// entries, so the residuals are accumulated in extended precision
struct Wide2 {
    long double a, b, c, d;

    static Wide2 of(const Mat2& m) { return {m.a(), m.b(), m.c(), m.d()}; }
    Wide2 adj() const { return {d, -b, -c, a}; }
    long double tr() const { return a + d; }

    friend Wide2 operator*(const Wide2& x, const Wide2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

} // namespace

double trace_identity_residual(const Mat2& A, const Mat2& B) {
    Wide2 a = Wide2::of(A), b = Wide2::of(B);
    long double dA = A.det_sign();
    long double dB = B.det_sign();
    long double trA = a.tr();
    long double trB = b.tr();
    long double trAB = (a * b).tr();
    long double lhs = dB * trA * trA + dA * trB * trB + trAB * trAB - trA * trB * trAB;
    long double rhs = (a * b * a.adj() * b.adj()).tr() + 2.0L * dA * dB;
    return static_cast<double>(std::fabs(static_cast<double>(lhs - rhs)));
}

double product_trace_residual(const Mat2& A, const Mat2& B) {
    Wide2 a = Wide2::of(A), b = Wide2::of(B);
    long double lhs = (a * b).tr() + (a * b.adj()).tr();
    long double rhs = a.tr() * b.tr();
    return static_cast<double>(std::fabs(static_cast<double>(lhs - rhs)));
}

double fourth_length_mobius(double x, double y, double z) {
    if (x < 0 || y < 0) throw DomainError("fourth_length_mobius: negative boundary length");
    if (z <= 0) throw DomainError("fourth_length_mobius: z must be positive");
    // sinh(z'/2) = (cosh(x/2) + cosh(y/2)) / (2 sinh(z/2)); stable in logs for
    // large arguments.
    double log_num = log_cosh_plus_cosh(x / 2.0, y / 2.0);
    double log_den = std::log(2.0) + std::log(std::sinh(z / 2.0));
    double log_s = log_num - log_den;
    // asinh(e^t) = ln(e^t + sqrt(e^{2t}+1))
    double s;
    if (log_s > 20.0) {
        s = log_s + std::log(2.0); // sqrt term indistinguishable from e^t
    } else {
        s = std::asinh(std::exp(log_s));
    }
    return 2.0 * s;
}

double hexagon_opposite_side(double x, double y, double z) {
    if (x <= 0 || z <= 0)
        throw DomainError("hexagon_opposite_side: x and z must be positive");
    double num = std::cosh(y) + std::cosh(x / 2.0) * std::cosh(z);
    double den = std::sinh(x / 2.0) * std::sinh(z);
    double arg = num / den;
    if (arg < 1.0) {
        if (arg > 1.0 - 1e-12) arg = 1.0;
        else
            throw DomainError("hexagon_opposite_side: non-realizable hexagon");
    }
    return stable_acosh(arg);
}

double quad_foot_length(double half_side, double opposite) {
    if (opposite < 0) throw DomainError("quad_foot_length: negative opposite side");
    return std::atanh(std::tanh(half_side) / std::cosh(opposite));
}

double three_fold_trace(double x, double y, double z) {
    return x * x + y * y + z * z - x * y * z - 2.0;
}

} // namespace mcshane
