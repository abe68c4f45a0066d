#include "identities.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

#include "errors.hpp"
#include "hyptrig.hpp"
#include "mathutil.hpp"

namespace mcshane {

namespace {

void check_args(double x, double y, double z) {
    if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)))
        throw DomainError("summand: arguments must be finite");
    if (x < 0 || y < 0 || z < 0)
        throw DomainError("summand: arguments must be non-negative");
}

/// ln of a signed sum of exponentials  sum_i c_i e^{t_i}, scaled by the
/// largest exponent.  The sum must be positive.
double log_signed_expsum(std::initializer_list<std::pair<double, double>> terms) {
    double m = -1e308;
    for (const auto& t : terms)
        if (t.second > m) m = t.second;
    double s = 0.0;
    for (const auto& t : terms) s += t.first * std::exp(t.second - m);
    return m + std::log(s);
}

} // namespace

double identity_R(double x, double y, double z) {
    check_args(x, y, z);
    double log_num = log_cosh_plus_cosh(y / 2.0, (x + z) / 2.0);
    double log_den = log_cosh_plus_cosh(y / 2.0, (x - z) / 2.0);
    return x - (log_num - log_den);
}

double identity_D(double x, double y, double z) {
    return identity_R(x, y, z) + identity_R(x, z, y) - x;
}

double identity_E(double x, double y, double z) {
    return identity_R(x, 2.0 * z, y) - x / 2.0;
}

double identity_F(double x, double y, double z) {
    check_args(x, y, z);
    // num = cosh y + e^{x/2} cosh z - sinh(x/2)
    //     = [e^y + e^{-y} + e^{x/2+z} + e^{x/2-z} - e^{x/2} + e^{-x/2}] / 2
    double log_num = log_signed_expsum({{1.0, y},
                                        {1.0, -y},
                                        {1.0, x / 2.0 + z},
                                        {1.0, x / 2.0 - z},
                                        {-1.0, x / 2.0},
                                        {1.0, -x / 2.0}});
    double log_den = log_signed_expsum({{1.0, y},
                                        {1.0, -y},
                                        {1.0, -x / 2.0 + z},
                                        {1.0, -x / 2.0 - z},
                                        {1.0, x / 2.0},
                                        {-1.0, -x / 2.0}});
    return x / 2.0 - (log_num - log_den);
}

double relation_DER_residual(double x, double y, double z) {
    if (z <= 0) throw DomainError("relation_DER_residual: z must be positive");
    if (x == 0) return 0.0;
    double zp = fourth_length_mobius(x, y, z);
    double sum = identity_E(x, y, z) + identity_E(x, y, zp) +
                 (x - identity_R(x, 2.0 * z, y)) + (x - identity_R(x, 2.0 * zp, y));
    return std::fabs(sum / x - 1.0);
}

double bordered_rhs(double L, double l_gamma) {
    if (L < 0) throw DomainError("bordered_rhs: negative boundary length");
    if (l_gamma <= 0) throw DomainError("bordered_rhs: l_gamma must be positive");
    return 2.0 * (log1p_exp(L / 2.0 + l_gamma) - log_add_exp(L / 2.0, l_gamma));
}

} // namespace mcshane
