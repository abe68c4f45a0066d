#include "moduli.hpp"

#include <cmath>

#include "errors.hpp"
#include "hyptrig.hpp"
#include "mathutil.hpp"
#include "quadrature.hpp"

namespace mcshane {

namespace {
constexpr double kTwoPi = 6.283185307179586;
constexpr double kCut = 60.0; // truncation edge; tail below 1e-10 by envelope
} // namespace

std::pair<double, double> chart_one_sided_from_fn(double L, const FNPoint& p) {
    if (L < 0) throw DomainError("chart_one_sided_from_fn: negative boundary length");
    if (!(p.l_gamma > 0)) throw DomainError("chart_one_sided_from_fn: l_gamma must be positive");
    double l = p.l_gamma;
    double theta = std::fmod(p.theta, l);
    if (theta < 0) theta += l;
    double ratio = std::cosh(theta / 2.0) / std::cosh((l - theta) / 2.0);
    double big_z = 2.0 * std::cosh(l / 2.0);
    double disc = ratio * big_z - ratio * ratio - 1.0;
    if (disc <= 0)
        throw DomainError("chart_one_sided_from_fn: constraint admits no positive root");
    double y2 = 2.0 * std::cosh(L / 4.0) / std::sqrt(disc);
    return {ratio * y2, y2};
}

FNPoint fn_from_one_sided(double L, double Y1, double Y2) {
    if (!(Y1 > 0) || !(Y2 > 0)) throw DomainError("fn_from_one_sided: Y must be positive");
    double k = std::cosh(L / 4.0);
    double big_z = (Y1 * Y1 + Y2 * Y2 + 4.0 * k * k) / (Y1 * Y2);
    if (big_z <= 2.0) throw DomainError("fn_from_one_sided: point not realizable");
    double l = 2.0 * stable_acosh(big_z / 2.0);
    double ratio = Y1 / Y2;
    double t = (ratio * std::cosh(l / 2.0) - 1.0) / (ratio * std::sinh(l / 2.0));
    if (!(t > -1.0 && t < 1.0)) throw DomainError("fn_from_one_sided: twist out of chart");
    return {l, 2.0 * std::atanh(t)};
}

double jacobian_check_klein(double L, const FNPoint& p, double h) {
    if (!(h > 0)) throw DomainError("jacobian_check_klein: step must be positive");
    auto at = [&](double l, double th) { return chart_one_sided_from_fn(L, {l, th}); };
    auto [y1_lp, y2_lp] = at(p.l_gamma + h, p.theta);
    auto [y1_lm, y2_lm] = at(p.l_gamma - h, p.theta);
    auto [y1_tp, y2_tp] = at(p.l_gamma, p.theta + h);
    auto [y1_tm, y2_tm] = at(p.l_gamma, p.theta - h);
    double j00 = (y1_lp - y1_lm) / (2.0 * h);
    double j01 = (y1_tp - y1_tm) / (2.0 * h);
    double j10 = (y2_lp - y2_lm) / (2.0 * h);
    double j11 = (y2_tp - y2_tm) / (2.0 * h);
    double det = j00 * j11 - j01 * j10;
    auto [y1, y2] = at(p.l_gamma, p.theta);
    // dl ^ dtheta = coth(l1/2) coth(l2/2) dl1 ^ dl2 with Y = 2 sinh(l/2):
    // the form ratio reduces to 4 |det d(Y1,Y2)/d(l,theta)| / (Y1 Y2)
    return std::fabs(4.0 * std::fabs(det) / (y1 * y2) - 1.0);
}

double jacobian_check_moebius(double x, double y, double z, double h) {
    if (!(h > 0)) throw DomainError("jacobian_check_moebius: step must be positive");
    double zp = fourth_length_mobius(x, y, z);
    double dzp = (fourth_length_mobius(x, y, z + h) - fourth_length_mobius(x, y, z - h)) /
                 (2.0 * h);
    return std::fabs(1.0 / std::tanh(z / 2.0) + dzp / std::tanh(zp / 2.0));
}

double klein_unfolded_integrand(int n, double x, double y) {
    if (n < 1) throw DomainError("klein_unfolded_integrand: n must be >= 1");
    double sx = std::sinh(x / 2.0), sy = std::sinh(y / 2.0);
    double den = 1.0 + sx * sx + sy * sy;
    // (2 sx sy)^n / den^{n+1} * coth(x/2) coth(y/2), written without the
    // removable 0/0 at the axes
    return std::pow(2.0, n) * std::pow(sx * sy, n - 1) * std::cosh(x / 2.0) *
           std::cosh(y / 2.0) / std::pow(den, n + 1);
}

IntegralResult integrate_punctured_klein_quad(int n, double tol) {
    if (n < 1) throw DomainError("integrate_punctured_klein_quad: n must be >= 1");
    if (!(tol > 0)) throw DomainError("integrate_punctured_klein_quad: tolerance must be positive");
    IntegralResult res;
    bool inner_ok = true;
    auto outer = [&](double x) {
        auto in = integrate_gk([&, x](double y) { return klein_unfolded_integrand(n, x, y); },
                               0.0, kCut, tol * 1e-3);
        inner_ok = inner_ok && in.converged;
        return in.value;
    };
    auto q = integrate_gk(outer, 0.0, kCut, tol * 0.25);
    res.value = q.value;
    res.error_estimate = q.error_estimate + tol * 1e-3 * kCut;
    res.converged = q.converged && inner_ok;
    if (!res.converged)
        throw NoConvergence("integrate_punctured_klein_quad: tolerance not met");
    if (n == 1) {
        res.has_target = true;
        res.target = kTwoPi;
        res.residual = std::fabs(res.value - kTwoPi);
    }
    return res;
}

IntegralResult integrate_punctured_klein_direct(double tol) {
    IntegralResult res;
    auto q = integrate_gk(
        [](double l) { return l * std::tanh(l / 2.0) / std::cosh(l / 2.0); }, 0.0, 2.0 * kCut,
        tol * 0.5);
    res.value = q.value;
    res.error_estimate = q.error_estimate;
    res.converged = q.converged;
    if (!res.converged) throw NoConvergence("integrate_punctured_klein_direct: tolerance not met");
    res.has_target = true;
    res.target = kTwoPi;
    res.residual = std::fabs(res.value - kTwoPi);
    return res;
}

IntegralResult integrate_punctured_klein_mc(int n, std::int64_t samples, std::uint64_t seed) {
    if (n < 1) throw DomainError("integrate_punctured_klein_mc: n must be >= 1");
    if (samples < 1) throw DomainError("integrate_punctured_klein_mc: need samples");
    // proposal density (1/4) e^{-x/2} e^{-y/2}
    constexpr std::int64_t kBatch = 1 << 16;
    double sum = 0.0, sumsq = 0.0;
    std::int64_t done = 0;
    for (std::int64_t batch = 0; done < samples; ++batch) {
        Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(batch));
        std::int64_t m = std::min(kBatch, samples - done);
        double bs = 0.0, bs2 = 0.0;
        for (std::int64_t i = 0; i < m; ++i) {
            double x = -2.0 * std::log1p(-rng.uniform());
            double y = -2.0 * std::log1p(-rng.uniform());
            double w = klein_unfolded_integrand(n, x, y) * 4.0 *
                       std::exp(0.5 * (x + y));
            bs += w;
            bs2 += w * w;
        }
        sum += bs;
        sumsq += bs2;
        done += m;
    }
    double mean = sum / static_cast<double>(samples);
    double var = std::max(0.0, sumsq / static_cast<double>(samples) - mean * mean);
    IntegralResult res;
    res.value = mean;
    res.error_estimate = std::sqrt(var / static_cast<double>(samples));
    res.samples = samples;
    if (n == 1) {
        res.has_target = true;
        res.target = kTwoPi;
        res.residual = std::fabs(mean - kTwoPi);
    }
    return res;
}

} // namespace mcshane
