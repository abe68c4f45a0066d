#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/hyptrig.hpp"
#include "core/mathutil.hpp"
#include "core/moduli.hpp"
#include "core/quadrature.hpp"
#include "core/spectra.hpp"

using namespace mcshane;

namespace {
constexpr double kTwoPi = 6.283185307179586;
}

TEST_CASE("one-sided chart from Fenchel-Nielsen data") {
    double l = 2.0 * std::acosh(1.5);
    auto [y1, y2] = chart_one_sided_from_fn(0.0, {l, l / 2});
    CHECK(y1 == doctest::Approx(y2).epsilon(1e-14)); // theta = l/2 is symmetric
    // halved coordinates satisfy the cusped quadratic relation
    double a = y1 / 2, b = y2 / 2;
    CHECK(a * a + b * b - a * b * 3.0 == doctest::Approx(-1.0).epsilon(1e-12));

    // theta -> l - theta swaps the pair
    FNPoint p{1.7, 0.5};
    auto [u1, u2] = chart_one_sided_from_fn(0.8, p);
    auto [v1, v2] = chart_one_sided_from_fn(0.8, {p.l_gamma, p.l_gamma - p.theta});
    CHECK(u1 == doctest::Approx(v2).epsilon(1e-12));
    CHECK(u2 == doctest::Approx(v1).epsilon(1e-12));

    CHECK_THROWS_AS(chart_one_sided_from_fn(1.0, {0.0, 0.0}), DomainError);
}

TEST_CASE("chart substitution residuals and inverse") {
    Rng rng(601);
    for (int trial = 0; trial < 60; ++trial) {
        double L = rng.uniform(0.0, 3.0);
        double l = rng.uniform(0.3, 4.0);
        double theta = rng.uniform(0.01, 0.99) * l;
        auto [y1, y2] = chart_one_sided_from_fn(L, {l, theta});
        // ratio relation
        CHECK(y1 / y2 == doctest::Approx(std::cosh(theta / 2) /
                                         std::cosh((l - theta) / 2))
                             .epsilon(1e-10));
        // quadratic constraint at the boundary trace
        double lhs = y1 * y1 + y2 * y2 - 2.0 * y1 * y2 * std::cosh(l / 2);
        CHECK(lhs == doctest::Approx(-(2.0 * std::cosh(L / 2) + 2.0)).epsilon(1e-10));
        // inverse chart returns the starting point
        FNPoint back = fn_from_one_sided(L, y1, y2);
        CHECK(back.l_gamma == doctest::Approx(l).epsilon(1e-8));
        CHECK(back.theta == doctest::Approx(theta).epsilon(1e-8));
    }
}

TEST_CASE("volume form invariance in the Klein chart") {
    Rng rng(607);
    for (int trial = 0; trial < 50; ++trial) {
        double L = rng.uniform(0.0, 3.0);
        double l = rng.uniform(0.4, 4.0);
        double theta = rng.uniform(0.05, 0.95) * l;
        CHECK(jacobian_check_klein(L, {l, theta}, 1e-5) < 1e-5);
    }
    // symmetric and near-degenerate twists
    CHECK(jacobian_check_klein(1.0, {2.0, 1.0}, 1e-5) < 1e-5);
    double l = 2.2;
    CHECK(jacobian_check_klein(0.5, {l, 1e-3 * l}, 1e-6) < 1e-5);
}

TEST_CASE("one-sided pair flip preserves the length form") {
    // symmetric point: dz'/dz = -1 outright
    double x = 1.3;
    double z = 2.0 * std::asinh(std::sqrt(std::cosh(x / 2)));
    double h = 1e-5;
    double dzp = (fourth_length_mobius(x, x, z + h) - fourth_length_mobius(x, x, z - h)) /
                 (2 * h);
    CHECK(dzp == doctest::Approx(-1.0).epsilon(1e-8));

    CHECK(jacobian_check_moebius(1, 1, 1, 1e-5) < 1e-6);
    double worst = 0.0;
    for (double a = 0.5; a <= 4.0; a += 0.5)
        for (double b = 0.5; b <= 4.0; b += 0.5)
            for (double c = 0.5; c <= 4.0; c += 0.5)
                worst = std::max(worst, jacobian_check_moebius(a, b, c, 1e-5));
    CHECK(worst < 1e-5);

    // the full-argument variant fails by a wide margin: the half-argument
    // form is the one the geometry satisfies
    double zz = 1.0, zzp = fourth_length_mobius(1, 1, 1);
    double d = (fourth_length_mobius(1, 1, zz + h) - fourth_length_mobius(1, 1, zz - h)) /
               (2 * h);
    double full_arg = std::fabs(1.0 / std::tanh(zz) + d / std::tanh(zzp));
    CHECK(full_arg > 1e-2);
}

TEST_CASE("adaptive quadrature on a closed form") {
    auto r = integrate_gk([](double t) { return std::exp(-t); }, 0.0, 40.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unfolded integrand envelope") {
    // justifies the truncation at 60: integrand below 8 e^{-x/2} e^{-y/2}
    for (double x = 0.0; x <= 60.0; x += 2.5)
        for (double y = 0.0; y <= 60.0; y += 2.5)
            CHECK(klein_unfolded_integrand(1, x, y) <=
                  8.0 * std::exp(-0.5 * (x + y)) + 1e-300);
}

TEST_CASE("moduli integral equals two pi") {
    auto quad = integrate_punctured_klein_quad(1, 1e-8);
    CHECK(quad.residual < 1e-6);
    auto direct = integrate_punctured_klein_direct(1e-9);
    CHECK(direct.residual < 1e-8);
    CHECK(std::fabs(quad.value - direct.value) < 1e-8);

    auto mc = integrate_punctured_klein_mc(1, 2000000, 1234);
    CHECK(std::fabs(mc.value - kTwoPi) < 3.0 * mc.error_estimate);

    // decay powers beyond the closed form still integrate
    auto n2 = integrate_punctured_klein_quad(2, 1e-7);
    CHECK(n2.value > 0.0);
    CHECK(!n2.has_target);
}

TEST_CASE("monte carlo batching is deterministic") {
    auto a = integrate_punctured_klein_mc(1, 500000, 77);
    auto b = integrate_punctured_klein_mc(1, 500000, 77);
    CHECK(a.value == b.value);
    auto c = integrate_punctured_klein_mc(1, 500000, 78);
    CHECK(a.value != c.value);
}
