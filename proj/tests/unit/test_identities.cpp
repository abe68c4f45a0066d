#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/hyptrig.hpp"
#include "core/identities.hpp"
#include "core/mathutil.hpp"
#include "core/spectra.hpp"

using namespace mcshane;

namespace {

// direct textbook evaluation, no overflow protection: the independent route
double naive_R(double x, double y, double z) {
    return x - std::log((std::cosh(y / 2) + std::cosh((x + z) / 2)) /
                        (std::cosh(y / 2) + std::cosh((x - z) / 2)));
}

} // namespace

TEST_CASE("R basics and fixture") {
    CHECK(identity_R(1.7, 0.9, 0.0) == doctest::Approx(1.7).epsilon(1e-15));
    CHECK(identity_R(0.0, 0.9, 2.1) == doctest::Approx(0.0));
    // regression fixture, pinned from the direct formula
    CHECK(identity_R(1, 1, 1) == doctest::Approx(0.77266370619735425).epsilon(1e-15));
    CHECK(identity_R(1, 1, 1) == doctest::Approx(naive_R(1, 1, 1)).epsilon(1e-15));

    Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        double x = rng.uniform(0.0, 20.0);
        double y = rng.uniform(0.0, 20.0);
        double z = rng.uniform(0.0, 20.0);
        CHECK(identity_R(x, y, z) == doctest::Approx(naive_R(x, y, z)).epsilon(1e-12));
    }
}

TEST_CASE("R bounds and monotonicity") {
    Rng rng(103);
    for (int i = 0; i < 500; ++i) {
        double x = rng.uniform(0.0, 50.0);
        double y = rng.uniform(0.0, 50.0);
        double z = rng.uniform(0.0, 50.0);
        double r = identity_R(x, y, z);
        CHECK(r >= -1e-12);
        CHECK(r <= x + 1e-12);
        // increasing in y, decreasing in z at fixed x
        double dy = rng.uniform(0.01, 1.0);
        double dz = rng.uniform(0.01, 1.0);
        CHECK(identity_R(x, y + dy, z) >= r - 1e-12);
        CHECK(identity_R(x, y, z + dz) <= r + 1e-12);
    }
}

TEST_CASE("R tails in stable log form") {
    // at y = 80 the computed deviation collapses below double resolution
    CHECK(std::fabs(identity_R(1.0, 80.0, 1.0) - 1.0) < 1e-20);
    CHECK(std::fabs(identity_R(2.5, 80.0, 0.3) - 2.5) < 1e-20);
    CHECK(std::fabs(identity_R(1.0, 0.7, 80.0)) < 1e-20);
    CHECK(std::fabs(identity_R(2.5, 1.3, 80.0)) < 1e-20);
}

TEST_CASE("D symmetry and degenerations") {
    CHECK(identity_D(1, 2, 3) == identity_D(1, 3, 2));
    CHECK(identity_D(0.0, 1.1, 0.7) == doctest::Approx(0.0));
    // D(x, y, 0) = R(x, 0, y) because R(x, y, 0) = x
    CHECK(identity_D(1.4, 0.9, 0.0) == doctest::Approx(identity_R(1.4, 0.0, 0.9)).epsilon(1e-14));
    Rng rng(107);
    for (int i = 0; i < 300; ++i) {
        double x = rng.uniform(0.0, 50.0);
        double y = rng.uniform(0.0, 50.0);
        double z = rng.uniform(0.0, 50.0);
        CHECK(identity_D(x, y, z) == identity_D(x, z, y));
        CHECK(identity_D(x, y, z) >= -1e-12);
        CHECK(identity_D(x, y, z) <= x + 1e-12);
    }
}

TEST_CASE("E pair sums") {
    double zp = fourth_length_mobius(1, 1, 1);
    double pair = identity_E(1, 1, 1) + identity_E(1, 1, zp);
    CHECK(pair >= 0.0);
    CHECK(pair <= 1.0);

    // z -> 0 limit fixture: E -> R(x, 0, y) - x/2, evaluated directly
    double lim = naive_R(1, 0, 1) - 0.5;
    CHECK(identity_E(1, 1, 1e-14) == doctest::Approx(lim).epsilon(1e-10));

    // decay of the pair sum in y
    double zp40 = fourth_length_mobius(1, 40, 1);
    CHECK(std::fabs(identity_E(1, 40, 1) + identity_E(1, 40, zp40)) < 1e-6);
    // at fixed (x, y) the constraint sends z' -> 0 as z grows, and the pair
    // sum tends to R(x, 0, y) rather than zero; the joint decay that the
    // series needs is along on-shell pairs where y grows too
    double zbig = 40.0;
    double zpb = fourth_length_mobius(1, 1, zbig);
    CHECK(identity_E(1, 1, zbig) + identity_E(1, 1, zpb) ==
          doctest::Approx(identity_R(1, 0, 1)).epsilon(1e-9));
}

TEST_CASE("E/R partition relation is exact") {
    CHECK(relation_DER_residual(1, 1, 1) < 1e-15);
    CHECK(relation_DER_residual(2, 0.1, 3) < 1e-15);
    double worst = 0.0;
    for (double x = 0.1; x <= 5.0; x += 0.7)
        for (double y = 0.1; y <= 5.0; y += 0.7)
            for (double z = 0.1; z <= 5.0; z += 0.7)
                worst = std::max(worst, relation_DER_residual(x, y, z));
    CHECK(worst < 1e-12);
}

TEST_CASE("F closed form") {
    CHECK(identity_F(0.0, 1.2, 0.4) == doctest::Approx(0.0));

    // small-x slope of the ordered pair sum
    for (auto [y, z] : {std::pair{0.7, 1.3}, std::pair{2.0, 0.5}, std::pair{1.0, 1.0}}) {
        double h = 1e-6;
        double slope = (identity_F(h, y, z) + identity_F(h, z, y)) / h;
        double analytic = 2.0 / (std::cosh(y) + std::cosh(z));
        CHECK(slope == doctest::Approx(analytic).epsilon(1e-6));
        CHECK(analytic ==
              doctest::Approx(1.0 / (1.0 + std::pow(std::sinh(y / 2), 2) +
                                     std::pow(std::sinh(z / 2), 2)))
                  .epsilon(1e-14));
    }
}

TEST_CASE("F hexagon reconstruction") {
    // feet of the perpendiculars dropped from the one-sided midpoints:
    //   F(x,y,z) = x/2 - 2 a,  with  tanh a = tanh(z/2)/cosh y'
    // and the ordered pair sums to the full window x - 2a - 2b.
    for (double x = 0.3; x <= 3.0; x += 0.45)
        for (double y = 0.3; y <= 3.0; y += 0.45)
            for (double z = 0.3; z <= 3.0; z += 0.45) {
                double yp = hexagon_opposite_side(x, y, z);
                double zp = hexagon_opposite_side(x, z, y);
                double a = quad_foot_length(z / 2, yp);
                double b = quad_foot_length(y / 2, zp);
                CHECK(identity_F(x, y, z) == doctest::Approx(x / 2 - 2 * a).epsilon(1e-12));
                CHECK(identity_F(x, y, z) + identity_F(x, z, y) ==
                      doctest::Approx(x - 2 * a - 2 * b).epsilon(1e-12));
            }
}

TEST_CASE("F pair sums are non-negative on shell") {
    // lengths produced by actual bordered spectra
    Rng rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        double L = rng.uniform(0.05, 3.0);
        Spectrum s = make_bordered_spectrum(L, rng.uniform(0.3, 4.0), rng.uniform(0.3, 4.0));
        s.ensure(-8, 9);
        for (std::int64_t i = -8; i < 9; ++i) {
            double la = 2.0 * std::asinh(s.term(i));
            double lb = 2.0 * std::asinh(s.term(i + 1));
            CHECK(identity_F(L, la, lb) + identity_F(L, lb, la) >= -1e-12);
        }
    }
}

TEST_CASE("bordered closed form") {
    CHECK(bordered_rhs(0.0, 1.3) == doctest::Approx(0.0));
    for (double L : {0.1, 1.0, 2.0})
        for (double l : {0.5, 1.0, 3.0})
            CHECK(bordered_rhs(L, l) ==
                  doctest::Approx(L - identity_D(L, l, l)).epsilon(1e-10));
    // L -> 0 slope is tanh(l/2)
    for (double l : {0.4, 1.0, 2.7}) {
        double h = 1e-7;
        CHECK(bordered_rhs(h, l) / h == doctest::Approx(std::tanh(l / 2)).epsilon(1e-6));
    }
}
