#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/geom.hpp"
#include "core/hyptrig.hpp"
#include "core/mathutil.hpp"

using namespace mcshane;

TEST_CASE("boundary action handles infinity projectively") {
    Mat2 m(2, 1, 1, 1); // normalized inside
    ProjPoint inf = ProjPoint::infinity();
    ProjPoint img = apply_boundary(m, inf);
    CHECK(img.value() == doctest::Approx(2.0)); // a/c
    ProjPoint zero{0.0, 1.0};
    CHECK(apply_boundary(m, zero).value() == doctest::Approx(1.0)); // b/d
}

TEST_CASE("interior action conjugates for negative determinant") {
    Mat2 refl(-1.0, 0.0, 0.0, 1.0); // z -> -conj(z)
    cxd z{0.7, 1.2};
    cxd img = apply_interior(refl, z);
    CHECK(img.real() == doctest::Approx(-0.7));
    CHECK(img.imag() == doctest::Approx(1.2));
}

TEST_CASE("directed geodesics and arclength parameter") {
    DirectedGeodesic g = DirectedGeodesic::from_endpoints({-1.0, 1.0}, {1.0, 1.0});
    CHECK(!g.shape.vertical);
    CHECK(g.shape.c == doctest::Approx(0.0));
    CHECK(g.shape.r == doctest::Approx(1.0));
    // arclength between parameter values matches hyperbolic distance
    cxd a = g.shape.point_at(-0.4);
    cxd b = g.shape.point_at(0.9);
    CHECK(hyp_dist(a, b) == doctest::Approx(1.3).epsilon(1e-12));

    DirectedGeodesic v = DirectedGeodesic::from_endpoints({0.5, 1.0}, ProjPoint::infinity());
    CHECK(v.shape.vertical);
    CHECK(v.dir == 1);
    CHECK(hyp_dist(v.shape.point_at(0.0), v.shape.point_at(2.0)) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("reflection fixes its geodesic pointwise") {
    Geodesic g{false, 0.0, 1.5, 0.8};
    Mat2 r = reflection_across(g);
    CHECK(r.det_sign() == -1);
    for (double s : {-1.0, 0.0, 0.7, 2.0}) {
        cxd p = g.point_at(s);
        cxd q = apply_interior(r, p);
        CHECK(std::abs(p - q) < 1e-13);
    }
    // an off-geodesic point maps to the same distance on the other side
    cxd w{1.5, 2.0};
    cxd wr = apply_interior(r, w);
    auto [foot, d1] = foot_on_geodesic(g, w);
    auto [foot2, d2] = foot_on_geodesic(g, wr);
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-12));
    CHECK(std::abs(foot - foot2) < 1e-12);
}

TEST_CASE("half turn is an involution fixing its center") {
    cxd p{0.4, 1.7};
    Mat2 q = half_turn_about(p);
    CHECK(q.det_sign() == +1);
    CHECK(std::abs(apply_interior(q, p) - p) < 1e-13);
    cxd w{2.0, 0.5};
    CHECK(std::abs(apply_interior(q, apply_interior(q, w)) - w) < 1e-12);
}

TEST_CASE("side_of distinguishes left and right") {
    // upward imaginary axis: left is Re < 0
    DirectedGeodesic up = DirectedGeodesic::from_endpoints({0.0, 1.0}, ProjPoint::infinity());
    CHECK(side_of(up, {-0.5, 1.0}) == +1);
    CHECK(side_of(up, {0.5, 1.0}) == -1);
    // reversing the direction swaps sides
    DirectedGeodesic dn = DirectedGeodesic::from_endpoints(ProjPoint::infinity(), {0.0, 1.0});
    CHECK(side_of(dn, {-0.5, 1.0}) == -1);
}

TEST_CASE("geodesic intersections") {
    Geodesic a{false, 0.0, 0.0, 1.0};
    Geodesic b{false, 0.0, 1.0, 1.0};
    auto p = intersect(a, b);
    REQUIRE(p.has_value());
    CHECK(p->real() == doctest::Approx(0.5));
    CHECK(p->imag() == doctest::Approx(std::sqrt(0.75)));

    Geodesic far_circle{false, 0.0, 5.0, 1.0};
    CHECK(!intersect(a, far_circle).has_value());

    Geodesic vert{true, 0.3, 0.0, 0.0};
    auto q = intersect(a, vert);
    REQUIRE(q.has_value());
    CHECK(q->imag() == doctest::Approx(std::sqrt(1.0 - 0.09)));
    CHECK(!intersect(vert, Geodesic{true, 0.9, 0, 0}).has_value());
}

TEST_CASE("frames translate and rotate") {
    Mat2 g = frame_translate(1.3);
    CHECK(std::abs(frame_point(g) - cxd{0.0, std::exp(1.3)}) < 1e-12);
    // quarter turn sends the heading of the imaginary axis to the unit circle
    Mat2 k = frame_rotate(0.25 * 3.14159265358979323846);
    DirectedGeodesic h = frame_heading(k);
    CHECK(!h.shape.vertical);
    CHECK(h.shape.c == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h.shape.r == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("right-angled hexagons close for random data") {
    Rng rng(401);
    for (int trial = 0; trial < 50; ++trial) {
        double a1 = rng.uniform(0.1, 3.0);
        double a2 = rng.uniform(0.1, 3.0);
        double a3 = rng.uniform(0.1, 3.0);
        double s12 = hexagon_opposite_side(2 * a1, a3, a2);
        double s23 = hexagon_opposite_side(2 * a2, a1, a3);
        double s31 = hexagon_opposite_side(2 * a3, a2, a1);
        HexagonModel hex = build_right_angled_hexagon({a1, s12, a2, s23, a3, s31});
        CHECK(hex.closure_residual < 1e-8);
        CHECK(hex.max_angle_residual < 1e-8);
        for (int k = 0; k < 6; ++k) {
            const auto& s = hex.sides[static_cast<std::size_t>(k)];
            CHECK(hyp_dist(s.v_begin, s.v_end) == doctest::Approx(s.length).epsilon(1e-10));
            // vertices chain up
            const auto& nxt = hex.sides[static_cast<std::size_t>((k + 1) % 6)];
            CHECK(std::abs(s.v_end - nxt.v_begin) < 1e-10);
        }
        CHECK(hex.contains(hex.center));
    }
}

TEST_CASE("quadrilateral relations hold in a constructed hexagon") {
    // drop the perpendicular from the midpoint of the a3-side onto the
    // a1-side: the resulting three-right-angle quadrilateral realizes both
    // the foot-length formula and the sinh/cosh side relation
    Rng rng(409);
    for (int trial = 0; trial < 20; ++trial) {
        double a1 = rng.uniform(0.2, 2.5);
        double a2 = rng.uniform(0.2, 2.5);
        double a3 = rng.uniform(0.2, 2.5);
        double s12 = hexagon_opposite_side(2 * a1, a3, a2);
        double s23 = hexagon_opposite_side(2 * a2, a1, a3);
        double s31 = hexagon_opposite_side(2 * a3, a2, a1);
        HexagonModel hex = build_right_angled_hexagon({a1, s12, a2, s23, a3, s31});
        const auto& base = hex.sides[0];
        const auto& src = hex.sides[4];
        cxd mid = src.geo.shape.point_at(0.5 * (src.sigma_begin + src.sigma_end));
        auto [foot, perp] = foot_on_geodesic(base.geo.shape, mid);
        double foot_len = hyp_dist(foot, base.v_begin);
        CHECK(foot_len ==
              doctest::Approx(quad_foot_length(a3 / 2, s31)).epsilon(1e-10));
        // side relation of the quadrilateral (three right angles)
        CHECK(std::sinh(foot_len) * std::cosh(perp) ==
              doctest::Approx(std::sinh(a3 / 2)).epsilon(1e-10));
    }
}
