#include "geom.hpp"

#include <cmath>

#include "errors.hpp"
#include "mathutil.hpp"

namespace mcshane {

namespace {
constexpr double kProjInfTol = 1e-13;
}

bool ProjPoint::is_infinite() const {
    return std::fabs(d) <= kProjInfTol * std::fabs(n);
}

void ProjPoint::normalize() {
    double h = std::hypot(n, d);
    if (h == 0.0) throw DomainError("ProjPoint: null vector");
    n /= h;
    d /= h;
    if (d < 0 || (d == 0 && n < 0)) {
        n = -n;
        d = -d;
    }
}

ProjPoint apply_boundary(const Mat2& m, const ProjPoint& p) {
    ProjPoint q{m.a() * p.n + m.b() * p.d, m.c() * p.n + m.d() * p.d};
    q.normalize();
    return q;
}

cxd apply_interior(const Mat2& m, cxd z) {
    if (m.det_sign() < 0) z = std::conj(z);
    cxd num = m.a() * z + m.b();
    cxd den = m.c() * z + m.d();
    return num / den;
}

double Geodesic::sigma_of(cxd z) const {
    if (vertical) return std::log(z.imag());
    double phi = std::atan2(z.imag(), z.real() - c);
    return std::log(std::tan(phi / 2.0));
}

cxd Geodesic::point_at(double sigma) const {
    if (vertical) return {x0, std::exp(sigma)};
    double phi = 2.0 * std::atan(std::exp(sigma));
    return {c + r * std::cos(phi), r * std::sin(phi)};
}

DirectedGeodesic DirectedGeodesic::from_endpoints(ProjPoint back, ProjPoint fwd) {
    back.normalize();
    fwd.normalize();
    DirectedGeodesic g;
    g.back = back;
    g.fwd = fwd;
    if (back.is_infinite() || fwd.is_infinite()) {
        g.shape.vertical = true;
        g.shape.x0 = back.is_infinite() ? fwd.value() : back.value();
        g.dir = back.is_infinite() ? -1 : +1; // sigma = ln Im grows upward
    } else {
        double pb = back.value();
        double pf = fwd.value();
        if (pb == pf) throw DomainError("DirectedGeodesic: coincident endpoints");
        g.shape.vertical = false;
        g.shape.c = 0.5 * (pb + pf);
        g.shape.r = 0.5 * std::fabs(pb - pf);
        // sigma increases toward the endpoint c - r
        g.dir = (pf < pb) ? +1 : -1;
    }
    return g;
}

DirectedGeodesic apply(const Mat2& m, const DirectedGeodesic& g) {
    return DirectedGeodesic::from_endpoints(apply_boundary(m, g.back),
                                            apply_boundary(m, g.fwd));
}

std::optional<cxd> intersect(const Geodesic& a, const Geodesic& b) {
    if (a.vertical && b.vertical) return std::nullopt;
    if (a.vertical || b.vertical) {
        const Geodesic& v = a.vertical ? a : b;
        const Geodesic& k = a.vertical ? b : a;
        double dx = v.x0 - k.c;
        double y2 = k.r * k.r - dx * dx;
        if (y2 <= 0.0) return std::nullopt;
        return cxd{v.x0, std::sqrt(y2)};
    }
    double dc = b.c - a.c;
    if (dc == 0.0) return std::nullopt; // concentric or identical
    double x = 0.5 * ((a.r * a.r - b.r * b.r) / dc + a.c + b.c);
    double y2 = a.r * a.r - (x - a.c) * (x - a.c);
    if (y2 <= 0.0) return std::nullopt;
    return cxd{x, std::sqrt(y2)};
}

int side_of(const DirectedGeodesic& g, cxd z, double tol) {
    // Map (back, fwd) -> (0, inf) by a positive-determinant real matrix;
    // the left side of the upward imaginary axis is Re < 0.
    double h00 = g.back.d, h01 = -g.back.n;
    double h10 = g.fwd.d, h11 = -g.fwd.n;
    double det = h00 * h11 - h01 * h10;
    if (det < 0) {
        h00 = -h00;
        h01 = -h01;
    }
    cxd num = h00 * z + h01;
    cxd den = h10 * z + h11;
    double re = (num * std::conj(den)).real();
    if (re < -tol) return +1;
    if (re > tol) return -1;
    return 0;
}

Mat2 reflection_across(const Geodesic& g) {
    if (g.vertical) return Mat2(-1.0, 2.0 * g.x0, 0.0, 1.0);
    return Mat2(g.c, g.r * g.r - g.c * g.c, 1.0, -g.c);
}

Mat2 half_turn_about(cxd p) {
    double a = p.real();
    double b = p.imag();
    if (b <= 0) throw DomainError("half_turn_about: point not in H");
    return Mat2(a, -(a * a + b * b), 1.0, -a);
}

double hyp_dist(cxd a, cxd b) {
    double num = std::norm(a - b);
    double den = 2.0 * a.imag() * b.imag();
    return acosh1p(num / den);
}

std::pair<cxd, double> foot_on_geodesic(const Geodesic& g, cxd z) {
    if (g.vertical) {
        double dx = z.real() - g.x0;
        return {cxd{g.x0, std::hypot(dx, z.imag())}, std::asinh(std::fabs(dx) / z.imag())};
    }
    // send (c - r, c + r) to (0, inf), drop on the imaginary axis, map back
    Mat2 h(-1.0, g.c - g.r, 1.0, -(g.c + g.r));
    cxd w = apply_interior(h, z);
    cxd foot_up{0.0, std::abs(w)};
    double dist = std::asinh(std::fabs(w.real()) / w.imag());
    return {apply_interior(h.inverse(), foot_up), dist};
}

DirectedGeodesic geodesic_through(cxd a, cxd b) {
    double dx = a.real() - b.real();
    double scale = std::max(std::abs(a), std::abs(b));
    if (std::fabs(dx) < 1e-13 * std::max(1.0, scale)) {
        double x0 = 0.5 * (a.real() + b.real());
        ProjPoint bot{x0, 1.0};
        ProjPoint top = ProjPoint::infinity();
        if (b.imag() >= a.imag()) return DirectedGeodesic::from_endpoints(bot, top);
        return DirectedGeodesic::from_endpoints(top, bot);
    }
    double c = (std::norm(a) - std::norm(b)) / (2.0 * dx);
    double r = std::abs(a - c);
    DirectedGeodesic g =
        DirectedGeodesic::from_endpoints({c - r, 1.0}, {c + r, 1.0});
    if (g.dir * (g.shape.sigma_of(b) - g.shape.sigma_of(a)) < 0) {
        g = DirectedGeodesic::from_endpoints({c + r, 1.0}, {c - r, 1.0});
    }
    return g;
}

cxd hyp_midpoint(cxd a, cxd b) {
    DirectedGeodesic g = geodesic_through(a, b);
    return g.shape.point_at(0.5 * (g.shape.sigma_of(a) + g.shape.sigma_of(b)));
}

Mat2 frame_translate(double t) {
    double e = std::exp(t / 2.0);
    return Mat2(e, 0.0, 0.0, 1.0 / e);
}

Mat2 frame_rotate(double phi) {
    return Mat2(std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi));
}

cxd frame_point(const Mat2& g) { return apply_interior(g, cxd{0.0, 1.0}); }

DirectedGeodesic frame_heading(const Mat2& g) {
    return DirectedGeodesic::from_endpoints(apply_boundary(g, ProjPoint{0.0, 1.0}),
                                            apply_boundary(g, ProjPoint::infinity()));
}

bool HexagonModel::contains(cxd z, double tol) const {
    for (const auto& s : sides)
        if (side_of(s.geo, z, tol) < 0) return false;
    return true;
}

HexagonModel build_right_angled_hexagon(const std::array<double, 6>& side_lengths) {
    // generic base position: keeps every side off the vertical special case
    Mat2 g = Mat2(1.0, 0.31, 0.47, 1.23) * frame_rotate(0.37);
    Mat2 g0 = g;
    HexagonModel hex;
    for (int k = 0; k < 6; ++k) {
        PolygonSide side;
        side.frame = g;
        side.v_begin = frame_point(g);
        side.geo = frame_heading(g);
        side.length = side_lengths[static_cast<std::size_t>(k)];
        g = g * frame_translate(side.length);
        side.v_end = frame_point(g);
        side.sigma_begin = side.geo.shape.sigma_of(side.v_begin);
        side.sigma_end = side.geo.shape.sigma_of(side.v_end);
        hex.sides[static_cast<std::size_t>(k)] = side;
        g = g * frame_rotate(0.25 * 3.14159265358979323846); // left quarter turn
    }
    hex.closure_residual = hyp_dist(frame_point(g), frame_point(g0));
    if (!(hex.closure_residual < 1e-8))
        throw DomainError("build_right_angled_hexagon: walk failed to close");
    // interior reference point: hexagons are geodesically convex, so the
    // segment joining midpoints of opposite sides stays inside
    cxd m0 = hex.sides[0].geo.shape.point_at(
        0.5 * (hex.sides[0].sigma_begin + hex.sides[0].sigma_end));
    cxd m3 = hex.sides[3].geo.shape.point_at(
        0.5 * (hex.sides[3].sigma_begin + hex.sides[3].sigma_end));
    hex.center = hyp_midpoint(m0, m3);

    // consecutive side circles must meet at right angles
    double worst = 0.0;
    for (int k = 0; k < 6; ++k) {
        const Geodesic& p = hex.sides[static_cast<std::size_t>(k)].geo.shape;
        const Geodesic& q = hex.sides[static_cast<std::size_t>((k + 1) % 6)].geo.shape;
        double cosang;
        if (p.vertical || q.vertical) {
            const Geodesic& v = p.vertical ? p : q;
            const Geodesic& w = p.vertical ? q : p;
            cosang = std::fabs(v.x0 - w.c) / w.r; // |cos| of meeting angle
            cosang = std::fabs(1.0 - cosang);     // right angle iff |x0-c| = 0? no:
            // vertical line meets circle orthogonally iff it passes the center
            cosang = std::fabs(v.x0 - w.c) / w.r;
        } else {
            double d2 = (p.c - q.c) * (p.c - q.c);
            cosang = std::fabs((d2 - p.r * p.r - q.r * q.r) / (2.0 * p.r * q.r));
        }
        worst = std::max(worst, cosang);
    }
    hex.max_angle_residual = worst;
    return hex;
}

} // namespace mcshane
