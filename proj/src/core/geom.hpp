#pragma once

#include <array>
#include <complex>
#include <optional>

#include "mat2.hpp"

namespace mcshane {

// Upper half-plane model.  Geodesics are Euclidean half-circles centered on
// the real axis or vertical rays; isometries are Mat2 elements acting by
// Moebius transformations, with complex conjugation first when det < 0.

using cxd = std::complex<double>;

/// Boundary point of H as a projective pair (n : d); keeps infinity regular.
struct ProjPoint {
    double n = 0.0;
    double d = 1.0;

    static ProjPoint infinity() { return {1.0, 0.0}; }
    bool is_infinite() const;
    double value() const { return n / d; }
    void normalize();
};

/// Image of a boundary point; conjugation is trivial on the real axis, so
/// this is a plain projective matrix action.
ProjPoint apply_boundary(const Mat2& m, const ProjPoint& p);

/// Image of an interior point, conjugating first when det(m) < 0.
cxd apply_interior(const Mat2& m, cxd z);

/// Unoriented geodesic in Euclidean form.
struct Geodesic {
    bool vertical = false;
    double x0 = 0.0; // vertical line Re z = x0
    double c = 0.0;  // circle center on R
    double r = 1.0;  // circle radius

    /// Canonical arclength parameter: ln tan(phi/2) on circles (increasing
    /// toward the endpoint c - r), ln Im z on vertical lines.
    double sigma_of(cxd z) const;
    cxd point_at(double sigma) const;
};

/// Geodesic with a travel direction, stored by its ideal endpoints.
struct DirectedGeodesic {
    ProjPoint back;
    ProjPoint fwd;
    Geodesic shape;
    int dir = 1; // +1 if travel increases sigma

    static DirectedGeodesic from_endpoints(ProjPoint back, ProjPoint fwd);

    cxd point_at_arclength(double sigma_start, double t) const {
        return shape.point_at(sigma_start + dir * t);
    }
};

/// Map a directed geodesic through an isometry.
DirectedGeodesic apply(const Mat2& m, const DirectedGeodesic& g);

/// Transversal intersection point of two geodesics in H, if any.
std::optional<cxd> intersect(const Geodesic& a, const Geodesic& b);

/// +1 if z lies to the left of the directed geodesic, -1 to the right.
int side_of(const DirectedGeodesic& g, cxd z, double tol = 0.0);

/// Reflection across a geodesic (det -1).
Mat2 reflection_across(const Geodesic& g);

/// Rotation by pi about an interior point (det +1, order two).
Mat2 half_turn_about(cxd p);

/// Hyperbolic distance.
double hyp_dist(cxd a, cxd b);

/// Perpendicular foot of z on g together with the distance to it.
std::pair<cxd, double> foot_on_geodesic(const Geodesic& g, cxd z);

/// Geodesic through two distinct interior points, directed from a to b.
DirectedGeodesic geodesic_through(cxd a, cxd b);

/// Midpoint of the geodesic segment [a, b].
cxd hyp_midpoint(cxd a, cxd b);

// --- frames ------------------------------------------------------------

/// Translation by t along the imaginary axis.
Mat2 frame_translate(double t);

/// Rotation about i turning the heading by +2*phi.
Mat2 frame_rotate(double phi);

/// Base point i and upward heading of a frame.
cxd frame_point(const Mat2& g);
DirectedGeodesic frame_heading(const Mat2& g);

// --- right-angled polygons ----------------------------------------------

struct PolygonSide {
    DirectedGeodesic geo;  // directed from v_begin to v_end
    cxd v_begin, v_end;
    double sigma_begin = 0.0, sigma_end = 0.0; // geo.shape params of vertices
    double length = 0.0;
    Mat2 frame; // frame at v_begin heading along the side
};

/// Right-angled hexagon with prescribed side lengths, walked with left
/// turns so the interior lies to the left of every directed side.
struct HexagonModel {
    std::array<PolygonSide, 6> sides;
    double closure_residual = 0.0;
    double max_angle_residual = 0.0;
    cxd center;

    bool contains(cxd z, double tol = 1e-9) const;
};

/// side_lengths in cyclic order S0..S5.  Throws DomainError when the walk
/// fails to close (non-realizable data).
HexagonModel build_right_angled_hexagon(const std::array<double, 6>& side_lengths);

} // namespace mcshane
