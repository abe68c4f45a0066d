#include "shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "errors.hpp"
#include "hyptrig.hpp"
#include "mathutil.hpp"

namespace mcshane {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kVertexGuard = 1e-10; // arclength guard around polygon vertices
constexpr double kSpanTol = 1e-12;     // inclusion tolerance on side spans
constexpr double kArcSpanTol = 1e-11;  // inclusion tolerance on recorded arc spans
constexpr double kInf = std::numeric_limits<double>::infinity();

struct RayState {
    int chart = 0;
    int entry_side = -1; // side just crossed; a geodesic never recrosses it
    DirectedGeodesic geo;
    double sigma = 0.0;
};

struct ExitEvent {
    int side = -1;
    double t = kInf;
    double sigma_exit = 0.0;
    cxd point;
};

ExitEvent find_exit(const HexagonModel& hex, const RayState& ray) {
    ExitEvent best;
    for (int k = 0; k < 6; ++k) {
        if (k == ray.entry_side) continue;
        const PolygonSide& side = hex.sides[static_cast<std::size_t>(k)];
        auto pt = intersect(ray.geo.shape, side.geo.shape);
        if (!pt) continue;
        double sr = ray.geo.shape.sigma_of(*pt);
        double t = ray.geo.dir * (sr - ray.sigma);
        if (t <= 0.0) continue;
        double ss = side.geo.shape.sigma_of(*pt);
        double lo = std::min(side.sigma_begin, side.sigma_end);
        double hi = std::max(side.sigma_begin, side.sigma_end);
        if (ss < lo - kSpanTol || ss > hi + kSpanTol) continue;
        if (t < best.t) {
            best.side = k;
            best.t = t;
            best.sigma_exit = sr;
            best.point = *pt;
        }
    }
    if (best.side < 0) throw DegenerateShot("ray found no exit side");
    const PolygonSide& side = hex.sides[static_cast<std::size_t>(best.side)];
    double ss = side.geo.shape.sigma_of(best.point);
    if (std::fabs(ss - side.sigma_begin) < kVertexGuard ||
        std::fabs(ss - side.sigma_end) < kVertexGuard)
        throw DegenerateShot("arc exits within the vertex guard");
    return best;
}

/// Arclength along the live arc, capped at t_max, where it crosses a
/// recorded arc of the same chart; nullopt if it does not.
std::optional<double> arc_crossing(const RayState& ray, double t_max, const TracedArc& arc) {
    if (arc.chart != ray.chart) return std::nullopt;
    auto pt = intersect(ray.geo.shape, arc.shape);
    if (!pt) return std::nullopt;
    double sr = ray.geo.shape.sigma_of(*pt);
    double t = ray.geo.dir * (sr - ray.sigma);
    if (t <= 1e-13 || t > t_max + kArcSpanTol) return std::nullopt;
    double sa = arc.shape.sigma_of(*pt);
    if (sa < std::min(arc.sigma_a, arc.sigma_b) - kArcSpanTol ||
        sa > std::max(arc.sigma_a, arc.sigma_b) + kArcSpanTol)
        return std::nullopt;
    return t;
}

struct Transition {
    bool terminal = false;
    int boundary_index = 0;
    bool crosses_mu = false;
    const Mat2* map = nullptr;
};

Transition transition_for(const SurfaceGeometry& g, int side) {
    switch (side) {
        case 0: return {true, 1, false, nullptr};
        case 2: return {true, 2, false, nullptr};
        case 4:
            if (g.kind == SurfaceGeometry::Kind::Pants) return {true, 3, false, nullptr};
            return {false, 0, true, &g.cross_cap_turn};
        default:
            return {false, 0, false, &g.seam_reflections[static_cast<std::size_t>(side / 2)]};
    }
}

void apply_transition(RayState& st, const Mat2& m, int side, cxd exit_point) {
    st.geo = apply(m, st.geo);
    cxd p = apply_interior(m, exit_point);
    st.sigma = st.geo.shape.sigma_of(p);
    st.chart ^= 1;
    st.entry_side = side;
}

RayState launch_ray(const SurfaceGeometry& geom, double s) {
    double ell = geom.hex.sides[0].length;
    double L1 = 2.0 * ell;
    s = std::fmod(s, L1);
    if (s < 0) s += L1;
    int chart;
    double t;
    if (s < ell) {
        chart = 0;
        t = s;
    } else {
        chart = 1;
        t = 2.0 * ell - s;
    }
    if (t < 1e-9 || t > ell - 1e-9)
        throw DegenerateShot("launch point too close to a vertex");
    Mat2 gp = geom.hex.sides[0].frame * frame_translate(t) *
              frame_rotate(geom.perp_flip ? -0.25 * kPi : 0.25 * kPi);
    RayState st;
    st.chart = chart;
    st.entry_side = 0;
    st.geo = frame_heading(gp);
    st.sigma = st.geo.shape.sigma_of(frame_point(gp));
    return st;
}

// ---- construction -------------------------------------------------------

void set_perp_flip(SurfaceGeometry& g) {
    double mid = 0.5 * g.hex.sides[0].length;
    for (bool flip : {false, true}) {
        Mat2 gp = g.hex.sides[0].frame * frame_translate(mid) *
                  frame_rotate(flip ? -0.25 * kPi : 0.25 * kPi);
        DirectedGeodesic ray = frame_heading(gp);
        double sg = ray.shape.sigma_of(frame_point(gp));
        if (g.hex.contains(ray.point_at_arclength(sg, 1e-4), 0.0)) {
            g.perp_flip = flip;
            return;
        }
    }
    throw DomainError("surface construction: perpendicular direction probe failed");
}

SurfaceGeometry build_cover(SurfaceGeometry::Kind kind, double p1, double p2, double p3) {
    if (!(p1 > 0) || !(p2 > 0) || !(p3 > 0))
        throw DomainError("surface construction: boundary lengths must be positive");
    double a1 = p1 / 2.0, a2 = p2 / 2.0, a3 = p3 / 2.0;
    double s12 = hexagon_opposite_side(p1, a3, a2);
    double s23 = hexagon_opposite_side(p2, a1, a3);
    double s31 = hexagon_opposite_side(p3, a2, a1);

    SurfaceGeometry g;
    g.kind = kind;
    g.cover_boundary_lengths = {p1, p2, p3};
    g.hex = build_right_angled_hexagon({a1, s12, a2, s23, a3, s31});
    for (int k = 0; k < 3; ++k)
        g.seam_reflections[static_cast<std::size_t>(k)] =
            reflection_across(g.hex.sides[static_cast<std::size_t>(2 * k + 1)].geo.shape);
    g.deck_involution = Mat2::identity();
    set_perp_flip(g);
    return g;
}

bool trace_mu_prime_loop(SurfaceGeometry& g, const DirectedGeodesic& axis, double sigma0,
                         double length) {
    RayState st;
    st.chart = 0;
    st.entry_side = -1;
    st.geo = axis;
    st.sigma = sigma0;
    cxd start = axis.shape.point_at(sigma0);
    std::vector<TracedArc> arcs;
    double remaining = length;
    int mu_crossings = 0;
    for (int guard = 0; guard < 64; ++guard) {
        ExitEvent ex;
        try {
            ex = find_exit(g.hex, st);
        } catch (const DegenerateShot&) {
            return false;
        }
        if (ex.t >= remaining) {
            double send = st.sigma + st.geo.dir * remaining;
            arcs.push_back({st.chart, st.geo.shape, st.sigma, send});
            double defect = hyp_dist(st.geo.shape.point_at(send), start);
            if (st.chart == 0 && defect < 1e-7 && mu_crossings == 1) {
                g.mu_prime_arcs = std::move(arcs);
                g.mu_prime_closure = defect;
                return true;
            }
            return false;
        }
        arcs.push_back({st.chart, st.geo.shape, st.sigma, ex.sigma_exit});
        remaining -= ex.t;
        Transition tr = transition_for(g, ex.side);
        if (tr.terminal) return false; // interior geodesics never reach a boundary
        if (tr.crosses_mu) ++mu_crossings;
        apply_transition(st, *tr.map, ex.side, ex.point);
    }
    return false;
}

bool try_develop_from_word(SurfaceGeometry& g, const Mat2& word, double z_prime) {
    // axis endpoints are the real eigendirections of the glide
    double tr = word.trace();
    double disc = std::sqrt(tr * tr + 4.0); // det = -1
    double lam1 = 0.5 * (tr + disc);
    double lam2 = 0.5 * (tr - disc);
    auto eigdir = [&](double lam) {
        ProjPoint v1{word.b(), lam - word.a()};
        ProjPoint v2{lam - word.d(), word.c()};
        ProjPoint v = (std::hypot(v1.n, v1.d) >= std::hypot(v2.n, v2.d)) ? v1 : v2;
        v.normalize();
        return v;
    };
    DirectedGeodesic axis;
    try {
        axis = DirectedGeodesic::from_endpoints(eigdir(lam2), eigdir(lam1));
    } catch (const DomainError&) {
        return false;
    }

    // clip the axis against the hexagon and seed a trace inside it
    std::vector<double> cuts;
    for (const auto& side : g.hex.sides)
        if (auto pt = intersect(axis.shape, side.geo.shape))
            cuts.push_back(axis.shape.sigma_of(*pt));
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        for (double f : {0.5, 0.3, 0.7}) {
            double sm = cuts[i] + f * (cuts[i + 1] - cuts[i]);
            if (!g.hex.contains(axis.shape.point_at(sm), 1e-12)) continue;
            if (trace_mu_prime_loop(g, axis, sm, z_prime)) return true;
        }
    }
    return false;
}

void develop_mu_prime(SurfaceGeometry& g) {
    double zp = g.one_sided_z_prime;
    std::vector<Mat2> words;
    for (int k = 0; k < 3; ++k)
        words.push_back(g.cross_cap_turn * g.seam_reflections[static_cast<std::size_t>(k)]);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (a == b || b == c) continue;
                words.push_back(g.cross_cap_turn * g.seam_reflections[static_cast<std::size_t>(a)] *
                                g.seam_reflections[static_cast<std::size_t>(b)] *
                                g.seam_reflections[static_cast<std::size_t>(c)]);
            }
    for (const Mat2& w : words) {
        if (w.det_sign() >= 0) continue;
        double l = 2.0 * std::asinh(std::fabs(w.trace()) / 2.0);
        if (std::fabs(l - zp) > 1e-6 * (1.0 + zp)) continue;
        if (try_develop_from_word(g, w, zp)) return;
    }
    throw DomainError("build_moebius: could not develop the second one-sided geodesic");
}

} // namespace

SurfaceGeometry build_pants(double l1, double l2, double l3) {
    return build_cover(SurfaceGeometry::Kind::Pants, l1, l2, l3);
}

SurfaceGeometry build_moebius(double x, double y, double z) {
    SurfaceGeometry g = build_cover(SurfaceGeometry::Kind::MoebiusMinusDisk, x, y, 2.0 * z);
    g.one_sided_z = z;
    g.one_sided_z_prime = fourth_length_mobius(x, y, z);
    const PolygonSide& s4 = g.hex.sides[4];
    g.cross_cap_turn =
        half_turn_about(s4.geo.shape.point_at(0.5 * (s4.sigma_begin + s4.sigma_end)));
    develop_mu_prime(g);
    return g;
}

ShotOutcome shoot(const SurfaceGeometry& geom, double s, int max_arcs) {
    if (max_arcs < 0) throw DomainError("shoot: negative arc cap");
    ShotOutcome out;
    out.launch_s = s;
    RayState st = launch_ray(geom, s);
    std::vector<TracedArc> arcs;
    double cum = 0.0;
    double first_mu = kInf, first_mu_prime = kInf;

    for (int n = 0;; ++n) {
        if (n >= max_arcs) {
            out.classification = ShotClass::Unresolved;
            break;
        }
        ExitEvent ex = find_exit(geom.hex, st);

        double t_self = kInf;
        for (const auto& a : arcs)
            if (auto t = arc_crossing(st, ex.t, a)) t_self = std::min(t_self, *t);

        double t_stop = std::min(t_self, ex.t);
        if (geom.kind == SurfaceGeometry::Kind::MoebiusMinusDisk &&
            first_mu_prime == kInf) {
            for (const auto& a : geom.mu_prime_arcs)
                if (auto t = arc_crossing(st, t_stop, a))
                    first_mu_prime = std::min(first_mu_prime, cum + *t);
        }

        if (t_self < ex.t) {
            arcs.push_back({st.chart, st.geo.shape, st.sigma, st.sigma + st.geo.dir * t_self});
            cum += t_self;
            out.classification = ShotClass::SelfOrStart;
            break;
        }

        arcs.push_back({st.chart, st.geo.shape, st.sigma, ex.sigma_exit});
        cum += ex.t;
        Transition tr = transition_for(geom, ex.side);
        if (tr.terminal) {
            if (tr.boundary_index == 1) {
                out.classification = ShotClass::SelfOrStart;
            } else {
                out.classification = ShotClass::HitBoundary;
                out.boundary_index = tr.boundary_index;
            }
            break;
        }
        if (tr.crosses_mu) first_mu = std::min(first_mu, cum);
        apply_transition(st, *tr.map, ex.side, ex.point);
    }

    out.arcs_traced = static_cast<int>(arcs.size());
    out.path_length = cum;
    out.crossed_mu = first_mu < kInf;
    out.crossed_mu_prime = first_mu_prime < kInf;
    if (out.crossed_mu || out.crossed_mu_prime)
        out.first_one_sided = (first_mu <= first_mu_prime) ? OneSidedTag::Mu : OneSidedTag::MuPrime;
    return out;
}

PartitionEstimate estimate_partition(const SurfaceGeometry& geom, std::int64_t n_samples,
                                     int max_arcs, std::uint64_t seed,
                                     std::vector<ShotOutcome>* shots) {
    if (n_samples < 1) throw DomainError("estimate_partition: need at least one sample");
    PartitionEstimate est;
    est.samples = n_samples;
    double L1 = geom.launch_boundary_length();
    for (std::int64_t i = 0; i < n_samples; ++i) {
        ShotOutcome oc;
        bool ok = false;
        for (std::uint64_t attempt = 0; attempt < 8 && !ok; ++attempt) {
            Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(i) * 16 + attempt);
            double s = (static_cast<double>(i) + rng.uniform()) /
                       static_cast<double>(n_samples) * L1;
            try {
                oc = shoot(geom, s, max_arcs);
                ok = true;
            } catch (const DegenerateShot&) {
                ++est.degenerate_retries;
            }
        }
        if (!ok) oc.classification = ShotClass::Unresolved;

        switch (oc.classification) {
            case ShotClass::SelfOrStart:
                ++est.n_a;
                break;
            case ShotClass::HitBoundary:
                if (oc.boundary_index == 2) ++est.n_b2;
                else ++est.n_b3;
                break;
            case ShotClass::Unresolved:
                ++est.n_unresolved;
                break;
        }
        if (geom.kind == SurfaceGeometry::Kind::MoebiusMinusDisk) {
            if (oc.classification == ShotClass::SelfOrStart) {
                if (!oc.crossed_mu && !oc.crossed_mu_prime) ++est.fact_i_violations;
                else if (oc.first_one_sided == OneSidedTag::Mu) ++est.n_first_mu;
                else ++est.n_first_mu_prime;
            } else if (oc.classification == ShotClass::HitBoundary && oc.crossed_mu &&
                       oc.crossed_mu_prime) {
                ++est.fact_ii_violations;
            }
        }
        if (shots) shots->push_back(oc);
    }
    return est;
}

} // namespace mcshane
