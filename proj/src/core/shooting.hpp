#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geom.hpp"
#include "mat2.hpp"

namespace mcshane {

// Concrete surfaces are realized as a single model right-angled hexagon with
// two charts (the doubling across the seams).  A pair of pants is the double
// of its hexagon; the Moebius strip minus a disk is the same complex with the
// third alternate side self-glued through a half-turn (crossing it flips
// chart and mirrors the side parameter), which realizes the antipodal
// identification of the one-sided geodesic mu.  Two arcs meet on the surface
// iff they lie in the same chart and their model geometries intersect.

enum class ShotClass { SelfOrStart, HitBoundary, Unresolved };
enum class OneSidedTag { None, Mu, MuPrime };

struct ShotOutcome {
    ShotClass classification = ShotClass::Unresolved;
    int boundary_index = 0; // 2 or 3 when HitBoundary (never the launch boundary)
    int arcs_traced = 0;
    double path_length = 0.0;
    double launch_s = 0.0;
    OneSidedTag first_one_sided = OneSidedTag::None;
    bool crossed_mu = false;
    bool crossed_mu_prime = false;
};

struct TracedArc {
    int chart = 0;
    Geodesic shape;
    double sigma_a = 0.0, sigma_b = 0.0; // unordered span on shape
};

struct SurfaceGeometry {
    enum class Kind { Pants, MoebiusMinusDisk };

    Kind kind = Kind::Pants;
    // pants: the three boundary lengths.  moebius: {x, y, 2z} of the
    // orientation double cover's pants.
    std::array<double, 3> cover_boundary_lengths{};
    double one_sided_z = 0.0;       // moebius: l_mu
    double one_sided_z_prime = 0.0; // moebius: l_mu' from the four-length relation

    HexagonModel hex;
    std::array<Mat2, 3> seam_reflections; // across sides S1, S3, S5
    Mat2 cross_cap_turn;                  // moebius: half-turn about the S4 midpoint
    Mat2 deck_involution;                 // cover deck map: identity matrix + chart swap
    bool perp_flip = false;               // launch perpendicular turn direction

    std::vector<TracedArc> mu_prime_arcs; // moebius: developed arcs of mu'
    double mu_prime_closure = 0.0;        // endpoint defect of the developed loop

    double launch_boundary_length() const { return 2.0 * hex.sides[0].length; }
};

/// Pair of pants from its three boundary lengths.
SurfaceGeometry build_pants(double l1, double l2, double l3);

/// Moebius strip minus a disk from boundary lengths x (launch), y and the
/// one-sided length z, simulated on its orientation double cover.
SurfaceGeometry build_moebius(double x, double y, double z);

/// Trace the geodesic leaving the launch boundary perpendicularly at
/// arclength position s.  Throws DegenerateShot when an arc runs within the
/// vertex guard; callers resample.
ShotOutcome shoot(const SurfaceGeometry& geom, double s, int max_arcs);

struct PartitionEstimate {
    std::int64_t samples = 0;
    std::int64_t n_a = 0, n_b2 = 0, n_b3 = 0, n_unresolved = 0;
    std::int64_t n_first_mu = 0, n_first_mu_prime = 0; // among type-A shots
    std::int64_t degenerate_retries = 0;
    std::int64_t fact_i_violations = 0;  // type A missing both mu, mu'
    std::int64_t fact_ii_violations = 0; // type B crossing both mu, mu'

    double frac(std::int64_t k) const {
        return static_cast<double>(k) / static_cast<double>(samples);
    }
    /// 3-sigma binomial halfwidth around probability p.
    double ci3(double p) const {
        return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    }
};

/// Stratified sampling of launch positions (grid plus jitter), one derived
/// RNG stream per sample index so results are independent of scheduling.
/// Optionally collects every ShotOutcome.
PartitionEstimate estimate_partition(const SurfaceGeometry& geom, std::int64_t n_samples,
                                     int max_arcs, std::uint64_t seed,
                                     std::vector<ShotOutcome>* shots = nullptr);

} // namespace mcshane
