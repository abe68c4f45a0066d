#include "series.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "identities.hpp"
#include "mathutil.hpp"

namespace mcshane {

namespace {

using cplx = std::complex<double>;

double term_punctured(const Spectrum& s, std::int64_t i) {
    double a = s.term(i);
    double b = s.term(i + 1);
    return 1.0 / (1.0 + a * a + b * b);
}

} // namespace

double telescoped_partial_sum(Spectrum& s, std::int64_t a, std::int64_t b) {
    s.ensure(a - 1, b + 1);
    return (s.term(a - 1) / s.term(a) - s.term(b) / s.term(b + 1)) / s.z();
}

SeriesReport sum_punctured_klein(double y0, double y1, double tol, std::int64_t max_terms) {
    Spectrum s = make_punctured_spectrum(y0, y1);
    double z = s.z();
    double l = spectrum_l_gamma(z);
    double lam_plus = std::exp(l / 2.0);
    double lam_minus = std::exp(-l / 2.0);

    SeriesReport rep;
    rep.kind = SeriesKind::PuncturedKlein;
    rep.y0 = y0;
    rep.y1 = y1;
    rep.z = z;
    rep.l_gamma = l;
    rep.c = 1.0;
    rep.target = std::tanh(l / 2.0);

    std::int64_t n = 0, m = 0; // window [-n, m]
    s.ensure(-n - 1, m + 2);
    double sum = term_punctured(s, 0);
    std::int64_t terms = 1;

    auto back_tail = [&] { return (lam_plus - s.term(-n - 1) / s.term(-n)) / z; };
    auto fwd_tail = [&] { return (s.term(m) / s.term(m + 1) - lam_minus) / z; };

    double tail = back_tail() + fwd_tail();
    while (tail > tol && terms < max_terms && !s.truncated_forward() &&
           !s.truncated_backward()) {
        if (back_tail() >= fwd_tail()) {
            ++n;
            s.ensure(-n - 1, m + 1);
            sum += term_punctured(s, -n);
        } else {
            ++m;
            s.ensure(-n - 1, m + 2);
            sum += term_punctured(s, m);
        }
        ++terms;
        tail = back_tail() + fwd_tail();
    }

    rep.partial_sum = sum;
    rep.terms_used = terms;
    rep.tail_bound = std::max(tail, 0.0);
    rep.converged = tail <= tol;
    rep.residual = std::abs(rep.partial_sum - rep.target);
    return rep;
}

SeriesReport sum_bordered_klein(double L, double y0, double y1, double tol,
                                std::int64_t max_terms) {
    if (!(L > 0)) throw DomainError("sum_bordered_klein: L must be positive");
    Spectrum s = make_bordered_spectrum(L, y0, y1);
    double z = s.z();
    double l = spectrum_l_gamma(z);
    double rho = std::exp(-l); // asymptotic decay ratio of consecutive pairs

    SeriesReport rep;
    rep.kind = SeriesKind::BorderedKlein;
    rep.y0 = y0;
    rep.y1 = y1;
    rep.z = z;
    rep.l_gamma = l;
    rep.c = s.c();
    rep.boundary_length = L;
    rep.target = bordered_rhs(L, l);

    auto len = [&](std::int64_t i) { return 2.0 * std::asinh(s.term(i)); };
    auto pair_term = [&](std::int64_t i) {
        double la = len(i);
        double lb = len(i + 1);
        return identity_F(L, la, lb) + identity_F(L, lb, la);
    };
    auto min_len = [&](std::int64_t i) { return std::min(len(i), len(i + 1)); };

    // window [-n, m] of pair indices
    std::int64_t n = 0, m = 0;
    s.ensure(-2, 3);
    double sum = pair_term(0);
    std::int64_t pairs = 1;

    // tail constant C with |pair_i| <= C exp(-min(l_i, l_{i+1})), estimated
    // from the last few included pairs and doubled
    auto side_tail = [&](std::int64_t edge, int dir) {
        double cmax = 0.0;
        for (int k = 0; k < 5; ++k) {
            std::int64_t i = edge - dir * k;
            if (i < -n || i > m) break;
            cmax = std::max(cmax, std::fabs(pair_term(i)) * std::exp(min_len(i)));
        }
        std::int64_t next = edge + dir;
        s.ensure(next - 1, next + 2);
        return 2.0 * cmax * std::exp(-min_len(next)) / (1.0 - rho);
    };

    double tail = side_tail(m, +1) + side_tail(-n, -1);
    while (tail > tol && 2 * pairs < max_terms && !s.truncated_forward() &&
           !s.truncated_backward()) {
        if (side_tail(-n, -1) >= side_tail(m, +1)) {
            ++n;
            s.ensure(-n - 1, m + 2);
            sum += pair_term(-n);
        } else {
            ++m;
            s.ensure(-n - 1, m + 3);
            sum += pair_term(m);
        }
        ++pairs;
        tail = side_tail(m, +1) + side_tail(-n, -1);
    }

    rep.partial_sum = sum;
    rep.terms_used = 2 * pairs; // ordered pairs
    rep.tail_bound = tail;
    rep.converged = tail <= tol;
    rep.residual = std::abs(rep.partial_sum - rep.target);
    return rep;
}

namespace {

double torus_summand(double x) {
    // 1/(1 + e^l) with 2 cosh(l/2) = x
    double q = 0.5 * (x + std::sqrt(x * x - 4.0));
    return 1.0 / (1.0 + q * q);
}

struct TorusWalk {
    double sum = 0.0;
    double frontier = 0.0; // sum of f over traces whose subtrees were not walked
    std::int64_t count = 0;

    // Traces at least double per level down, so once w passes the cutoff the
    // whole subtree contributes less than ~f(w); fold it into the frontier
    // instead of walking it (values also overflow past depth ~20 otherwise).
    static constexpr double kPruneCutoff = 1e8;

    // edge (u, v) of the flip tree; the child replaces `prev` with u*v - prev
    void descend(double u, double v, double prev, int depth) {
        double w = u * v - prev;
        sum += torus_summand(w);
        ++count;
        if (depth <= 1 || w > kPruneCutoff) {
            frontier += torus_summand(w);
            return;
        }
        descend(u, w, v, depth - 1);
        descend(w, v, u, depth - 1);
    }
};

} // namespace

SeriesReport sum_punctured_torus(int depth, double tol) {
    if (depth < 1) throw DomainError("sum_punctured_torus: depth must be >= 1");
    SeriesReport rep;
    rep.kind = SeriesKind::PuncturedTorus;
    rep.depth = depth;
    rep.target = 0.5;
    rep.c = 1.0;

    // root traces (3,3,3): three distinct geodesics; the three subtrees are
    // isometric images of each other, so walk one and triple it
    TorusWalk walk;
    walk.descend(3.0, 3.0, 3.0, depth);
    double sum = 3.0 * torus_summand(3.0) + 3.0 * walk.sum;
    std::int64_t count = 3 + 3 * walk.count;

    // each frontier trace w has two children with values >= 2w, so its
    // unexplored subtree sums to at most ~f(w); take 4x for slack
    double tail = 3.0 * 4.0 * walk.frontier;

    rep.partial_sum = sum;
    rep.terms_used = count;
    rep.tail_bound = tail;
    rep.converged = tail <= tol;
    rep.residual = std::abs(rep.partial_sum - rep.target);
    return rep;
}

SeriesReport sum_complex(cplx y0, cplx y1, double tol, std::int64_t max_terms) {
    if (std::abs(y0) == 0.0 || std::abs(y1) == 0.0)
        throw InvalidSeed("sum_complex: seed values must be non-zero");
    cplx z = (1.0 + y0 * y0 + y1 * y1) / (y0 * y1);
    cplx l = 2.0 * std::acosh(z / 2.0); // principal branch, Re >= 0
    double lambda = l.real();
    if (std::fabs(lambda) <= 1e-6)
        throw LoxodromicViolation(
            "sum_complex: Re(l_gamma) = 0, two-sided element is not loxodromic");

    SeriesReport rep;
    rep.kind = SeriesKind::ComplexKlein;
    rep.y0 = y0;
    rep.y1 = y1;
    rep.z = z;
    rep.l_gamma = l;
    rep.c = 1.0;
    rep.target = std::tanh(l / 2.0);

    // coefficients of y_n = A e^{n l/2} + B e^{-n l/2}
    cplx sh = std::sinh(l / 2.0);
    cplx disc = y0 * y0 - 1.0 / (sh * sh);
    cplx root = std::sqrt(disc);
    cplx A = 0.5 * (y0 + root);
    cplx B = 0.5 * (y0 - root);
    cplx mu = std::exp(l / 2.0);
    if (std::abs(A * mu + B / mu - y1) > std::abs(B * mu + A / mu - y1)) std::swap(A, B);
    double absA = std::abs(A);
    double absB = std::abs(B);
    if (absA < 1e-14 || absB < 1e-14)
        throw DegenerateCoefficient("sum_complex: vanishing growth coefficient");

    // windows must clear the crossover of the envelope
    // | |A| e^{n lam/2} - |B| e^{-n lam/2} | before a geometric tail applies
    auto crossover = [&](double num, double den) {
        double n0 = std::log(2.0 * num / den) / lambda;
        return static_cast<std::int64_t>(std::ceil(std::max(0.0, n0)));
    };
    std::int64_t n0_fwd = crossover(absB, absA);
    std::int64_t n0_bwd = crossover(absA, absB);

    double absZ = std::abs(z);
    double geo = 1.0 - std::exp(-lambda);
    auto fwd_tail = [&](std::int64_t m) {
        // sum_{i > m} |t_i|, valid once m + 1 >= n0_fwd
        return 4.0 / (absA * absA * absZ) * std::exp(-(2.0 * (m + 1) + 1.0) * lambda / 2.0) / geo;
    };
    auto bwd_tail = [&](std::int64_t n) {
        // sum_{i < -n} |t_i|, valid once n + 1 >= n0_bwd + 1
        double m = -(static_cast<double>(n) + 1.0);
        return 4.0 / (absB * absB * absZ) * std::exp((2.0 * m + 1.0) * lambda / 2.0) / geo;
    };

    ComplexSpectrum s(y0, y1, z, cplx{1.0, 0.0});
    auto term = [&](std::int64_t i) {
        cplx a = s.term(i);
        cplx b = s.term(i + 1);
        return 1.0 / (1.0 + a * a + b * b);
    };

    std::int64_t n = 0, m = 0;
    s.ensure(-1, 1);
    cplx sum = term(0);
    std::int64_t terms = 1;

    auto certified = [&] { return m + 1 >= n0_fwd && n >= n0_bwd + 1; };
    double tail = certified() ? fwd_tail(m) + bwd_tail(n) : 1e308;
    while ((tail > tol) && terms < max_terms && !s.truncated_forward() &&
           !s.truncated_backward()) {
        bool grow_back = certified() ? bwd_tail(n) >= fwd_tail(m) : (n - n0_bwd <= m - n0_fwd);
        if (grow_back) {
            ++n;
            s.ensure(-n, m + 1);
            sum += term(-n);
        } else {
            ++m;
            s.ensure(-n, m + 1);
            sum += term(m);
        }
        ++terms;
        tail = certified() ? fwd_tail(m) + bwd_tail(n) : 1e308;
    }

    rep.partial_sum = sum;
    rep.terms_used = terms;
    rep.tail_bound = tail;
    rep.converged = tail <= tol;
    rep.residual = std::abs(rep.partial_sum - rep.target);
    return rep;
}

} // namespace mcshane
