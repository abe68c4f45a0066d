#include "spectra.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <string>

#include "errors.hpp"
#include "mathutil.hpp"

namespace mcshane {

double z_from_seed(double y0, double y1, double c) {
    if (!(y0 > 0) || !(y1 > 0)) throw InvalidSeed("seed values must be positive");
    if (!(c > 0)) throw InvalidSeed("recursion constant must be positive");
    double z = (c + y0 * y0 + y1 * y1) / (y0 * y1);
    if (z <= 2.0 + 1e-12)
        throw InvalidSeed("seed is parabolic or elliptic (Z <= 2): no certified tail");
    return z;
}

double bordered_constant(double L) {
    if (L < 0) throw DomainError("bordered_constant: negative boundary length");
    double c4 = std::cosh(L / 4.0);
    return c4 * c4;
}

Spectrum make_punctured_spectrum(double y0, double y1) {
    double z = z_from_seed(y0, y1, 1.0);
    return Spectrum(y0, y1, z, 1.0);
}

Spectrum make_bordered_spectrum(double L, double y0, double y1) {
    double c = bordered_constant(L);
    double z = z_from_seed(y0, y1, c);
    return Spectrum(y0, y1, z, c);
}

double spectrum_l_gamma(double z) {
    if (z <= 2.0) throw InvalidSeed("Z <= 2 has no hyperbolic two-sided geodesic");
    return 2.0 * stable_acosh(z / 2.0);
}

std::pair<std::int64_t, double> spectrum_min(Spectrum& s) {
    // once y_{i+1} > y_i the forward tail stays increasing; same backward
    while (!(s.term(s.hi()) > s.term(s.hi() - 1)) && !s.truncated_forward())
        s.extend_forward(4);
    while (!(s.term(s.lo()) > s.term(s.lo() + 1)) && !s.truncated_backward())
        s.extend_backward(4);
    std::int64_t best = s.lo();
    for (std::int64_t i = s.lo(); i <= s.hi(); ++i)
        if (s.term(i) < s.term(best)) best = i;
    return {best, s.term(best)};
}

double GeneralSolutionCoeffs::predict(std::int64_t n) const {
    double h = 0.5 * static_cast<double>(n) * l_gamma;
    return c_plus * std::exp(h) + c_minus * std::exp(-h);
}

GeneralSolutionCoeffs general_solution(double y0, double l_gamma, double c) {
    if (!(l_gamma > 0)) throw DomainError("general_solution: l_gamma must be positive");
    double sh = std::sinh(l_gamma / 2.0);
    double prod = c / (4.0 * sh * sh);
    double disc = y0 * y0 - 4.0 * prod;
    if (disc < 0)
        throw InvalidSeed("general_solution: negative discriminant (complex coefficients)");
    double root = std::sqrt(disc);
    GeneralSolutionCoeffs g;
    g.c_plus = 0.5 * (y0 + root);
    g.c_minus = 0.5 * (y0 - root);
    g.l_gamma = l_gamma;
    return g;
}

GeneralSolutionCoeffs general_solution_matching(double y0, double y1, double l_gamma, double c) {
    GeneralSolutionCoeffs g = general_solution(y0, l_gamma, c);
    double lam = std::exp(l_gamma / 2.0);
    double keep = g.c_plus * lam + g.c_minus / lam;
    double swap = g.c_minus * lam + g.c_plus / lam;
    if (std::fabs(swap - y1) < std::fabs(keep - y1)) std::swap(g.c_plus, g.c_minus);
    return g;
}

double MarkoffTriple::residual() const {
    return std::fabs(x * x + y * y + z * z - x * y * z - (2.0 - delta));
}

std::vector<MarkoffTriple> markoff_tree(int depth, double delta) {
    return markoff_tree(depth, delta, MarkoffTriple{3, 3, 3, delta});
}

namespace {

std::string canonical_key(double x, double y, double z) {
    double a = x, b = y, c = z;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12e|%.12e|%.12e", a, b, c);
    return buf;
}

} // namespace

std::vector<MarkoffTriple> markoff_tree(int depth, double delta, const MarkoffTriple& root) {
    if (depth < 0) throw DomainError("markoff_tree: negative depth");
    MarkoffTriple r = root;
    r.delta = delta;
    if (r.residual() > 1e-9)
        throw InvalidSeed("markoff_tree: root does not satisfy the quadratic relation");

    std::vector<MarkoffTriple> out;
    std::set<std::string> seen;
    std::deque<std::pair<MarkoffTriple, int>> queue;
    queue.emplace_back(r, 0);
    seen.insert(canonical_key(r.x, r.y, r.z));
    while (!queue.empty()) {
        auto [t, d] = queue.front();
        queue.pop_front();
        out.push_back(t);
        if (d == depth) continue;
        MarkoffTriple flips[3] = {
            {t.y * t.z - t.x, t.y, t.z, delta},
            {t.x, t.x * t.z - t.y, t.z, delta},
            {t.x, t.y, t.x * t.y - t.z, delta},
        };
        for (const auto& f : flips) {
            std::string key = canonical_key(f.x, f.y, f.z);
            if (seen.insert(key).second) queue.emplace_back(f, d + 1);
        }
    }
    return out;
}

FibonacciSurface fibonacci_surface() {
    Mat2 A(0, -1, -1, 2);
    Mat2 B(1, 1, 1, 2);
    return FibonacciSurface{A, B, make_punctured_spectrum(1.0, 2.0)};
}

} // namespace mcshane
