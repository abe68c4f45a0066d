#pragma once

#include <functional>

namespace mcshane {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int panels = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b] to the
/// requested absolute tolerance.  Panels split until their local estimate
/// fits their share of the budget or the depth cap is hit.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 52);

} // namespace mcshane
