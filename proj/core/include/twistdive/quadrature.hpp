#pragma once

#include <functional>

namespace twistdive {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // accumulated local estimates
    bool converged = false;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 on [a, b]. Bisects until each panel's
// Kronrod-Gauss discrepancy is below its share of the tolerance or the
// depth limit is hit; in the latter case converged stays false and the
// best value found is still returned.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12, int max_depth = 48);

}  // namespace twistdive
