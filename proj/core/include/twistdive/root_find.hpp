#pragma once

#include <functional>

namespace twistdive {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Bracketed scalar root finding: bisection backbone with inverse-quadratic
// acceleration (Brent style). Throws std::invalid_argument when f(a), f(b)
// do not bracket a sign change.
RootResult find_root(const std::function<double(double)>& f, double a, double b,
                     double x_tol = 1e-12, int max_iter = 200);

}  // namespace twistdive
