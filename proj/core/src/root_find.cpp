#include "twistdive/root_find.hpp"

#include <cmath>
#include <stdexcept>

namespace twistdive {

RootResult find_root(const std::function<double(double)>& f, double a, double b, double x_tol,
                     int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("find_root: endpoints do not bracket a sign change");

    double c = a, fc = fa;  // previous iterate for the inverse-quadratic fit
    int stall = 0;          // bisect when interpolation stops shrinking the bracket
    RootResult r;
    for (int it = 0; it < max_iter; ++it) {
        r.iterations = it + 1;
        double x;
        if (stall < 2 && fa != fc && fb != fc && fa != fb) {
            x = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            x = 0.5 * (a + b);
        }
        const double lo = std::min(a, b), hi = std::max(a, b);
        const double guard = 0.01 * (hi - lo);
        if (!std::isfinite(x) || x <= lo + guard || x >= hi - guard) x = 0.5 * (a + b);

        const double width_before = std::fabs(b - a);
        const double fx = f(x);
        c = b;
        fc = fb;
        if ((fa > 0.0) != (fx > 0.0)) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        stall = (std::fabs(b - a) > 0.5 * width_before) ? stall + 1 : 0;

        if (std::fabs(b - a) <= x_tol || fx == 0.0) {
            const bool pick_a = std::fabs(fa) < std::fabs(fb);
            r.x = pick_a ? a : b;
            r.fx = pick_a ? fa : fb;
            r.converged = true;
            return r;
        }
    }
    r.x = 0.5 * (a + b);
    r.fx = f(r.x);
    r.converged = false;
    return r;
}

}  // namespace twistdive
