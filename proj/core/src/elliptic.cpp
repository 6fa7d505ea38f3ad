#include "twistdive/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twistdive {

// Duplication-theorem evaluation after Carlson. The ERRTOL values give
// truncation errors of order errtol^6 (~1e-16 here), well below the 1e-12
// accuracy contract of the Legendre wrappers.

double carlson_rf(double x, double y, double z) {
    constexpr double errtol = 0.0025;
    constexpr double third = 1.0 / 3.0;
    constexpr double c1 = 1.0 / 24.0, c2 = 0.1, c3 = 3.0 / 44.0, c4 = 1.0 / 14.0;
    double xt = x, yt = y, zt = z;
    double ave, dx, dy, dz;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = third * (xt + yt + zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) > errtol);
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (c1 * e2 - c2 - c3 * e3) * e2 + c4 * e3) / std::sqrt(ave);
}

double carlson_rc(double x, double y) {
    constexpr double errtol = 0.0012;
    constexpr double third = 1.0 / 3.0;
    constexpr double c1 = 0.3, c2 = 1.0 / 7.0, c3 = 0.375, c4 = 9.0 / 22.0;
    double xt, yt, w;
    if (y > 0.0) {
        xt = x;
        yt = y;
        w = 1.0;
    } else {  // Cauchy principal value branch
        xt = x - y;
        yt = -y;
        w = std::sqrt(x) / std::sqrt(xt);
    }
    double ave, s;
    do {
        const double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        ave = third * (xt + yt + yt);
        s = (yt - ave) / ave;
    } while (std::fabs(s) > errtol);
    return w * (1.0 + s * s * (c1 + s * (c2 + s * (c3 + s * c4)))) / std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
    constexpr double errtol = 0.0015;
    constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0;
    constexpr double c4 = 3.0 / 26.0, c5 = 0.25 * c3, c6 = 1.5 * c4;
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    double ave, dx, dy, dz;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = 0.2 * (xt + yt + 3.0 * zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) > errtol);
    const double ea = dx * dy;
    const double eb = dz * dz;
    const double ec = ea - eb;
    const double ed = ea - 6.0 * eb;
    const double ee = ed + ec + ec;
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
                dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
               (ave * std::sqrt(ave));
}

double carlson_rj(double x, double y, double z, double p) {
    if (!(p > 0.0)) throw std::domain_error("carlson_rj: p must be positive");
    constexpr double errtol = 0.0015;
    constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 3.0, c3 = 3.0 / 22.0;
    constexpr double c4 = 3.0 / 26.0, c5 = 0.75 * c3, c6 = 1.5 * c4;
    constexpr double c7 = 0.5 * c2, c8 = c3 + c3;
    double xt = x, yt = y, zt = z, pt = p;
    double sum = 0.0, fac = 1.0;
    double ave, dx, dy, dz, dp;
    do {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lam = sx * (sy + sz) + sy * sz;
        const double alpha_sq = [&] {
            const double a = pt * (sx + sy + sz) + sx * sy * sz;
            return a * a;
        }();
        const double beta = pt * (pt + lam) * (pt + lam);
        sum += fac * carlson_rc(alpha_sq, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        pt = 0.25 * (pt + lam);
        ave = 0.2 * (xt + yt + zt + pt + pt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        dp = (ave - pt) / ave;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz), std::fabs(dp)}) > errtol);
    const double ea = dx * (dy + dz) + dy * dz;
    const double eb = dx * dy * dz;
    const double ec = dp * dp;
    const double ed = ea - 3.0 * ec;
    const double ee = eb + 2.0 * dp * (ea - ec);
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-c1 + c5 * ed - c6 * ee) + eb * (c7 + dp * (-c8 + dp * c4)) +
                dp * ea * (c2 - dp * c3) - c2 * dp * ec) /
               (ave * std::sqrt(ave));
}

double ellip_k(double m) {
    if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("ellip_k: need 0 <= m < 1");
    return carlson_rf(0.0, 1.0 - m, 1.0);
}

double ellip_e(double m) {
    if (!(m >= 0.0 && m <= 1.0)) throw std::domain_error("ellip_e: need 0 <= m <= 1");
    if (m == 1.0) return 1.0;
    return carlson_rf(0.0, 1.0 - m, 1.0) - (m / 3.0) * carlson_rd(0.0, 1.0 - m, 1.0);
}

double ellip_pi(double n, double m) {
    if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("ellip_pi: need 0 <= m < 1");
    if (!(n < 1.0)) throw std::domain_error("ellip_pi: need n < 1");
    const double rf = carlson_rf(0.0, 1.0 - m, 1.0);
    if (n == 0.0) return rf;
    return rf + (n / 3.0) * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n);
}

}  // namespace twistdive
