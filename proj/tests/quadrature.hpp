#pragma once

// Independent numerical oracle for weighted sphere moments: tensor
// Gauss-Legendre quadrature over the positive orthant of the unit sphere in
// hyperspherical angles. Exact (to machine precision) whenever every exponent
// in the integrand is a nonnegative integer, i.e. whenever 2*mu_i are integers.

#include <array>
#include <cmath>
#include <vector>

namespace quad {

struct Rule {
    std::vector<double> x;   // nodes on [0, 1]
    std::vector<double> w;
};

// Newton iteration on the Legendre recurrence, then affine map [-1,1] -> [0,1]
inline Rule gauss_legendre(int n) {
    Rule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[static_cast<size_t>(i)] = 0.5 * (x + 1);
        r.w[static_cast<size_t>(i)] = 1.0 / ((1 - x * x) * dp * dp);   // includes the 1/2 jacobian
    }
    return r;
}

// integral over the orthant theta_i in (0, pi/2) of
//   prod_i s_i(theta)^{e_i} * sin^2(t1) sin(t2) dt1 dt2 dt3
// with s1 = cos t1, s2 = sin t1 cos t2, s3 = sin t1 sin t2 cos t3,
//      s4 = sin t1 sin t2 sin t3.
inline double orthant_moment(const std::array<double, 4>& e, int n = 48) {
    Rule r = gauss_legendre(n);
    const double h = M_PI / 2;
    double total = 0;
    for (size_t a = 0; a < r.x.size(); ++a)
        for (size_t b = 0; b < r.x.size(); ++b)
            for (size_t c = 0; c < r.x.size(); ++c) {
                double t1 = h * r.x[a], t2 = h * r.x[b], t3 = h * r.x[c];
                double s1 = std::cos(t1);
                double s2 = std::sin(t1) * std::cos(t2);
                double s3 = std::sin(t1) * std::sin(t2) * std::cos(t3);
                double s4 = std::sin(t1) * std::sin(t2) * std::sin(t3);
                double f = std::pow(s1, e[0]) * std::pow(s2, e[1]) * std::pow(s3, e[2]) *
                           std::pow(s4, e[3]);
                f *= std::sin(t1) * std::sin(t1) * std::sin(t2);
                total += f * r.w[a] * r.w[b] * r.w[c];
            }
    return total * h * h * h;
}

// moment ratio against the pure-weight mass, matching the library convention
inline double moment_ratio(const std::array<int, 4>& e, const std::array<double, 4>& mu, int n = 48) {
    std::array<double, 4> top{}, bot{};
    for (int i = 0; i < 4; ++i) {
        top[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] + 2 * mu[static_cast<size_t>(i)];
        bot[static_cast<size_t>(i)] = 2 * mu[static_cast<size_t>(i)];
    }
    return orthant_moment(top, n) / orthant_moment(bot, n);
}

} // namespace quad
