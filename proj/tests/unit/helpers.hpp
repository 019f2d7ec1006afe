#pragma once

#include <ldist/extended_complex.hpp>

#include <cmath>
#include <functional>
#include <random>

namespace testutil {

using ldist::Complex;

inline Complex random_disk_point(std::mt19937& rng, double rmax = 0.97) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (;;) {
        const Complex z(unif(rng), unif(rng));
        if (std::abs(z) < rmax) return z;
    }
}

inline Complex random_point(std::mt19937& rng, double box = 2.0) {
    std::uniform_real_distribution<double> unif(-box, box);
    return Complex(unif(rng), unif(rng));
}

// independent reference quadrature for oracle values: plain recursive
// adaptive Simpson, no shared code with the library's Gauss-Kronrod scheme
inline double simpson_oracle(const std::function<double(double)>& f, double a, double b,
                             double tol = 1e-10, int depth = 30) {
    struct Impl {
        const std::function<double(double)>& f;
        static double simpson(double fa, double fm, double fb, double h) {
            return h / 6.0 * (fa + 4.0 * fm + fb);
        }
        double recurse(double a, double b, double fa, double fm, double fb, double whole,
                       double tol, int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = f(0.5 * (a + m)), rm = f(0.5 * (m + b));
            const double left = simpson(fa, lm, fm, m - a);
            const double right = simpson(fm, rm, fb, b - m);
            if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return recurse(a, m, fa, lm, fm, left, 0.5 * tol, depth - 1) +
                   recurse(m, b, fm, rm, fb, right, 0.5 * tol, depth - 1);
        }
    };
    Impl impl{f};
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = Impl::simpson(fa, fm, fb, b - a);
    return impl.recurse(a, b, fa, fm, fb, whole, tol, depth);
}

// central finite difference of an analytic map along the real direction
template <typename F>
Complex central_difference(const F& f, Complex z, double h = 1e-6) {
    return (f(z + Complex(h, 0.0)) - f(z - Complex(h, 0.0))) / (2.0 * h);
}

} // namespace testutil
