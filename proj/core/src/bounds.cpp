#include <ldist/bounds.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ldist {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInvSqrt2 = std::sqrt(0.5);

// all inverse tangents below take nonnegative real arguments; anything else
// is a programming error, not a domain question
double checked_atan(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::logic_error("bounds: inverse-tangent argument must be finite and nonnegative");
    return std::atan(x);
}

double cot_sq(double x) {
    const double t = std::tan(x);
    return 1.0 / (t * t);
}

} // namespace

double harmonic_measure_segment(Complex z, const HalfPlaneSeg& seg) {
    if (!(seg.a > 0.0 && seg.b > seg.a))
        throw std::domain_error("harmonic_measure_segment: segment must satisfy 0 < a < b");
    if (!(z.imag() > 0.0))
        throw std::domain_error("harmonic_measure_segment: z must lie in the upper half-plane");
    const double x = z.real(), y = z.imag();
    return (std::atan((seg.b - x) / y) - std::atan((seg.a - x) / y)) / kPi;
}

double harmonic_measure_lower_bound(double q) {
    if (!(q > 1.0)) throw std::domain_error("harmonic_measure_lower_bound: q must exceed 1");
    return checked_atan((q - 1.0) / (q + 1.0)) / kPi;
}

namespace {

struct SlopeDomain {
    double left, right, m, r;
};

SlopeDomain slope_domain(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("sigma_slope: alpha must lie in (0,1)");
    const double s = std::sqrt(1.0 - alpha * alpha);
    return SlopeDomain{-(1.0 + s) / alpha, -alpha / (1.0 + s), 1.0 / alpha, s / alpha};
}

} // namespace

double sigma_slope(double x, double alpha) {
    const SlopeDomain d = slope_domain(alpha);
    if (x < d.left - 1e-12 || x > d.right + 1e-12)
        throw std::domain_error("sigma_slope: x outside the carrier's real extent");
    const double rad = std::max(0.0, d.r * d.r - (x + d.m) * (x + d.m));
    return -std::sqrt(rad) / x;
}

SlopeMax sigma_slope_max(double alpha) {
    const SlopeDomain d = slope_domain(alpha);
    return SlopeMax{-alpha, d.r};
}

double measure_angle_gap(double alpha, double q) {
    if (!(alpha > kInvSqrt2 && alpha < 1.0))
        throw std::domain_error("measure_angle_gap: alpha must lie in (1/sqrt(2), 1)");
    if (!(q > 1.0)) throw std::domain_error("measure_angle_gap: q must exceed 1");
    const double base = (q - 1.0) / (q + 1.0);
    const double slope = std::sqrt(1.0 - alpha * alpha) / alpha;
    return checked_atan(base) - checked_atan(base * slope);
}

double boundary_distance_bound(double d, double u) {
    if (!(d >= 0.0)) throw std::domain_error("boundary_distance_bound: d must be nonnegative");
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("boundary_distance_bound: u must lie in [0,1]");
    if (u == 0.0) return std::numeric_limits<double>::infinity();
    return d * cot_sq(kPi * u / 4.0);
}

double block_distortion_bound(double alpha, double q) {
    return cot_sq(measure_angle_gap(alpha, q) / 4.0) * std::log(q) / alpha;
}

double distortion_bound(double p, double q) {
    const double sqrt2m1 = std::sqrt(2.0) - 1.0;
    if (!(p > sqrt2m1 && p < 1.0))
        throw std::domain_error("distortion_bound: p must lie in (sqrt(2)-1, 1)");
    if (!(q > 1.0)) throw std::domain_error("distortion_bound: q must exceed 1");
    const double base = (q - 1.0) / (q + 1.0);
    const double gap = checked_atan(base) - checked_atan((1.0 - p * p) * base / (2.0 * p));
    return (1.0 + p * p) / (2.0 * p) * cot_sq(gap / 4.0) * std::log(q);
}

DistortionMinimum minimize_distortion_bound(double p) {
    const double sqrt2m1 = std::sqrt(2.0) - 1.0;
    if (!(p > sqrt2m1 && p < 1.0))
        throw std::domain_error("minimize_distortion_bound: p must lie in (sqrt(2)-1, 1)");

    // coarse log-spaced scan; certifies the bracket without assuming
    // unimodality
    constexpr int n = 200;
    const double qlo = 1.0 + 1e-6, qhi = 1e4;
    double qs[n];
    double best = std::numeric_limits<double>::infinity();
    int bi = -1;
    for (int i = 0; i < n; ++i) {
        qs[i] = qlo * std::pow(qhi / qlo, static_cast<double>(i) / (n - 1));
        const double v = distortion_bound(p, qs[i]);
        if (v < best) {
            best = v;
            bi = i;
        }
    }
    if (bi <= 0 || bi >= n - 1)
        throw std::runtime_error("minimize_distortion_bound: scan failed to bracket a minimum");

    double lo = qs[bi - 1], hi = qs[bi + 1];
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = distortion_bound(p, x1), f2 = distortion_bound(p, x2);
    while (hi - lo > 1e-8) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = distortion_bound(p, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = distortion_bound(p, x2);
        }
    }
    const double q_star = 0.5 * (lo + hi);
    return DistortionMinimum{q_star, distortion_bound(p, q_star)};
}

double distortion_lower_bound(double p) {
    if (!(p > 0.0 && p <= 1.0))
        throw std::domain_error("distortion_lower_bound: p must lie in (0, 1]");
    return (1.0 + p) * (1.0 + p) * kPi / (4.0 * p);
}

} // namespace ldist
