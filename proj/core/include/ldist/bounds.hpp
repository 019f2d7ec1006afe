#pragma once

#include <ldist/extended_complex.hpp>

namespace ldist {

// Boundary segment [a, b] of the upper half-plane on the positive real axis.
struct HalfPlaneSeg {
    double a;
    double b;
};

// Harmonic measure of the segment seen from z = x + iy, Im z > 0:
// (1/pi) [atan((b-x)/y) - atan((a-x)/y)], the subtended angle over pi.
double harmonic_measure_segment(Complex z, const HalfPlaneSeg& seg);

// Lower bound of the measure on the matching imaginary segment [ia, ib],
// as a function of q = b/a > 1: (1/pi) atan((q-1)/(q+1)).
double harmonic_measure_lower_bound(double q);

// Slope |y/x| of the ray from the origin to the point (x, y) of the
// half-plane geodesic carrier x^2+y^2+(2/alpha)x+1 = 0; defined on
// [-(1+sqrt(1-a^2))/a, -a/(1+sqrt(1-a^2))] and maximal at x = -alpha with
// value sqrt(1-alpha^2)/alpha.
double sigma_slope(double x, double alpha);

struct SlopeMax {
    double x;
    double value;
};
SlopeMax sigma_slope_max(double alpha);

// The angle margin xi = atan((q-1)/(q+1)) - atan((q-1)/(q+1) *
// sqrt(1-a^2)/a), strictly inside (0, pi/4) for alpha in (1/sqrt(2), 1).
double measure_angle_gap(double alpha, double q);

// Distance-to-boundary bound d * cot^2(pi u / 4) for a harmonic function
// value u in (0, 1]; u = 0 yields +infinity.
double boundary_distance_bound(double d, double u);

// Per-block distortion constant (1/alpha) cot^2(xi/4) log q.
double block_distortion_bound(double alpha, double q);

// Distortion bound ((1+p^2)/2p) cot^2((atan((q-1)/(q+1)) -
// atan((1-p^2)(q-1)/(2p(q+1))))/4) log q for p in (sqrt(2)-1, 1), q > 1.
// Equals block_distortion_bound(2p/(1+p^2), q).
double distortion_bound(double p, double q);

struct DistortionMinimum {
    double q_star;
    double m_star;
};

// Minimum of distortion_bound(p, .) over q in (1, inf): a 200-point
// log-spaced scan certifies a bracket, golden-section refines q to 1e-8.
DistortionMinimum minimize_distortion_bound(double p);

// Lower endpoint (1+p)^2 pi / (4p) of the admissible constant range,
// valid on (0, 1]; at p = 1 it degenerates to pi.
double distortion_lower_bound(double p);

// One row of the bounds table.
struct BoundRow {
    double p;
    double lower_bound;
    double q_star;
    double m_star;
};

} // namespace ldist
