#pragma once

#include <ldist/moebius.hpp>

#include <array>
#include <utility>

namespace ldist {

enum class Model { disk, half_plane };

// A hyperbolic geodesic of the unit disk or the upper half-plane, stored by
// its carrier (a generalized circle orthogonal to the model boundary) and
// its two ideal endpoints.
struct Geodesic {
    Model model;
    GeneralizedCircle carrier;
    std::array<Complex, 2> endpoints;
};

// Distance for the metric |dz|/(1-|z|^2); rejects points with modulus >= 1.
double hyperbolic_distance_disk(Complex z1, Complex z2);

// Disk geodesic symmetric about the real axis through alpha/(1+sqrt(1-alpha^2)):
// carrier x^2+y^2-(2/alpha)x+1 = 0, ideal endpoints alpha +- i*sqrt(1-alpha^2).
Geodesic symmetric_geodesic_disk(double alpha);

// Its image in the upper half-plane under MoebiusMap::disk_to_half_plane():
// carrier x^2+y^2+(2/alpha)x+1 = 0 with y > 0.
Geodesic symmetric_geodesic_half_plane(double alpha);

// Disk geodesic with the given distinct ideal endpoints on the unit circle.
Geodesic geodesic_from_boundary_points(Complex e1, Complex e2);

// Parameter correspondence p = alpha/(1+sqrt(1-alpha^2)), alpha = 2p/(1+p^2);
// both arguments restricted to (0,1).
double alpha_from_p(double p);
double p_from_alpha(double alpha);

// One of the two hyperbolic half-planes a geodesic cuts out, identified by a
// point known to lie inside it.
struct HalfPlaneRegion {
    Geodesic boundary;
    Complex anchor;
};

enum class Side { inside, boundary, outside };

// Classification by the sign of the carrier equation, oriented so the anchor
// is inside; |carrier value| < tol counts as boundary. Rejects z outside the
// region's model.
Side side_of(const HalfPlaneRegion& region, Complex z, double tol = 1e-12);

// Disk side of the symmetric geodesic through p(alpha) that contains 0.
HalfPlaneRegion omega_region(double alpha);
// Half-plane side of the corresponding geodesic that contains i.
HalfPlaneRegion omega1_region(double alpha);
// Disk side of the geodesic through sqrt(2)-1 that does NOT contain 0.
HalfPlaneRegion omega0_region();

// Largest rotation angle (radians) for which the rotated pole p*e^{-i*theta}
// stays inside omega0: atan(sqrt(6p^2-p^4-1)/(1+p^2)). Domain [sqrt(2)-1, 1).
double rotation_sector_max_angle(double p);

// The two points of {|z| = p} on the carrier of the geodesic through
// sqrt(2)-1: ((1+p^2)/(2*sqrt(2)), +-sqrt(6p^2-p^4-1)/(2*sqrt(2))).
std::pair<Complex, Complex> circle_geodesic_intersection(double p);

} // namespace ldist
