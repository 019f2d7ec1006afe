#include <ldist/hyperbolic.hpp>

#include <cmath>

namespace ldist {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_unit_interval(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error(std::string(what) + " must lie in (0,1)");
}

} // namespace

double hyperbolic_distance_disk(Complex z1, Complex z2) {
    if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0)
        throw std::domain_error("hyperbolic_distance_disk: points must lie in the open disk");
    const double r = std::abs((z1 - z2) / (1.0 - std::conj(z1) * z2));
    return std::atanh(r);
}

Geodesic symmetric_geodesic_disk(double alpha) {
    require_unit_interval(alpha, "alpha");
    const double s = std::sqrt(1.0 - alpha * alpha);
    Geodesic g;
    g.model = Model::disk;
    g.carrier = GeneralizedCircle::circle(Complex(1.0 / alpha, 0.0), s / alpha);
    g.endpoints = {Complex(alpha, s), Complex(alpha, -s)};
    return g;
}

Geodesic symmetric_geodesic_half_plane(double alpha) {
    require_unit_interval(alpha, "alpha");
    const double s = std::sqrt(1.0 - alpha * alpha);
    Geodesic g;
    g.model = Model::half_plane;
    g.carrier = GeneralizedCircle::circle(Complex(-1.0 / alpha, 0.0), s / alpha);
    g.endpoints = {Complex((-1.0 + s) / alpha, 0.0), Complex((-1.0 - s) / alpha, 0.0)};
    return g;
}

Geodesic geodesic_from_boundary_points(Complex e1, Complex e2) {
    if (std::abs(std::abs(e1) - 1.0) > 1e-12 || std::abs(std::abs(e2) - 1.0) > 1e-12)
        throw std::domain_error("geodesic_from_boundary_points: endpoints must lie on the unit circle");
    Geodesic g;
    g.model = Model::disk;
    g.endpoints = {e1, e2};
    // orthogonality to the unit circle reads Re(conj(c)*e) = 1 at both endpoints
    const double det = e1.real() * e2.imag() - e2.real() * e1.imag();
    if (std::abs(det) < 1e-12) {
        if (std::abs(e1 + e2) > 1e-9)
            throw std::domain_error("geodesic_from_boundary_points: endpoints coincide");
        // antipodal endpoints: a diameter
        const Complex normal = Complex(0.0, 1.0) * e1;
        g.carrier = GeneralizedCircle::line(normal, 0.0);
        return g;
    }
    const Complex center((e2.imag() - e1.imag()) / det, (e1.real() - e2.real()) / det);
    g.carrier = GeneralizedCircle::circle(center, std::abs(center - e1));
    return g;
}

double alpha_from_p(double p) {
    require_unit_interval(p, "p");
    return 2.0 * p / (1.0 + p * p);
}

double p_from_alpha(double alpha) {
    require_unit_interval(alpha, "alpha");
    return alpha / (1.0 + std::sqrt(1.0 - alpha * alpha));
}

Side side_of(const HalfPlaneRegion& region, Complex z, double tol) {
    if (region.boundary.model == Model::disk) {
        if (std::abs(z) >= 1.0)
            throw std::domain_error("side_of: point outside the open unit disk");
    } else {
        if (!(z.imag() > 0.0))
            throw std::domain_error("side_of: point outside the open upper half-plane");
    }
    const double v = region.boundary.carrier.signed_value(z);
    if (std::abs(v) < tol) return Side::boundary;
    const double anchor_sign = region.boundary.carrier.signed_value(region.anchor);
    return v * anchor_sign > 0.0 ? Side::inside : Side::outside;
}

HalfPlaneRegion omega_region(double alpha) {
    return HalfPlaneRegion{symmetric_geodesic_disk(alpha), Complex(0.0, 0.0)};
}

HalfPlaneRegion omega1_region(double alpha) {
    return HalfPlaneRegion{symmetric_geodesic_half_plane(alpha), Complex(0.0, 1.0)};
}

HalfPlaneRegion omega0_region() {
    // anchor between the geodesic through sqrt(2)-1 and the boundary point 1
    return HalfPlaneRegion{symmetric_geodesic_disk(std::sqrt(0.5)), Complex(0.9, 0.0)};
}

namespace {

double sector_radicand(double p) {
    if (p < kSqrt2 - 1.0 - 1e-12 || p >= 1.0)
        throw std::domain_error("p must lie in [sqrt(2)-1, 1)");
    return std::max(0.0, 6.0 * p * p - p * p * p * p - 1.0);
}

} // namespace

double rotation_sector_max_angle(double p) {
    return std::atan(std::sqrt(sector_radicand(p)) / (1.0 + p * p));
}

std::pair<Complex, Complex> circle_geodesic_intersection(double p) {
    const double y = std::sqrt(sector_radicand(p)) / (2.0 * kSqrt2);
    const double x = (1.0 + p * p) / (2.0 * kSqrt2);
    return {Complex(x, y), Complex(x, -y)};
}

} // namespace ldist
