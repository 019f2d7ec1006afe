#pragma once

#include <ldist/hyperbolic.hpp>

#include <variant>
#include <vector>

namespace ldist {

// A concrete analytic/meromorphic map of the plane with exact derivative and
// a list of singular points. Variants:
//   kp(p)            z -> p z / ((1-pz)(p-z)), the extremal slit map
//   omega_to_disk(a) z -> z(1-az)/(z-a), the region Omega onto the disk
//   f0()             z -> exp(i (1+z)/(1-z)), the divergence counterexample
//   moebius(M)       a fractional-linear map
//   composition(...) stages applied right to left
class AnalyticMap {
public:
    static AnalyticMap kp(double p);
    static AnalyticMap omega_to_disk(double alpha);
    static AnalyticMap f0();
    static AnalyticMap moebius(MoebiusMap m);
    static AnalyticMap composition(std::vector<AnalyticMap> stages);

    // Total on the sphere: singular points map to infinity.
    ExtendedComplex operator()(const ExtendedComplex& z) const;

    // Exact analytic derivative (chain rule across compositions, never
    // numeric). Throws std::domain_error at a singular point.
    Complex deriv(Complex z) const;

    // |deriv(z)| through forms that avoid evaluating oscillatory phases;
    // this is the quantity arc-length quadrature integrates.
    double abs_deriv(Complex z) const;

    // All singular points as sphere points: poles of the rational variants
    // (both inside and outside the disk), the essential singularity 1 of
    // f0, and their preimages through inner composition stages.
    std::vector<ExtendedComplex> singularities() const;

private:
    struct Kp { double p; };
    struct OmegaToDisk { double alpha; };
    struct F0 {};
    struct Chain { std::vector<AnalyticMap> stages; };
    using Node = std::variant<Kp, OmegaToDisk, F0, MoebiusMap, Chain>;

    explicit AnalyticMap(Node n) : node_(std::move(n)) {}

    std::vector<ExtendedComplex> preimages(const ExtendedComplex& w) const;

    Node node_;
};

// The boundary segment of the image of kp: [-p/(1-p)^2, -p/(1+p)^2].
struct Slit {
    double left;
    double right;
};

Slit kp_slit(double p);

// Euclidean distance from a finite point to the closed segment.
double slit_distance(Complex w, const Slit& s);

// Closed-form image lengths of kp: the vertical diameter maps onto a circle
// of circumference p*pi/(1+p^2); the left semicircle maps onto an interval
// traversed twice, total 4p^2/((1+p^2)(1+p)^2); their ratio is
// (1+p)^2*pi/(4p).
double kp_length_diameter(double p);
double kp_length_semicircle(double p);
double kp_length_ratio(double p);

// Pointwise distortion bound 4|phi'(z)| / (1-|phi(z)|^2) * rho for a
// conformal map of omega_region(alpha) whose image boundary is within rho of
// the image point. Requires z strictly inside the region.
double koebe_bound_disk(double alpha, Complex z, double rho);

// Half-plane version over omega1_region(alpha):
// 8|phi'(zeta)| / (|z+i|^2 (1-|phi(zeta)|^2)) * rho with zeta = -(iz+1)/(z+i).
double koebe_bound_half_plane(double alpha, Complex z, double rho);

// Threshold pole position for a boundary anchor a1 on the upper unit circle:
// (1 + sqrt(2) Re a1) / (sqrt(2) + Re((1-i) a1)), a value in (-1, 1).
double pole_threshold(Complex alpha1);

// Image of the pole p1 under the disk automorphism that straightens the
// geodesic through a1 onto the vertical diameter:
// (1 - p1 a1 + i(a1 - p1)) / (p1 - a1 + i(p1 a1 - 1)), real and in
// (sqrt(2)-1, 1) for p1 in (pole_threshold(a1), 1).
double reduced_pole(double p1, Complex alpha1);

} // namespace ldist
