#pragma once

#include <ldist/conformal_maps.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace ldist {

// A parametrized curve on [t0, t1] with its exact velocity. Endpoint flags
// record whether the end belongs to the curve; singular open endpoints are
// approached but never evaluated.
struct ParamCurve {
    double t0;
    double t1;
    std::function<Complex(double)> point;
    std::function<Complex(double)> velocity;
    bool closed_left = true;
    bool closed_right = true;
};

// The vertical diameter t -> it, t in (-1, 1).
ParamCurve diameter_I();
// The left unit semicircle theta -> e^{i theta}, theta in [pi/2, 3pi/2].
ParamCurve semicircle_Cprime();
// The real segment [a, b] parametrized by itself.
ParamCurve real_segment(double a, double b);
// The vertical diameter rotated by theta: t -> e^{i theta} (it).
ParamCurve rotated_diameter(double theta);
// The upper unit semicircle theta -> e^{i theta}, theta in (0, pi).
ParamCurve upper_semicircle();
// The arc of a geodesic carrier inside its model. Rejects unbounded carriers
// (half-plane vertical lines).
ParamCurve geodesic_arc(const Geodesic& g);
// The arc of the unit circle through -1 joining alpha1 to conj(alpha1).
ParamCurve disk_boundary_arc(Complex alpha1);

// The same curve on the parameter subinterval [a, b].
ParamCurve restrict_curve(const ParamCurve& c, double a, double b);

struct LengthResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

struct PoleProximityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod estimate of the image length
// integral |m'(c(t))| |c'(t)| dt with estimated relative error <= rel_tol.
//
// A singularity of m closer than 1e-8 to the curve rejects it with
// PoleProximityError, unless the closest approach is an open endpoint whose
// limit point is the singularity (an improper but possibly convergent
// integral). If the subdivision budget (1e6 evaluations) runs out the best
// estimate is returned with converged = false.
LengthResult arc_length(const AnalyticMap& m, const ParamCurve& c, double rel_tol = 1e-10);

// Lengths over the curve truncated a parameter distance eps from its singular
// endpoint, one per entry of the strictly decreasing eps list.
std::vector<std::pair<double, LengthResult>> truncated_length(const AnalyticMap& m,
                                                              const ParamCurve& c,
                                                              const std::vector<double>& eps_list,
                                                              double rel_tol = 1e-10);

} // namespace ldist
