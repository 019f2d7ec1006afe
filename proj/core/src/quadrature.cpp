#include <ldist/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ldist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGuardDistance = 1e-8;
constexpr std::size_t kEvalBudget = 1000000;

// abscissae of the symmetric 15-point Kronrod rule, applied at center +- h*x;
// odd indices carry the embedded 7-point Gauss rule
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Interval {
    double a, b;
    double integral;
    double error;
};

struct ByError {
    bool operator()(const Interval& lhs, const Interval& rhs) const {
        return lhs.error < rhs.error;
    }
};

template <typename F>
Interval gauss_kronrod_15(const F& f, double a, double b) {
    // nodes are mathematically interior; rounding at very small widths can
    // push one onto an endpoint, which may be a singular open endpoint of
    // the curve, so nudge back inside
    bool clamped = false;
    const auto interior = [a, b, &clamped](double t) {
        if (t > a && t < b) return t;
        clamped = true;
        return t <= a ? std::nextafter(a, b) : std::nextafter(b, a);
    };
    const double center = interior(0.5 * (a + b));
    const double h = 0.5 * (b - a);
    const double fc = f(center);

    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        fv1[j] = f(interior(center - h * kXgk[j]));
        fv2[j] = f(interior(center + h * kXgk[j]));
        resk += kWgk[j] * (fv1[j] + fv2[j]);
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (fv1[j] + fv2[j]);
    }

    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(h);

    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    // a clamped rule sampled a degenerate point set and its estimate means
    // nothing; charge the whole contribution as error
    if (clamped) err = std::abs(resk * h);

    if (!std::isfinite(resk * h) || !std::isfinite(err))
        throw std::runtime_error("arc_length: non-finite integrand sample");
    return Interval{a, b, resk * h, err};
}

// distance from point s to the curve, with the parameter of the closest
// approach; coarse sampling refined by golden-section around the best sample
std::pair<double, double> curve_distance(const ParamCurve& c, Complex s) {
    constexpr int n = 512;
    const double span = c.t1 - c.t0;
    double best = std::numeric_limits<double>::infinity();
    int bi = 0;
    for (int i = 0; i <= n; ++i) {
        const double t = c.t0 + span * i / n;
        const double d = std::abs(c.point(t) - s);
        if (d < best) {
            best = d;
            bi = i;
        }
    }
    double lo = c.t0 + span * std::max(0, bi - 1) / n;
    double hi = c.t0 + span * std::min(n, bi + 1) / n;
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = std::abs(c.point(x1) - s), f2 = std::abs(c.point(x2) - s);
    for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = std::abs(c.point(x1) - s);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = std::abs(c.point(x2) - s);
        }
    }
    const double tm = 0.5 * (lo + hi);
    const double dm = std::abs(c.point(tm) - s);
    if (dm < best) return {dm, tm};
    return {best, c.t0 + span * bi / n};
}

void guard_singularities(const AnalyticMap& m, const ParamCurve& c) {
    const double span = c.t1 - c.t0;
    for (const auto& s : m.singularities()) {
        if (s.is_infinite()) continue;
        const auto [dist, t_min] = curve_distance(c, s.value());
        if (dist >= kGuardDistance) continue;
        const bool at_left = (t_min - c.t0) <= 1e-6 * span &&
                             std::abs(c.point(c.t0) - s.value()) < kGuardDistance;
        const bool at_right = (c.t1 - t_min) <= 1e-6 * span &&
                              std::abs(c.point(c.t1) - s.value()) < kGuardDistance;
        if ((at_left && !c.closed_left) || (at_right && !c.closed_right)) continue;
        throw PoleProximityError("arc_length: a singularity of the map lies within 1e-8 of the curve");
    }
}

} // namespace

ParamCurve diameter_I() {
    return ParamCurve{-1.0, 1.0, [](double t) { return Complex(0.0, t); },
                      [](double) { return Complex(0.0, 1.0); }, false, false};
}

ParamCurve semicircle_Cprime() {
    return ParamCurve{0.5 * kPi, 1.5 * kPi,
                      [](double th) { return std::polar(1.0, th); },
                      [](double th) { return Complex(0.0, 1.0) * std::polar(1.0, th); }, true,
                      true};
}

ParamCurve real_segment(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("real_segment: requires a < b");
    return ParamCurve{a, b, [](double t) { return Complex(t, 0.0); },
                      [](double) { return Complex(1.0, 0.0); }, true, true};
}

ParamCurve rotated_diameter(double theta) {
    const Complex rot = std::polar(1.0, theta);
    return ParamCurve{-1.0, 1.0, [rot](double t) { return rot * Complex(0.0, t); },
                      [rot](double) { return rot * Complex(0.0, 1.0); }, false, false};
}

ParamCurve upper_semicircle() {
    return ParamCurve{0.0, kPi, [](double th) { return std::polar(1.0, th); },
                      [](double th) { return Complex(0.0, 1.0) * std::polar(1.0, th); }, false,
                      false};
}

ParamCurve geodesic_arc(const Geodesic& g) {
    if (g.carrier.is_line()) {
        if (g.model == Model::half_plane)
            throw std::invalid_argument("geodesic_arc: unbounded half-plane geodesic");
        const Complex e1 = g.endpoints[0], e2 = g.endpoints[1];
        return ParamCurve{0.0, 1.0, [e1, e2](double t) { return e1 + t * (e2 - e1); },
                          [e1, e2](double) { return e2 - e1; }, false, false};
    }
    const Complex c = g.carrier.center();
    const double r = g.carrier.radius();
    const double phi1 = std::arg(g.endpoints[0] - c);
    double dphi = std::arg(g.endpoints[1] - c) - phi1;
    if (dphi < 0.0) dphi += 2.0 * kPi;
    // take the branch whose midpoint stays inside the model
    const Complex mid = c + r * std::polar(1.0, phi1 + 0.5 * dphi);
    const bool mid_inside = g.model == Model::disk ? std::abs(mid) < 1.0 : mid.imag() > 0.0;
    if (!mid_inside) dphi -= 2.0 * kPi;
    return ParamCurve{0.0, 1.0,
                      [c, r, phi1, dphi](double t) { return c + r * std::polar(1.0, phi1 + dphi * t); },
                      [c, r, phi1, dphi](double t) {
                          return Complex(0.0, r * dphi) * std::polar(1.0, phi1 + dphi * t);
                      },
                      false, false};
}

ParamCurve disk_boundary_arc(Complex alpha1) {
    if (std::abs(std::abs(alpha1) - 1.0) > 1e-12 || !(alpha1.imag() > 0.0))
        throw std::domain_error("disk_boundary_arc: alpha1 must lie on the open upper semicircle");
    const double th1 = std::arg(alpha1);
    return ParamCurve{th1, 2.0 * kPi - th1, [](double th) { return std::polar(1.0, th); },
                      [](double th) { return Complex(0.0, 1.0) * std::polar(1.0, th); }, true,
                      true};
}

ParamCurve restrict_curve(const ParamCurve& c, double a, double b) {
    if (!(a < b) || a < c.t0 - 1e-15 || b > c.t1 + 1e-15)
        throw std::invalid_argument("restrict_curve: [a,b] must be a subinterval of the domain");
    ParamCurve r = c;
    r.t0 = a;
    r.t1 = b;
    // a truncation point is a genuine point of the curve
    if (a != c.t0) r.closed_left = true;
    if (b != c.t1) r.closed_right = true;
    return r;
}

LengthResult arc_length(const AnalyticMap& m, const ParamCurve& c, double rel_tol) {
    if (!(rel_tol >= 1e-13 && rel_tol <= 1e-3))
        throw std::domain_error("arc_length: rel_tol must lie in [1e-13, 1e-3]");
    if (!(c.t1 > c.t0)) throw std::invalid_argument("arc_length: empty parameter interval");
    guard_singularities(m, c);

    std::size_t evals = 0;
    const auto integrand = [&](double t) {
        ++evals;
        return m.abs_deriv(c.point(t)) * std::abs(c.velocity(t));
    };

    std::vector<Interval> heap;
    std::vector<Interval> frozen; // intervals too narrow to split further
    double total = 0.0, total_err = 0.0;
    constexpr int kSeeds = 8;
    for (int i = 0; i < kSeeds; ++i) {
        const double a = c.t0 + (c.t1 - c.t0) * i / kSeeds;
        const double b = c.t0 + (c.t1 - c.t0) * (i + 1) / kSeeds;
        heap.push_back(gauss_kronrod_15(integrand, a, b));
        total += heap.back().integral;
        total_err += heap.back().error;
    }
    std::make_heap(heap.begin(), heap.end(), ByError{});

    while (total_err > rel_tol * std::abs(total) && !heap.empty() && evals < kEvalBudget) {
        std::pop_heap(heap.begin(), heap.end(), ByError{});
        const Interval worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        // stop refining when a child would have no interior double left for
        // the rule to sample
        if (mid <= worst.a || mid >= worst.b ||
            std::nextafter(worst.a, mid) >= mid || std::nextafter(mid, worst.b) >= worst.b) {
            frozen.push_back(worst);
            continue;
        }
        const Interval left = gauss_kronrod_15(integrand, worst.a, mid);
        const Interval right = gauss_kronrod_15(integrand, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), ByError{});
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), ByError{});
    }

    // deterministic final sum, ordered by interval position
    std::vector<Interval> leaves = std::move(heap);
    leaves.insert(leaves.end(), frozen.begin(), frozen.end());
    std::sort(leaves.begin(), leaves.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });
    LengthResult result;
    for (const auto& iv : leaves) {
        result.value += iv.integral;
        result.error_bound += iv.error;
    }
    result.evaluations = evals;
    result.converged = result.error_bound <= rel_tol * std::abs(result.value);
    return result;
}

std::vector<std::pair<double, LengthResult>> truncated_length(const AnalyticMap& m,
                                                              const ParamCurve& c,
                                                              const std::vector<double>& eps_list,
                                                              double rel_tol) {
    const double span = c.t1 - c.t0;
    // the singular end is the endpoint closest to a singularity of the map
    double dl = std::numeric_limits<double>::infinity();
    double dr = dl;
    for (const auto& s : m.singularities()) {
        if (s.is_infinite()) continue;
        dl = std::min(dl, std::abs(c.point(c.t0) - s.value()));
        dr = std::min(dr, std::abs(c.point(c.t1) - s.value()));
    }
    if (std::min(dl, dr) > 1e-6)
        throw std::invalid_argument("truncated_length: no singular endpoint to truncate");
    const bool bad_right = dr <= dl;

    double prev = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, LengthResult>> out;
    for (double eps : eps_list) {
        if (!(eps > 0.0 && eps < span))
            throw std::domain_error("truncated_length: eps must lie in (0, t1 - t0)");
        if (!(eps < prev))
            throw std::invalid_argument("truncated_length: eps values must strictly decrease");
        prev = eps;
        const ParamCurve part = bad_right ? restrict_curve(c, c.t0, c.t1 - eps)
                                          : restrict_curve(c, c.t0 + eps, c.t1);
        out.emplace_back(eps, arc_length(m, part, rel_tol));
    }
    return out;
}

} // namespace ldist
