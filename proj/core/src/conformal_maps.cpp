#include <ldist/conformal_maps.hpp>

#include <cmath>
#include <limits>

namespace ldist {

namespace {

const Complex kI(0.0, 1.0);
constexpr double kPi = 3.14159265358979323846;

void require_unit_interval(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error(std::string(what) + " must lie in (0,1)");
}

void require_upper_boundary(Complex alpha1) {
    if (std::abs(std::abs(alpha1) - 1.0) > 1e-12)
        throw std::domain_error("alpha1 must lie on the unit circle");
    if (!(alpha1.imag() > 0.0))
        throw std::domain_error("alpha1 must lie on the open upper semicircle");
}

ExtendedComplex finite_or_infinity(Complex w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        return ExtendedComplex::infinity();
    return ExtendedComplex(w);
}

// roots of a z^2 + b z + c = 0 as sphere points; a degree drop contributes
// the root at infinity
std::vector<ExtendedComplex> quadratic_roots(Complex a, Complex b, Complex c) {
    if (std::abs(a) == 0.0) {
        if (std::abs(b) == 0.0) return {};
        return {ExtendedComplex(-c / b), ExtendedComplex::infinity()};
    }
    const Complex disc = std::sqrt(b * b - 4.0 * a * c);
    // avoid cancellation in the smaller root
    const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                              : -0.5 * (b - disc);
    std::vector<ExtendedComplex> roots;
    roots.emplace_back(q / a);
    if (std::abs(q) > 0.0)
        roots.emplace_back(c / q);
    else
        roots.emplace_back(Complex(0.0, 0.0));
    return roots;
}

} // namespace

AnalyticMap AnalyticMap::kp(double p) {
    require_unit_interval(p, "p");
    return AnalyticMap(Node(Kp{p}));
}

AnalyticMap AnalyticMap::omega_to_disk(double alpha) {
    require_unit_interval(alpha, "alpha");
    return AnalyticMap(Node(OmegaToDisk{alpha}));
}

AnalyticMap AnalyticMap::f0() { return AnalyticMap(Node(F0{})); }

AnalyticMap AnalyticMap::moebius(MoebiusMap m) { return AnalyticMap(Node(std::move(m))); }

AnalyticMap AnalyticMap::composition(std::vector<AnalyticMap> stages) {
    if (stages.empty())
        throw std::invalid_argument("composition: empty stage list");
    return AnalyticMap(Node(Chain{std::move(stages)}));
}

ExtendedComplex AnalyticMap::operator()(const ExtendedComplex& z) const {
    return std::visit(
        [&z](const auto& node) -> ExtendedComplex {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Kp>) {
                const double p = node.p;
                if (z.is_infinite()) return ExtendedComplex(Complex(0.0, 0.0));
                const Complex v = z.value();
                const Complex den = (1.0 - p * v) * (p - v);
                if (den == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
                return finite_or_infinity(p * v / den);
            } else if constexpr (std::is_same_v<T, OmegaToDisk>) {
                const double a = node.alpha;
                if (z.is_infinite()) return ExtendedComplex::infinity();
                const Complex v = z.value();
                const Complex den = v - a;
                if (den == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
                return finite_or_infinity(v * (1.0 - a * v) / den);
            } else if constexpr (std::is_same_v<T, F0>) {
                if (z.is_infinite()) return ExtendedComplex(std::exp(-kI));
                const Complex v = z.value();
                if (v == Complex(1.0, 0.0)) return ExtendedComplex::infinity();
                const Complex u = (1.0 + v) / (1.0 - v);
                // exp(i u) without forming i*u keeps the real-u case exact
                return finite_or_infinity(std::exp(-u.imag()) *
                                          Complex(std::cos(u.real()), std::sin(u.real())));
            } else if constexpr (std::is_same_v<T, MoebiusMap>) {
                return node(z);
            } else {
                ExtendedComplex w = z;
                for (auto it = node.stages.rbegin(); it != node.stages.rend(); ++it)
                    w = (*it)(w);
                return w;
            }
        },
        node_);
}

Complex AnalyticMap::deriv(Complex z) const {
    return std::visit(
        [z](const auto& node) -> Complex {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Kp>) {
                const double p = node.p;
                const Complex d1 = 1.0 - p * z, d2 = p - z;
                if (d1 == Complex(0.0, 0.0) || d2 == Complex(0.0, 0.0))
                    throw std::domain_error("deriv: evaluation at a pole of kp");
                return p * p * (1.0 - z * z) / (d1 * d1 * d2 * d2);
            } else if constexpr (std::is_same_v<T, OmegaToDisk>) {
                const double a = node.alpha;
                const Complex den = z - a;
                if (den == Complex(0.0, 0.0))
                    throw std::domain_error("deriv: evaluation at the pole of omega_to_disk");
                return -a * (z * z - 2.0 * a * z + 1.0) / (den * den);
            } else if constexpr (std::is_same_v<T, F0>) {
                if (z == Complex(1.0, 0.0))
                    throw std::domain_error("deriv: evaluation at the singularity of f0");
                const Complex u = (1.0 + z) / (1.0 - z);
                const Complex w = std::exp(-u.imag()) *
                                  Complex(std::cos(u.real()), std::sin(u.real()));
                return w * kI * 2.0 / ((1.0 - z) * (1.0 - z));
            } else if constexpr (std::is_same_v<T, MoebiusMap>) {
                return node.deriv(z);
            } else {
                Complex acc(1.0, 0.0);
                ExtendedComplex w(z);
                for (auto it = node.stages.rbegin(); it != node.stages.rend(); ++it) {
                    if (w.is_infinite())
                        throw std::domain_error("deriv: intermediate value at infinity");
                    acc *= it->deriv(w.value());
                    w = (*it)(w);
                }
                return acc;
            }
        },
        node_);
}

double AnalyticMap::abs_deriv(Complex z) const {
    return std::visit(
        [this, z](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, F0>) {
                if (z == Complex(1.0, 0.0))
                    throw std::domain_error("abs_deriv: evaluation at the singularity of f0");
                // |exp(iu)| = exp(-Im u); no oscillatory phase enters
                const Complex u = (1.0 + z) / (1.0 - z);
                return std::exp(-u.imag()) * 2.0 / std::norm(1.0 - z);
            } else if constexpr (std::is_same_v<T, Chain>) {
                double acc = 1.0;
                ExtendedComplex w(z);
                for (auto it = node.stages.rbegin(); it != node.stages.rend(); ++it) {
                    if (w.is_infinite())
                        throw std::domain_error("abs_deriv: intermediate value at infinity");
                    acc *= it->abs_deriv(w.value());
                    w = (*it)(w);
                }
                return acc;
            } else {
                return std::abs(deriv(z));
            }
        },
        node_);
}

std::vector<ExtendedComplex> AnalyticMap::preimages(const ExtendedComplex& w) const {
    return std::visit(
        [&w](const auto& node) -> std::vector<ExtendedComplex> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Kp>) {
                const double p = node.p;
                if (w.is_infinite()) return {ExtendedComplex(p), ExtendedComplex(1.0 / p)};
                // p z = w (p z^2 - (1+p^2) z + p)
                const Complex wv = w.value();
                return quadratic_roots(wv * p, -(wv * (1.0 + p * p) + p), wv * p);
            } else if constexpr (std::is_same_v<T, OmegaToDisk>) {
                const double a = node.alpha;
                if (w.is_infinite())
                    return {ExtendedComplex(a), ExtendedComplex::infinity()};
                // a z^2 - (1 - w) z - a w = 0
                const Complex wv = w.value();
                return quadratic_roots(Complex(a), -(1.0 - wv), -a * wv);
            } else if constexpr (std::is_same_v<T, F0>) {
                throw std::logic_error(
                    "singularities: cannot pull points back through f0 (infinite fiber)");
            } else if constexpr (std::is_same_v<T, MoebiusMap>) {
                return {node.inverse()(w)};
            } else {
                // preimage under the chain: pull back stage by stage, first
                // applied stage last
                std::vector<ExtendedComplex> pts = {w};
                for (const auto& stage : node.stages) {
                    std::vector<ExtendedComplex> next;
                    for (const auto& pt : pts)
                        for (const auto& q : stage.preimages(pt)) next.push_back(q);
                    pts = std::move(next);
                }
                return pts;
            }
        },
        node_);
}

std::vector<ExtendedComplex> AnalyticMap::singularities() const {
    return std::visit(
        [](const auto& node) -> std::vector<ExtendedComplex> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Kp>) {
                return {ExtendedComplex(node.p), ExtendedComplex(1.0 / node.p)};
            } else if constexpr (std::is_same_v<T, OmegaToDisk>) {
                return {ExtendedComplex(node.alpha), ExtendedComplex::infinity()};
            } else if constexpr (std::is_same_v<T, F0>) {
                return {ExtendedComplex(1.0)};
            } else if constexpr (std::is_same_v<T, MoebiusMap>) {
                return {node.pole()};
            } else {
                // a point is singular when some stage sees a singular value;
                // pull each stage's singular set back through the stages that
                // run before it
                std::vector<ExtendedComplex> total;
                const auto& stages = node.stages;
                for (std::size_t i = 0; i < stages.size(); ++i) {
                    std::vector<ExtendedComplex> pts = stages[i].singularities();
                    for (std::size_t j = i + 1; j < stages.size(); ++j) {
                        std::vector<ExtendedComplex> next;
                        for (const auto& pt : pts)
                            for (const auto& q : stages[j].preimages(pt)) next.push_back(q);
                        pts = std::move(next);
                    }
                    for (const auto& pt : pts) total.push_back(pt);
                }
                return total;
            }
        },
        node_);
}

Slit kp_slit(double p) {
    require_unit_interval(p, "p");
    return Slit{-p / ((1.0 - p) * (1.0 - p)), -p / ((1.0 + p) * (1.0 + p))};
}

double slit_distance(Complex w, const Slit& s) {
    const double dx = std::max({s.left - w.real(), w.real() - s.right, 0.0});
    return std::hypot(dx, w.imag());
}

double kp_length_diameter(double p) {
    require_unit_interval(p, "p");
    return p * kPi / (1.0 + p * p);
}

double kp_length_semicircle(double p) {
    require_unit_interval(p, "p");
    return 4.0 * p * p / ((1.0 + p * p) * (1.0 + p) * (1.0 + p));
}

double kp_length_ratio(double p) {
    require_unit_interval(p, "p");
    return (1.0 + p) * (1.0 + p) * kPi / (4.0 * p);
}

namespace {

double koebe_bound_core(double alpha, Complex zeta, double rho, double extra_factor) {
    const AnalyticMap phi = AnalyticMap::omega_to_disk(alpha);
    const ExtendedComplex img = phi(ExtendedComplex(zeta));
    const double denom = 1.0 - std::norm(img.value());
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return extra_factor * 4.0 * phi.abs_deriv(zeta) / denom * rho;
}

} // namespace

double koebe_bound_disk(double alpha, Complex z, double rho) {
    if (rho < 0.0) throw std::domain_error("koebe_bound_disk: rho must be nonnegative");
    if (side_of(omega_region(alpha), z) != Side::inside)
        throw std::domain_error("koebe_bound_disk: z must lie inside the region");
    return koebe_bound_core(alpha, z, rho, 1.0);
}

double koebe_bound_half_plane(double alpha, Complex z, double rho) {
    if (rho < 0.0) throw std::domain_error("koebe_bound_half_plane: rho must be nonnegative");
    if (side_of(omega1_region(alpha), z) != Side::inside)
        throw std::domain_error("koebe_bound_half_plane: z must lie inside the region");
    const Complex zeta = -(kI * z + 1.0) / (z + kI);
    return koebe_bound_core(alpha, zeta, rho, 2.0 / std::norm(z + kI));
}

double pole_threshold(Complex alpha1) {
    require_upper_boundary(alpha1);
    const double c = alpha1.real(), s = alpha1.imag();
    return (1.0 + std::sqrt(2.0) * c) / (std::sqrt(2.0) + c + s);
}

double reduced_pole(double p1, Complex alpha1) {
    const double p0 = pole_threshold(alpha1);
    if (!(p1 > p0 && p1 < 1.0))
        throw std::domain_error("reduced_pole: p1 must lie in (pole_threshold(alpha1), 1)");
    const Complex num = 1.0 - p1 * alpha1 + kI * (alpha1 - p1);
    const Complex den = p1 - alpha1 + kI * (p1 * alpha1 - 1.0);
    const Complex w = num / den;
    if (std::abs(w.imag()) > 1e-10)
        throw std::runtime_error("reduced_pole: non-real image (internal error)");
    return w.real();
}

} // namespace ldist
