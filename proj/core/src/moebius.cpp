#include <ldist/moebius.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace ldist {

namespace {

constexpr double kHugeRadius = 1e8; // beyond this an image circle degrades to a line
constexpr double kPi = 3.14159265358979323846;

} // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    const double det = std::abs(a * d - b * c);
    if (!(det > 0.0) || !std::isfinite(det))
        throw std::invalid_argument("MoebiusMap: degenerate coefficients (ad - bc = 0)");
    // real scale so the determinant keeps its phase but gains modulus 1
    const double s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

MoebiusMap MoebiusMap::disk_to_half_plane() {
    return MoebiusMap(Complex(0.0, -1.0), Complex(-1.0, 0.0), Complex(1.0, 0.0),
                      Complex(0.0, 1.0));
}

MoebiusMap MoebiusMap::disk_to_half_plane(Complex boundary_anchor) {
    if (std::abs(std::abs(boundary_anchor) - 1.0) > 1e-12)
        throw std::domain_error("disk_to_half_plane: anchor must lie on the unit circle");
    if (!(boundary_anchor.imag() > 0.0))
        throw std::domain_error("disk_to_half_plane: anchor must lie on the upper semicircle");
    return MoebiusMap(1.0, -boundary_anchor, boundary_anchor, -1.0);
}

ExtendedComplex MoebiusMap::operator()(const ExtendedComplex& z) const {
    if (z.is_infinite()) {
        if (c_ == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
        return ExtendedComplex(a_ / c_);
    }
    const Complex v = z.value();
    const Complex den = c_ * v + d_;
    if (den == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
    const Complex num = a_ * v + b_;
    const Complex w = num / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        return ExtendedComplex::infinity();
    return ExtendedComplex(w);
}

ExtendedComplex MoebiusMap::pole() const {
    if (c_ == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
    return ExtendedComplex(-d_ / c_);
}

Complex MoebiusMap::deriv(Complex z) const {
    const Complex den = c_ * z + d_;
    if (den == Complex(0.0, 0.0))
        throw std::domain_error("MoebiusMap::deriv: evaluation at the pole");
    return determinant() / (den * den);
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    return MoebiusMap(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                      m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

GeneralizedCircle GeneralizedCircle::line(Complex normal, double offset) {
    const double n = std::abs(normal);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("GeneralizedCircle::line: zero normal");
    GeneralizedCircle g;
    g.is_line_ = true;
    g.normal_ = normal / n;
    g.offset_ = offset / n;
    return g;
}

GeneralizedCircle GeneralizedCircle::circle(Complex center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("GeneralizedCircle::circle: radius must be positive");
    GeneralizedCircle g;
    g.center_ = center;
    g.radius_ = radius;
    return g;
}

double GeneralizedCircle::signed_value(Complex z) const {
    if (is_line_) return std::real(std::conj(normal_) * z) - offset_;
    return std::norm(z - center_) - radius_ * radius_;
}

double GeneralizedCircle::distance_to(Complex z) const {
    if (is_line_) return std::abs(std::real(std::conj(normal_) * z) - offset_);
    return std::abs(std::abs(z - center_) - radius_);
}

Complex GeneralizedCircle::point_at(double t) const {
    if (is_line_) {
        const Complex dir = Complex(0.0, 1.0) * normal_;
        return normal_ * offset_ + dir * std::tan(kPi * (t - 0.5));
    }
    return center_ + radius_ * std::polar(1.0, 2.0 * kPi * t);
}

namespace {

GeneralizedCircle line_through(Complex p, Complex q) {
    const Complex dir = (q - p) / std::abs(q - p);
    const Complex normal = Complex(0.0, 1.0) * dir;
    return GeneralizedCircle::line(normal, std::real(std::conj(normal) * p));
}

// circumcircle of three points; falls back to a line when they are collinear
// or the circumradius exceeds kHugeRadius
GeneralizedCircle through_three(Complex z1, Complex z2, Complex z3) {
    const double x1 = z1.real(), y1 = z1.imag();
    const double x2 = z2.real(), y2 = z2.imag();
    const double x3 = z3.real(), y3 = z3.imag();
    const double den = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2));
    const double scale = std::max({std::abs(z1 - z2), std::abs(z2 - z3), std::abs(z3 - z1)});
    if (std::abs(den) < 1e-14 * scale * scale * scale + 1e-300)
        return line_through(z1, z3);
    const double n1 = std::norm(z1), n2 = std::norm(z2), n3 = std::norm(z3);
    const double cx = (n1 * (y2 - y3) + n2 * (y3 - y1) + n3 * (y1 - y2)) / den;
    const double cy = (n1 * (x3 - x2) + n2 * (x1 - x3) + n3 * (x2 - x1)) / den;
    const Complex center(cx, cy);
    const double radius = (std::abs(z1 - center) + std::abs(z2 - center) + std::abs(z3 - center)) / 3.0;
    if (radius > kHugeRadius) return line_through(z1, z3);
    return GeneralizedCircle::circle(center, radius);
}

} // namespace

GeneralizedCircle image_circle(const MoebiusMap& m, const GeneralizedCircle& c) {
    const ExtendedComplex pole = m.pole();
    const double scale = c.is_line() ? 1.0 + std::abs(c.offset()) : c.radius();
    bool pole_on_carrier = false;

    // sample three carrier points spread away from the pole so the images
    // stay moderate; a pole on the carrier makes the image a line
    std::array<Complex, 3> pts;
    if (c.is_line()) {
        const Complex base = c.normal() * c.offset();
        const Complex dir = Complex(0.0, 1.0) * c.normal();
        double s0 = 0.0;
        if (!pole.is_infinite()) {
            pole_on_carrier = c.distance_to(pole.value()) < 1e-9 * scale;
            s0 = std::real(std::conj(dir) * (pole.value() - base));
        }
        pts = {base + dir * (s0 + 1.0), base + dir * (s0 + 2.0), base + dir * (s0 - 1.0)};
    } else {
        double t0 = 0.0;
        if (!pole.is_infinite()) {
            pole_on_carrier = c.distance_to(pole.value()) < 1e-9 * scale;
            t0 = std::arg(pole.value() - c.center()) / (2.0 * kPi);
        }
        for (int i = 0; i < 3; ++i) {
            const double t = t0 + (i + 1) * 0.25; // 90, 180, 270 degrees from the pole
            pts[i] = c.point_at(t - std::floor(t));
        }
    }

    std::array<Complex, 3> w;
    for (int i = 0; i < 3; ++i) {
        const ExtendedComplex img = m(ExtendedComplex(pts[i]));
        if (img.is_infinite())
            throw std::runtime_error("image_circle: sample mapped to infinity");
        w[i] = img.value();
    }

    if (pole_on_carrier) return line_through(w[0], w[1]);
    return through_three(w[0], w[1], w[2]);
}

bool approx_equal(const GeneralizedCircle& lhs, const GeneralizedCircle& rhs, double tol) {
    if (lhs.is_line() != rhs.is_line()) return false;
    if (lhs.is_line()) {
        const bool same = std::abs(lhs.normal() - rhs.normal()) < tol &&
                          std::abs(lhs.offset() - rhs.offset()) < tol;
        const bool flipped = std::abs(lhs.normal() + rhs.normal()) < tol &&
                             std::abs(lhs.offset() + rhs.offset()) < tol;
        return same || flipped;
    }
    return std::abs(lhs.center() - rhs.center()) < tol &&
           std::abs(lhs.radius() - rhs.radius()) < tol;
}

} // namespace ldist
