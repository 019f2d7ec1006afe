#pragma once

#include <ldist/extended_complex.hpp>

namespace ldist {

// Fractional-linear map z -> (az+b)/(cz+d), ad - bc != 0.
// Coefficients are normalized to |ad - bc| = 1 on construction so that long
// composition chains stay well scaled.
class MoebiusMap {
public:
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);

    static MoebiusMap identity() { return MoebiusMap(1.0, 0.0, 0.0, 1.0); }

    // z -> (-1-iz)/(z+i): unit disk onto the upper half-plane, 0 -> i,
    // with the vertical diameter going to the positive imaginary axis and
    // the left semicircle to the positive real axis.
    static MoebiusMap disk_to_half_plane();

    // z -> (z-a1)/(a1*z-1) for a boundary anchor a1 on the upper unit
    // circle; sends the symmetric geodesic with ideal endpoint a1 to the
    // positive imaginary axis. Requires |a1| = 1 (tol 1e-12), Im a1 > 0.
    static MoebiusMap disk_to_half_plane(Complex boundary_anchor);

    ExtendedComplex operator()(const ExtendedComplex& z) const;

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }
    Complex determinant() const { return a_ * d_ - b_ * c_; }

    // Finite pole (the preimage of infinity), or infinity for affine maps.
    ExtendedComplex pole() const;

    // Derivative (ad-bc)/(cz+d)^2 at a finite non-pole point.
    Complex deriv(Complex z) const;

private:
    Complex a_, b_, c_, d_;
};

// compose(M1, M2) acts as z -> M1(M2(z)).
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

// A generalized circle of the plane: either the line Re(conj(normal)*z) =
// offset with |normal| = 1, or a circle of strictly positive radius.
class GeneralizedCircle {
public:
    static GeneralizedCircle line(Complex normal, double offset);
    static GeneralizedCircle circle(Complex center, double radius);

    bool is_line() const { return is_line_; }
    Complex normal() const { return normal_; }
    double offset() const { return offset_; }
    Complex center() const { return center_; }
    double radius() const { return radius_; }

    // Carrier equation value: Re(conj(normal)*z) - offset for a line,
    // |z-center|^2 - radius^2 for a circle. Zero on the point set.
    double signed_value(Complex z) const;

    // Euclidean distance from z to the point set.
    double distance_to(Complex z) const;

    // A point of the carrier for t in (0,1). Circles sweep the full angle;
    // lines sweep all offsets via tan(pi*(t-1/2)).
    Complex point_at(double t) const;

private:
    bool is_line_ = false;
    Complex normal_{0.0, 0.0}; // |normal| = 1 when line
    double offset_ = 0.0;
    Complex center_{0.0, 0.0};
    double radius_ = 0.0;
};

// Image of the point set of c under m. Mapped sample points of c lie on the
// result; images whose circumradius exceeds 1e8 degrade to a fitted line.
GeneralizedCircle image_circle(const MoebiusMap& m, const GeneralizedCircle& c);

bool approx_equal(const GeneralizedCircle& lhs, const GeneralizedCircle& rhs, double tol);

} // namespace ldist
