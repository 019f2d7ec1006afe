#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ldist {

using Complex = std::complex<double>;

// A point of the Riemann sphere: a finite complex value or the point at
// infinity. Finite values must have finite coordinates.
class ExtendedComplex {
public:
    ExtendedComplex() : value_(0.0, 0.0) {}
    ExtendedComplex(Complex v) : value_(v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ExtendedComplex: non-finite coordinates");
    }
    ExtendedComplex(double re, double im = 0.0) : ExtendedComplex(Complex(re, im)) {}

    static ExtendedComplex infinity() {
        ExtendedComplex z;
        z.infinite_ = true;
        return z;
    }

    bool is_infinite() const { return infinite_; }

    // Finite value; throws if this is the point at infinity.
    Complex value() const {
        if (infinite_)
            throw std::domain_error("ExtendedComplex: value() at infinity");
        return value_;
    }

private:
    Complex value_;
    bool infinite_ = false;
};

// Chordal metric on the sphere: 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)),
// with the usual limit 2/sqrt(1+|z|^2) against infinity.
inline double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.is_infinite() && b.is_infinite()) return 0.0;
    if (a.is_infinite() || b.is_infinite()) {
        const Complex z = a.is_infinite() ? b.value() : a.value();
        return 2.0 / std::sqrt(1.0 + std::norm(z));
    }
    const Complex z = a.value(), w = b.value();
    return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

} // namespace ldist
