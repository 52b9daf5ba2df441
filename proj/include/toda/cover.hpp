#pragma once

#include <cmath>

#include "toda/core.hpp"

namespace toda {

// A nonzero complex number carried with a continuous (unwrapped) argument.
// This is the domain of the multivalued functions: zeta^{1/2}, log, K_n.
// Multiplication adds arguments; a factor e^{2*pi*i} shifts arg by 2*pi and
// never wraps back.
struct CoverComplex {
    double mod = 1.0;  // modulus, > 0
    double arg = 0.0;  // unwrapped argument in radians

    CoverComplex() = default;
    CoverComplex(double m, double a) : mod(m), arg(a) {}

    static CoverComplex from_polar(double m, double a) { return {m, a}; }

    // Lift of a plain complex number: principal argument plus 2*pi*sheet.
    static CoverComplex lift(cplx z, int sheet = 0) {
        return {std::abs(z), std::arg(z) + 2.0 * kPi * sheet};
    }

    // Lift of w choosing the unwrapped argument closest to ref_arg.
    static CoverComplex near(cplx w, double ref_arg) {
        double a = std::arg(w);
        double k = std::round((ref_arg - a) / (2.0 * kPi));
        return {std::abs(w), a + 2.0 * kPi * k};
    }

    cplx value() const { return std::polar(mod, arg); }

    CoverComplex rotated(double dphi) const { return {mod, arg + dphi}; }
    CoverComplex scaled(double s) const { return {mod * s, arg}; }

    // z^alpha for real alpha, on the cover.
    cplx pow(double alpha) const {
        return std::polar(std::pow(mod, alpha), alpha * arg);
    }
    cplx sqrt() const { return pow(0.5); }
    cplx log() const { return cplx(std::log(mod), arg); }

    friend CoverComplex operator*(const CoverComplex& a, const CoverComplex& b) {
        return {a.mod * b.mod, a.arg + b.arg};
    }
    friend CoverComplex operator/(const CoverComplex& a, const CoverComplex& b) {
        return {a.mod / b.mod, a.arg - b.arg};
    }
};

}  // namespace toda
