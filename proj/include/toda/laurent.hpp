#pragma once

#include <Eigen/Dense>

#include "toda/core.hpp"

namespace toda {

using Vec = Eigen::VectorXcd;

// Truncation and quadrature parameters shared by everything that works with
// series on the unit circle.
struct TruncationParams {
    int N = 32;           // truncation order: coefficients k in [-N, N]
    int M = 256;          // quadrature point count on S^1, must satisfy M >= 4N+1
    double tol = 1e-12;   // default comparison tolerance
    double spill_threshold = 1e-10;  // relative discarded mass before flagging

    void validate() const {
        if (N < 1 || M < 4 * N + 1 || tol <= 0)
            throw Error(ErrorKind::ConfigInvalid,
                        "TruncationParams requires N>=1, M>=4N+1, tol>0");
    }
};

// Truncated two-sided Laurent series sum_{k=-N}^{N} c_k z^k, representing a
// function holomorphic on an annulus containing the unit circle.
class LaurentSeries {
  public:
    LaurentSeries() : N_(0), c_(Vec::Zero(1)) {}
    explicit LaurentSeries(int N) : N_(N), c_(Vec::Zero(2 * N + 1)) {}
    LaurentSeries(int N, Vec coeffs) : N_(N), c_(std::move(coeffs)) {}

    static LaurentSeries zero(int N) { return LaurentSeries(N); }
    static LaurentSeries constant(int N, cplx v) {
        LaurentSeries f(N);
        f.set_coeff(0, v);
        return f;
    }
    static LaurentSeries monomial(int N, int k, cplx v = 1.0) {
        LaurentSeries f(N);
        f.set_coeff(k, v);
        return f;
    }

    int order() const { return N_; }
    int size() const { return 2 * N_ + 1; }

    cplx coeff(int k) const {
        return (k < -N_ || k > N_) ? cplx(0.0) : c_(k + N_);
    }
    void set_coeff(int k, cplx v) { c_(k + N_) = v; }
    void add_coeff(int k, cplx v) {
        if (k >= -N_ && k <= N_) c_(k + N_) += v;
    }
    const Vec& coeffs() const { return c_; }

    bool under_resolved() const { return under_resolved_; }
    double spill() const { return spill_; }
    void flag_under_resolved(double spill) {
        under_resolved_ = true;
        spill_ = std::max(spill_, spill);
    }
    void inherit_flags(const LaurentSeries& a) {
        if (a.under_resolved_) flag_under_resolved(a.spill_);
    }
    void inherit_flags(const LaurentSeries& a, const LaurentSeries& b) {
        inherit_flags(a);
        inherit_flags(b);
    }

    // Pointwise evaluation anywhere in the annulus of validity.
    cplx eval(cplx z) const;

    // Values at the M equispaced nodes z_j = exp(2*pi*i*j/M).
    Vec grid_values(int M) const;

    // Coefficient extraction by discrete Fourier transform from grid values.
    // Exact for Laurent polynomials of degree <= N when M >= 2N+1; alias-free
    // for products when M >= 4N+1.
    static LaurentSeries from_grid(const Vec& values, int N,
                                   double spill_threshold = 1e-10);

    // Projections (exact on stored coefficients).
    LaurentSeries project_geq(int p) const;
    LaurentSeries project_leq(int p) const;
    cplx coeff_at(int p) const { return coeff(p); }

    // d/dz. The k = -N coefficient would leave the window; its mass is
    // recorded as spill if nonzero.
    LaurentSeries derivative() const;
    // z d/dz, window-preserving.
    LaurentSeries z_derivative() const;

    cplx contour_mean() const { return coeff(0); }

    LaurentSeries resized(int N) const;

    double max_abs_coeff() const { return c_.cwiseAbs().maxCoeff(); }
    double sum_abs_coeff() const { return c_.cwiseAbs().sum(); }
    double sup_norm_grid(int M) const { return grid_values(M).cwiseAbs().maxCoeff(); }

    // Truncation honesty: edge coefficients must be negligible relative to the
    // largest one, otherwise the series is flagged under-resolved.
    bool truncation_honest(double threshold = 1e-10) const;

    LaurentSeries& operator+=(const LaurentSeries& g);
    LaurentSeries& operator-=(const LaurentSeries& g);
    LaurentSeries& operator*=(cplx s);

    friend LaurentSeries operator+(LaurentSeries f, const LaurentSeries& g) { return f += g; }
    friend LaurentSeries operator-(LaurentSeries f, const LaurentSeries& g) { return f -= g; }
    friend LaurentSeries operator*(cplx s, LaurentSeries f) { return f *= s; }
    friend LaurentSeries operator*(LaurentSeries f, cplx s) { return f *= s; }

  private:
    int N_;
    Vec c_;
    bool under_resolved_ = false;
    double spill_ = 0.0;
};

// Exact coefficientwise convolution truncated back to [-N, N]. Discarded
// relative mass beyond the window is recorded; the result is flagged when it
// exceeds the spill threshold.
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g,
                  double spill_threshold = 1e-10);

// f/g computed on the grid and re-expanded. Throws T2Violation when |g| dips
// below the floor on the grid.
LaurentSeries div_grid(const LaurentSeries& f, const LaurentSeries& g,
                       const TruncationParams& par, double floor = 1e-6);

// Reciprocal 1/g on the grid.
LaurentSeries inv_grid(const LaurentSeries& g, const TruncationParams& par,
                       double floor = 1e-6);

enum class ProjectMode { Geq, Leq, Single };

// Spec-facing projection entry point.
LaurentSeries project(const LaurentSeries& f, ProjectMode mode, int p);

// The M-th roots of unity, cached per M.
const Vec& unit_roots(int M);

// Trapezoid-rule contour mean (1/2*pi*i) \oint f(z) dz/z from grid values.
cplx contour_mean_quadrature(const Vec& grid_values);

}  // namespace toda
