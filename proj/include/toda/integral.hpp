#pragma once

#include "toda/canonical.hpp"
#include "toda/cover.hpp"

namespace toda {

// y_sigma(zeta) = zeta^{-1/2}/(2 pi i) \oint e^{zeta lambda_sigma(z)} dz/z by
// trapezoid quadrature; zeta^{+-1/2} on the cover.
cplx y_sigma(const ManifoldPoint& pt, cplx sigma, const CoverComplex& zeta,
             int M_override = 0);

// <dy_sigma(zeta), X> = zeta^{1/2}/(2 pi i) \oint e^{zeta lambda_sigma}
// <d lambda_sigma(z), X> dz/z. Doubling the node count must move the result
// by less than 1e-10 relative or QuadratureNotConverged is thrown.
cplx dy_sigma(const ManifoldPoint& pt, cplx sigma, const CoverComplex& zeta,
              const TangentTriple& X, bool check_convergence = false,
              int M_override = 0);

// Tangent representative of dy_sigma: eta(rep, X) = <dy_sigma, X>.
TangentTriple dy_representative(const ManifoldPoint& pt, cplx sigma,
                                const CoverComplex& zeta);

// Saddle-point expansion coefficients of zeta^{1/2} \int e^{zeta f} g dz at a
// simple critical point z0 of f:
//   d_n = (-1)^n Gamma(n+1/2) c^{-(n+1/2)} [delta^{2n}] g(z0+delta) (1+h)^{-(n+1/2)}
// with f(z0+delta) - f(z0) = c delta^2 (1+h(delta)) and principal branches.
// Calibration: f = z^2, g = 1 gives d_0 = sqrt(pi), d_{n>=1} = 0; a path
// traversing the saddle counterclockwise (upward) carries the asymptotics
//   zeta^{1/2} \int_C e^{zeta f} g dz ~ i e^{zeta f(z0)} sum d_n zeta^{-n}.
std::vector<cplx> saddle_coeffs(const LaurentSeries& f, const LaurentSeries& g,
                                cplx z0, int n_max);

enum class AsymptoticFamily { SigmaOnCircle, SigmaZero, SigmaOne };

// Residue-integral coefficients of the asymptotic expansion of dy_sigma at a
// critical point (eqs. of the asymptotics proposition): the k-th entry is
//   1/(2 Gamma(1/2-k)) (1/2 pi i) \oint <d lambda_sigma, X>/(lambda_sigma-u)^{k+1/2} dz/z,
// evaluated on a small circle with the locally inverted fractional power.
std::vector<cplx> asymptotic_coeffs_residue(const ManifoldPoint& pt,
                                            AsymptoticFamily family,
                                            cplx critical_point, int k_max,
                                            const TangentTriple& X);

// Index of the critical value whose exponential dominates at ray direction
// arg(zeta); ties within the margin raise AntiStokesDirection.
int dominant_index(const std::vector<cplx>& critical_values, double arg_zeta,
                   double margin = 1e-8);

// The tangent vector ((1 - e^{-zeta e^u / z}) z, 0, -1) annihilated by every
// dy_sigma at the special point, expanded onto the truncation window.
TangentTriple incompleteness_witness(const ManifoldPoint& pt,
                                     const CoverComplex& zeta);

}  // namespace toda
