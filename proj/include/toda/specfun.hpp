#pragma once

#include <vector>

#include "toda/core.hpp"
#include "toda/cover.hpp"

namespace toda {

// Euler-Mascheroni constant computed from its defining limit with
// Euler-Maclaurin acceleration.
double euler_gamma();

// Digamma for complex argument, by the series psi(z) = -gamma + sum(1/k -
// 1/(k+z-1)) with Euler-Maclaurin tail, after shifting Re z up by recurrence.
cplx digamma(cplx z);

// Gamma(n + 1/2) and 1/Gamma(1/2 - k) for integer n, k >= 0.
double gamma_half_plus(int n);
double inv_gamma_half_minus(int k);

// binom(a, n) for real a, integer n >= 0, evaluated as an interleaved product.
double generalized_binomial(double a, int n);

// Modified Bessel function of the first kind, integer order, entire.
// Power series for |z| <= 30, asymptotics beyond (via two K-evaluations, so
// the behaviour near the imaginary axis is kept).
cplx bessel_I(int n, cplx z);

// Modified Bessel function of the second kind on the universal cover of C*.
// Principal window by the z~0 logarithmic expansion for |z| < max(20, 2max(1,n))
// and by the large-z asymptotic series beyond; other sheets by the monodromy
// relation K_n(z e^{2 pi i k}) = K_n(z) - k (-1)^n 2 pi i I_n(z).
cplx bessel_K(int n, const CoverComplex& z);

// Both regimes evaluated in the overlap band, with a roundoff model for the
// cancellation the logarithmic expansion suffers at large Re z. Throws
// OverlapMismatch when the disagreement exceeds the modeled allowance.
struct KOverlapReport {
    cplx log_expansion;
    cplx asymptotic;
    double disagreement;
    double allowance;
};
KOverlapReport bessel_K_overlap_check(int n, const CoverComplex& z,
                                      double hard_floor = 1e-9);

// Gauss hypergeometric 2F1.
cplx gauss_2F1(cplx a, cplx b, cplx c, cplx z);               // series, |z| < 1
cplx gauss_2F1_connection(cplx a, cplx b, cplx z);            // c = a+b, |1-z| < 1
cplx gauss_2F1_auto(cplx a, cplx b, cplx c, cplx z);          // dispatch on region

// Evaluator for the Borel-transform family F_m(s) = 2F1(1/2-m, 1/2+m; 1; s)
// on the principal sheet (cut [1, +inf)), anywhere in the plane. Series and
// connection formulas where they converge, hypergeometric-ODE continuation
// elsewhere. Also returns dF/ds.
struct Hyp2F1Value {
    cplx F;
    cplx dF;
};
Hyp2F1Value hyp2f1_borel(int m, cplx s);

// Caching evaluator for repeated calls along one ray s = t*dir, t >= 0.
class RayBorel2F1 {
  public:
    RayBorel2F1(int m, cplx dir);
    Hyp2F1Value eval(double t);

  private:
    int m_;
    cplx dir_;
    std::vector<std::pair<double, Hyp2F1Value>> cache_;  // ascending in t
};

struct IdentityCheck {
    std::string name;
    std::string identity;
    double measured;
    double tolerance;
    bool pass;
};

// Rising-factorial identity (exact, 128-bit integers), the binomial-sum vs
// 2F1-Taylor coefficient identity, and the Laplace-transform identity checked
// by quadrature against the Bessel side.
std::vector<IdentityCheck> identity_suite();

}  // namespace toda
