#pragma once

#include <functional>

#include "toda/canonical.hpp"
#include "toda/cover.hpp"

namespace toda {

// A zeta-parametrized weak functional, evaluated against test vectors.
using ZetaFunctional = std::function<cplx(const CoverComplex&, const TangentTriple&)>;

struct ResidualResult {
    cplx residual;   // d/dzeta <xi,X> - <xi,(U - V/zeta)X>
    double scale;    // magnitude the residual is measured against
    double fd_disagreement;  // |D(h) - D(h/2)| of the difference quotients
};

// Dubrovin-equation residual with Richardson-extrapolated central differences
// in zeta (steps h and h/2). Throws StepTooLarge when the two difference
// quotients disagree by more than 10x the requested tolerance scale.
ResidualResult dubrovin_residual(const ManifoldPoint& pt, const ZetaFunctional& xi,
                                 const CoverComplex& zeta, const TangentTriple& X,
                                 double h = 0.0, double tol = 1e-6);

// The left-inverse A_p of (u_p - U) with A_p(0,1,0) = 0, explicit at the
// special point.
TangentTriple apply_Ap(const ManifoldPoint& pt, cplx p, const TangentTriple& X);

// Formal solution e^{zeta u} sum_k r^k zeta^{-k} of the Dubrovin equation.
struct FormalDubrovinSolution {
    cplx u_value;
    std::vector<WeakFunctional> terms;       // r^0 .. r^K
    std::vector<cplx> a;                     // a^0 = 1, a^1 .. a^K
    std::vector<TangentTriple> representatives;  // discrete family only
};

// Continuous family at the special point: r^0 = du_p,
// <r^{k+1}, X> = <r^k, (k - V) A_p X> + a^{k+1} <du_p, X>.
FormalDubrovinSolution formal_continuous(const ManifoldPoint& pt, cplx p, int K,
                                         const std::vector<cplx>& constants);

// The choice of a^k that reproduces the asymptotics of the integral solutions:
// a^k = sqrt(pi) * [zeta^{-k}] phi_p^0.
std::vector<cplx> bessel_matched_constants(const ManifoldPoint& pt, cplx p, int K);

enum class DiscreteFamily { Outer, Inner };

// Discrete family at an arbitrary point, via the Psi-conjugated recursion
// (u_i - U) Y^{k+1} = (k + V) Y^k with the kernel constants fixed by the
// solvability condition of the next step.
FormalDubrovinSolution formal_discrete(const ManifoldPoint& pt,
                                       const CriticalSet& crit,
                                       DiscreteFamily family, int index, int K);

// max_batch |<r^{k+1}, (u - U)X> - <r^k, (k - V)X>| / scale for each k.
std::vector<double> recursion_residuals(const ManifoldPoint& pt,
                                        const FormalDubrovinSolution& sol,
                                        const std::vector<TangentTriple>& batch);

}  // namespace toda
