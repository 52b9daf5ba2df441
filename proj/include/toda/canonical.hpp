#pragma once

#include <vector>

#include "toda/manifold.hpp"

namespace toda {

// Critical points of lambda outside the unit disc and of lambdabar inside,
// with critical values and second derivatives (degeneracy margins).
struct CriticalSet {
    struct Root {
        cplx z;        // critical point location
        cplx u;        // critical value (-lambda(z_i) resp. lambdabar(zbar_j))
        cplx second;   // lambda''(z_i) resp. lambdabar''(zbar_j)
    };
    std::vector<Root> outer;  // |z| > 1, roots of lambda'
    std::vector<Root> inner;  // |z| < 1, roots of lambdabar'
};

// A cotangent element stored by its coefficients on the test basis
// e_m = (z^m,0,0), e_v = (0,1,0), e_u = (0,0,1).
struct WeakFunctional {
    int N = 0;
    Vec cm;        // coefficients on e_m, m in [-N, N]
    cplx cv = 0.0; // coefficient on e_v
    cplx cu = 0.0; // coefficient on e_u

    WeakFunctional() = default;
    explicit WeakFunctional(int n) : N(n), cm(Vec::Zero(2 * n + 1)) {}

    cplx coeff(int m) const { return (m < -N || m > N) ? cplx(0.0) : cm(m + N); }
    void set_coeff(int m, cplx v) { cm(m + N) = v; }

    cplx eval(const TangentTriple& X) const {
        cplx acc = X.Xv * cv + X.Xu * cu;
        int K = std::min(N, X.W.order());
        for (int m = -K; m <= K; ++m) acc += X.W.coeff(m) * coeff(m);
        return acc;
    }

    double max_abs() const {
        return std::max({cm.cwiseAbs().maxCoeff(), std::abs(cv), std::abs(cu)});
    }

    WeakFunctional& operator+=(const WeakFunctional& o) {
        cm += o.cm; cv += o.cv; cu += o.cu;
        return *this;
    }
    WeakFunctional& operator*=(cplx s) {
        cm *= s; cv *= s; cu *= s;
        return *this;
    }
};

// Roots of a Laurent-polynomial derivative via the companion matrix of the
// associated polynomial, Newton-polished.
struct RootFindOptions {
    double newton_tol = 1e-13;
    double boundary_band = 1e-8;   // |1 - |z|| below this raises BoundaryRoot
    double degeneracy_floor = 1e-6;
    double coeff_trim = 1e-13;     // relative trim for leading/trailing zeros
};

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

// sigma(z) = lambda'/(lambda'+lambdabar') re-expanded on the grid.
LaurentSeries sigma_curve(const ManifoldPoint& pt);

// u_p = lambda_{sigma(p)}(p) for |p| = 1.
cplx canonical_value(const ManifoldPoint& pt, cplx p);

// lambda_sigma = sigma*lambdabar + (sigma-1)*lambda for a fixed scalar sigma.
LaurentSeries lambda_sigma(const ManifoldPoint& pt, cplx sigma);

// <d lambda_sigma(z), X> as a series in z:
//   (sigma-1) W(z) + W_{>=1}(z) + X_v + (e^u/z) X_u.
LaurentSeries dlambda_sigma_series(const ManifoldPoint& pt, cplx sigma,
                                   const TangentTriple& X);

CriticalSet find_critical_set(const ManifoldPoint& pt,
                              RootFindOptions opt = RootFindOptions{});

// Coincidences among the canonical values: the minimum pairwise separation of
// the discrete values and the minimum distance of each discrete value from
// the continuous family u_p sampled on the grid. Higher-order eigenspaces are
// reported, never constructed.
struct CoincidenceReport {
    double min_discrete_gap = std::numeric_limits<double>::infinity();
    double min_curve_distance = std::numeric_limits<double>::infinity();
    bool coincident(double tol = 1e-8) const {
        return min_discrete_gap < tol || min_curve_distance < tol;
    }
};
CoincidenceReport canonical_coincidences(const ManifoldPoint& pt,
                                         const CriticalSet& crit);

// <du_p, X> = (sigma(p)-1) W(p) + W_{>=1}(p) + X_v + (e^u/p) X_u.
cplx du_p_eval(const ManifoldPoint& pt, cplx p, const TangentTriple& X);

// du_p as a weak functional on the test basis.
WeakFunctional du_p_functional(const ManifoldPoint& pt, cplx p);

// <du_i, X> = -X_pair(z_i) and <dubar_j, X> = Xbar_pair(zbar_j).
cplx du_i_eval(const ManifoldPoint& pt, cplx z_i, const TangentTriple& X);
cplx dubar_j_eval(const ManifoldPoint& pt, cplx zbar_j, const TangentTriple& X);

// Tangent representatives (z w'(z) zc/(z - zc), e^u/zc, 1).
TangentTriple du_discrete_representative(const ManifoldPoint& pt, cplx zc);

// Psi-image of a tangent vector: continuous slot sampled on the M-grid plus
// the discrete slots.
struct PsiData {
    Vec cont;   // <du_p, X> at the M quadrature nodes
    Vec outer;  // <du_i, X>
    Vec inner;  // <dubar_j, X>
};

PsiData psi_forward(const ManifoldPoint& pt, const CriticalSet& crit,
                    const TangentTriple& X);
TangentTriple psi_inverse(const ManifoldPoint& pt, const CriticalSet& crit,
                          const PsiData& Y);

// Canonical values at the quadrature nodes (the diagonal of U in Psi-coordinates).
Vec canonical_values_grid(const ManifoldPoint& pt);

// Diagonal form of the metric in Psi-coordinates.
cplx metric_canonical(const ManifoldPoint& pt, const CriticalSet& crit,
                      const PsiData& X, const PsiData& Y);

// E(z) of the key lemma minus its predicted value z lambda_sigma'(z) [( (1 -
// w/(z w')) X )_0 - X_v]; returns the residual series, which should vanish.
LaurentSeries key_lemma_residual(const ManifoldPoint& pt, cplx sigma,
                                 const TangentTriple& X);

}  // namespace toda
