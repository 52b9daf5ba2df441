#pragma once

#include "toda/dubrovin.hpp"
#include "toda/integral.hpp"
#include "toda/specfun.hpp"

namespace toda {

// Finite window of a Gevrey-1 formal series sum a_k zeta^{-k}.
struct GevreySeries {
    std::vector<cplx> coeffs;
    double growth_certificate = 0.0;  // smallest C with |a_k| <= C^k k! on the window
};

// phi_p^m: a_k = 1/Gamma(1/2-k) binom(m+k-1/2, 2k) (p/e^u)^k.
GevreySeries phi_series(const ManifoldPoint& pt, cplx p, int m, int K);

// Borel transform coefficients b_k = a_k / k!.
std::vector<cplx> borel_coeffs(const GevreySeries& s);

// Closed form of the Borel sum: (1/sqrt(pi)) 2F1(1/2-m, 1/2+m; 1; p chi/(4 e^u)),
// analytically continued on the principal sheet.
cplx borel_closed_form(const ManifoldPoint& pt, cplx p, int m, cplx chi);

// Root-test estimate of the radius of convergence of the Borel series.
double borel_radius_estimate(const GevreySeries& s);

// Laplace resummation along the ray e^{i theta} R_+. The zeta argument must
// lie in the half-plane Pi_theta; theta must avoid the Stokes direction
// theta_St = arg e^u - arg p.
cplx laplace_ray(const ManifoldPoint& pt, const CoverComplex& p, int m,
                 double theta, const CoverComplex& zeta, double tol = 1e-10);

// (1/pi) q^{1/2} omega^{-1/2} e^{q/2 omega} K_m(q/2 omega) with q = e^{i theta} zeta,
// omega = -e^{i theta} p/(4 e^u); all multivalued factors on the cover. theta
// only selects the side of the Stokes ray the continuation comes from.
cplx resummed_closed_form(const ManifoldPoint& pt, const CoverComplex& p, int m,
                          double theta, const CoverComplex& zeta);

// The resummed weak functionals ds_p(zeta) at the special point, |e^u| < 1.
// The K-argument is lifted with arg = pi + arg zeta + Im u - arg p, which is
// the continuation from theta just above the Stokes direction; this is the
// lift under which ds_p has the formal asymptotics on |arg zeta + theta_0| < 3pi/2.
struct ResummedFunctional {
    CoverComplex p;
    CoverComplex zeta;
    WeakFunctional coeffs;  // window m in [-m_max, m_max] plus e_v, e_u slots
    // Witness that this is only a weak functional: the coefficient growth in m
    // follows the K_m large-order law, so the window is a representation
    // choice, never a convergent tail.
    double growth_log_slope = 0.0;
    bool weak_growth = false;
};

// Single coefficient <ds_p(zeta), e_mhat>; mhat = m for e_m, and the two slot
// helpers below.
cplx ds_coeff(const ManifoldPoint& pt, const CoverComplex& p,
              const CoverComplex& zeta, int m);
cplx ds_coeff_v(const ManifoldPoint& pt, const CoverComplex& p,
                const CoverComplex& zeta);
cplx ds_coeff_u(const ManifoldPoint& pt, const CoverComplex& p,
                const CoverComplex& zeta);

ResummedFunctional ds_p(const ManifoldPoint& pt, const CoverComplex& p,
                        const CoverComplex& zeta, int m_max = 12);

// <ds_p(zeta), X> for a Laurent-polynomial test vector (exact finite sum).
cplx ds_eval(const ManifoldPoint& pt, const CoverComplex& p,
             const CoverComplex& zeta, const TangentTriple& X);

// Quadrature regression guard: the Borel sum of a truncated geometric series
// sum_{k<=K} c^k zeta^{-k} reproduces the partial sum exactly; returns the
// difference between the ray quadrature and the partial sum.
cplx borel_laplace_toy_error(cplx c, int K, double theta,
                             const CoverComplex& zeta);

struct CompletenessReport {
    int rank = 0;
    int expected = 0;
    Eigen::VectorXd singular_values;
};

// Rank of the P x (2 m_max + 3) coefficient matrix [ <ds_{p_j}, e_mhat> ].
CompletenessReport completeness_probe(const ManifoldPoint& pt,
                                      const CoverComplex& zeta, int P, int m_max,
                                      double phi0 = 0.0);

// Reconstruction of a Laurent-polynomial tangent vector from samples of
// <ds_p, X> over one period of arg p, by the extraction order of the
// completeness proof: top even powers of p first, then the log-coefficients.
TangentTriple reconstruct_from_ds(const ManifoldPoint& pt,
                                  const CoverComplex& zeta,
                                  const TangentTriple& X_truth_shape, int P,
                                  double phi0 = 0.0);

struct StokesPairResult {
    Eigen::Matrix2cd S_plus;
    Eigen::Matrix2cd S_minus;
    double max_entry_spread;     // max deviation across the per-m 2x2 solves
    bool dominance_separated;    // Stokes line separates dominance as stated
};

StokesPairResult stokes_pair(const ManifoldPoint& pt, const CoverComplex& p,
                             double theta, double zeta_abs = 5.0,
                             double epsilon = 0.1,
                             const std::vector<int>& ms = {0, 1, 2, 3});

struct StokesFamilyResult {
    struct KernelEntry {
        int p_index;
        int q_index;
        double weight;
    };
    double max_plus_deviation = 0.0;
    double max_minus_deviation = 0.0;
    std::vector<KernelEntry> kernel_plus;
    std::vector<KernelEntry> kernel_minus;
    bool transpose_consistent = false;
    std::vector<double> grid_args;
};

StokesFamilyResult stokes_family(const ManifoldPoint& pt, double theta, int P,
                                 double zeta_abs = 5.0, double epsilon = 0.1,
                                 int m_max = 4);

}  // namespace toda
