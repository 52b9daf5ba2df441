#include "toda/canonical.hpp"

#include <Eigen/Eigenvalues>

namespace toda {

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    // coeffs[k] multiplies z^k. Trim negligible leading/trailing entries, then
    // take companion-matrix eigenvalues. Trailing zeros are roots at z = 0.
    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {};
    int lo = 0, hi = static_cast<int>(coeffs.size()) - 1;
    while (hi > 0 && std::abs(coeffs[hi]) < 1e-13 * scale) --hi;
    while (lo < hi && std::abs(coeffs[lo]) < 1e-13 * scale) ++lo;
    int deg = hi - lo;
    if (deg <= 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[lo + i] / coeffs[hi];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    std::vector<cplx> roots(es.eigenvalues().data(),
                            es.eigenvalues().data() + deg);
    return roots;  // roots of sum coeffs[lo+i] z^i; z=0 factors dropped by lo-trim
}

LaurentSeries sigma_curve(const ManifoldPoint& pt) { return pt.sigma(); }

LaurentSeries lambda_sigma(const ManifoldPoint& pt, cplx sigma) {
    return sigma * pt.lambdabar() + (sigma - 1.0) * pt.lambda();
}

cplx canonical_value(const ManifoldPoint& pt, cplx p) {
    cplx s = pt.sigma().eval(p);
    return s * pt.lambdabar().eval(p) + (s - 1.0) * pt.lambda().eval(p);
}

LaurentSeries dlambda_sigma_series(const ManifoldPoint& pt, cplx sigma,
                                   const TangentTriple& X) {
    LaurentSeries out = (sigma - 1.0) * X.W + X.W.project_geq(1);
    out.add_coeff(0, X.Xv);
    out.add_coeff(-1, pt.eu() * X.Xu);
    return out;
}

namespace {

// Derivative of a stored series as exact coefficients (k from -N-1 to N-1),
// returned as the polynomial z^{N+1} f'(z) so the full window survives.
std::vector<cplx> shifted_derivative_poly(const LaurentSeries& f) {
    const int N = f.order();
    std::vector<cplx> poly(2 * N + 1, cplx(0.0));
    // f' has coefficient k*c_k at power k-1; shift by N+1: index k-1+N+1 = k+N.
    for (int k = -N; k <= N; ++k) poly[k + N] = double(k) * f.coeff(k);
    return poly;
}

cplx ipow_at(cplx z, int n) {
    if (n == 0) return 1.0;
    if (n < 0) return 1.0 / ipow_at(z, -n);
    cplx r = 1.0;
    while (n--) r *= z;
    return r;
}

cplx eval_poly_family(const LaurentSeries& f, cplx z, int deriv) {
    // Exact derivative evaluation for a Laurent polynomial at z != 0.
    cplx acc = 0.0;
    const int N = f.order();
    for (int k = -N; k <= N; ++k) {
        cplx c = f.coeff(k);
        if (c == cplx(0.0)) continue;
        double fac = 1.0;
        for (int j = 0; j < deriv; ++j) fac *= double(k - j);
        if (fac == 0.0) continue;
        acc += c * fac * ipow_at(z, k - deriv);
    }
    return acc;
}

void collect_roots(const LaurentSeries& f, bool outer, bool negate_value,
                   const RootFindOptions& opt,
                   std::vector<CriticalSet::Root>& out) {
    std::vector<cplx> poly = shifted_derivative_poly(f);
    std::vector<cplx> roots = polynomial_roots(poly);
    for (cplx z : roots) {
        if (std::abs(z) < 1e-12) continue;  // artifact of the z^{N+1} shift
        // Newton polish on f'.
        for (int it = 0; it < 60; ++it) {
            cplx val = eval_poly_family(f, z, 1);
            cplx der = eval_poly_family(f, z, 2);
            if (std::abs(der) == 0.0) break;
            cplx step = val / der;
            z -= step;
            if (std::abs(step) < opt.newton_tol * (1.0 + std::abs(z))) break;
        }
        cplx residual = eval_poly_family(f, z, 1);
        if (std::abs(residual) > 1e-10 * (1.0 + std::abs(z)))
            continue;  // spurious companion eigenvalue, Newton did not converge
        double r = std::abs(z);
        if (std::abs(r - 1.0) < opt.boundary_band)
            throw Error(ErrorKind::BoundaryRoot,
                        "critical point within 1e-8 of |z|=1");
        bool wanted = outer ? (r > 1.0) : (r < 1.0);
        if (!wanted) continue;
        cplx second = eval_poly_family(f, z, 2);
        if (std::abs(second) < opt.degeneracy_floor)
            throw Error(ErrorKind::DegenerateCritical,
                        "second derivative below floor at a critical point");
        cplx value = f.eval(z);
        out.push_back({z, negate_value ? -value : value, second});
    }
}

}  // namespace

CriticalSet find_critical_set(const ManifoldPoint& pt, RootFindOptions opt) {
    CriticalSet cs;
    collect_roots(pt.lambda(), /*outer=*/true, /*negate_value=*/true, opt,
                  cs.outer);
    collect_roots(pt.lambdabar(), /*outer=*/false, /*negate_value=*/false, opt,
                  cs.inner);
    // Deduplicate eigenvalue near-copies (companion matrices can emit pairs
    // that Newton merges).
    auto dedup = [](std::vector<CriticalSet::Root>& v) {
        std::vector<CriticalSet::Root> keep;
        for (const auto& r : v) {
            bool dup = false;
            for (const auto& k : keep)
                if (std::abs(r.z - k.z) < 1e-9 * (1.0 + std::abs(r.z))) dup = true;
            if (!dup) keep.push_back(r);
        }
        v = keep;
    };
    dedup(cs.outer);
    dedup(cs.inner);
    // Stable ordering for reproducibility.
    auto by_arg = [](const CriticalSet::Root& a, const CriticalSet::Root& b) {
        double aa = std::arg(a.z), bb = std::arg(b.z);
        return aa != bb ? aa < bb : std::abs(a.z) < std::abs(b.z);
    };
    std::sort(cs.outer.begin(), cs.outer.end(), by_arg);
    std::sort(cs.inner.begin(), cs.inner.end(), by_arg);
    return cs;
}

CoincidenceReport canonical_coincidences(const ManifoldPoint& pt,
                                         const CriticalSet& crit) {
    CoincidenceReport r;
    std::vector<cplx> discrete;
    for (const auto& root : crit.outer) discrete.push_back(root.u);
    for (const auto& root : crit.inner) discrete.push_back(root.u);
    for (size_t i = 0; i < discrete.size(); ++i)
        for (size_t j = i + 1; j < discrete.size(); ++j)
            r.min_discrete_gap =
                std::min(r.min_discrete_gap, std::abs(discrete[i] - discrete[j]));
    Vec up = canonical_values_grid(pt);
    for (const auto& u : discrete)
        for (int j = 0; j < up.size(); ++j)
            r.min_curve_distance = std::min(r.min_curve_distance,
                                            std::abs(u - up(j)));
    return r;
}

cplx du_p_eval(const ManifoldPoint& pt, cplx p, const TangentTriple& X) {
    cplx s = pt.sigma().eval(p);
    return (s - 1.0) * X.W.eval(p) + X.W.project_geq(1).eval(p) + X.Xv +
           pt.eu() / p * X.Xu;
}

WeakFunctional du_p_functional(const ManifoldPoint& pt, cplx p) {
    const int N = pt.params().N;
    WeakFunctional f(N);
    cplx s = pt.sigma().eval(p);
    cplx pw = std::pow(p, -N);
    for (int m = -N; m <= N; ++m) {
        cplx c = (s - 1.0) * pw;
        if (m >= 1) c += pw;
        f.set_coeff(m, c);
        pw *= p;
    }
    f.cv = 1.0;
    f.cu = pt.eu() / p;
    return f;
}

cplx du_i_eval(const ManifoldPoint& pt, cplx z_i, const TangentTriple& X) {
    TangentPair pr = pt.triple_to_pair(X);
    return -pr.X.eval(z_i);
}

cplx dubar_j_eval(const ManifoldPoint& pt, cplx zbar_j, const TangentTriple& X) {
    TangentPair pr = pt.triple_to_pair(X);
    return pr.Xbar.eval(zbar_j);
}

TangentTriple du_discrete_representative(const ManifoldPoint& pt, cplx zc) {
    const int N = pt.params().N;
    const TruncationParams& par = pt.params();
    // zc/(z - zc) expanded on the correct side of the unit circle.
    LaurentSeries kernel(N);
    if (std::abs(zc) > 1.0) {
        // zc/(z-zc) = -sum_{k>=0} (z/zc)^k
        cplx c = -1.0;
        for (int k = 0; k <= N; ++k) {
            kernel.set_coeff(k, c);
            c /= zc;
        }
    } else {
        // zc/(z-zc) = sum_{k>=1} zc^k z^{-k}
        cplx c = zc;
        for (int k = 1; k <= N; ++k) {
            kernel.set_coeff(-k, c);
            c *= zc;
        }
    }
    LaurentSeries W = mul(pt.zwprime(), kernel, par.spill_threshold);
    return {std::move(W), pt.eu() / zc, 1.0};
}

Vec canonical_values_grid(const ManifoldPoint& pt) {
    const int M = pt.params().M;
    Vec sig = pt.sigma().grid_values(M);
    Vec lam = pt.lambda().grid_values(M);
    Vec lbar = pt.lambdabar().grid_values(M);
    Vec out(M);
    for (int j = 0; j < M; ++j)
        out(j) = sig(j) * lbar(j) + (sig(j) - 1.0) * lam(j);
    return out;
}

PsiData psi_forward(const ManifoldPoint& pt, const CriticalSet& crit,
                    const TangentTriple& X) {
    const int M = pt.params().M;
    const Vec& z = unit_roots(M);
    PsiData out;
    out.cont.resize(M);
    Vec sig = pt.sigma().grid_values(M);
    Vec wg = X.W.grid_values(M);
    Vec wg1 = X.W.project_geq(1).grid_values(M);
    for (int j = 0; j < M; ++j) {
        out.cont(j) = (sig(j) - 1.0) * wg(j) + wg1(j) + X.Xv + pt.eu() / z(j) * X.Xu;
    }
    out.outer.resize(crit.outer.size());
    out.inner.resize(crit.inner.size());
    TangentPair pr = pt.triple_to_pair(X);
    for (size_t i = 0; i < crit.outer.size(); ++i)
        out.outer(i) = -pr.X.eval(crit.outer[i].z);
    for (size_t j = 0; j < crit.inner.size(); ++j)
        out.inner(j) = pr.Xbar.eval(crit.inner[j].z);
    return out;
}

TangentTriple psi_inverse(const ManifoldPoint& pt, const CriticalSet& crit,
                          const PsiData& Y) {
    const TruncationParams& par = pt.params();
    const int M = par.M;
    const Vec& z = unit_roots(M);
    Vec lp = pt.lambdaprime().grid_values(M);
    Vec lbp = pt.lambdabarprime().grid_values(M);
    Vec wp = pt.wprime().grid_values(M);

    // G = (lambda' + lambdabar')/(lambda' lambdabar') * Y on the grid.
    Vec G(M);
    for (int j = 0; j < M; ++j) G(j) = wp(j) / (lp(j) * lbp(j)) * Y.cont(j);
    LaurentSeries Gs = LaurentSeries::from_grid(G, par.N, par.spill_threshold);
    Vec Ggeq1 = Gs.project_geq(1).grid_values(M);
    Vec Gleq0 = Gs.project_leq(0).grid_values(M);

    // mu from the discrete data.
    Vec mu = Vec::Zero(M);
    for (size_t i = 0; i < crit.outer.size(); ++i) {
        const auto& r = crit.outer[i];
        cplx w = Y.outer(i) / (r.z * r.second);
        for (int j = 0; j < M; ++j) mu(j) += w * z(j) / (r.z - z(j));
    }
    for (size_t i = 0; i < crit.inner.size(); ++i) {
        const auto& r = crit.inner[i];
        cplx w = Y.inner(i) / (r.z * r.second);
        for (int j = 0; j < M; ++j) mu(j) -= w * z(j) / (r.z - z(j));
    }

    Vec Xbar(M), X(M);
    for (int j = 0; j < M; ++j) {
        Xbar(j) = lbp(j) * (mu(j) + Ggeq1(j));
        X(j) = -lp(j) * (-mu(j) + Gleq0(j));
    }
    TangentPair pr;
    pr.X = LaurentSeries::from_grid(X, par.N, par.spill_threshold);
    pr.Xbar = LaurentSeries::from_grid(Xbar, par.N, par.spill_threshold);
    return pt.pair_to_triple(pr);
}

cplx metric_canonical(const ManifoldPoint& pt, const CriticalSet& crit,
                      const PsiData& X, const PsiData& Y) {
    const int M = pt.params().M;
    const Vec& z = unit_roots(M);
    Vec lp = pt.lambdaprime().grid_values(M);
    Vec lbp = pt.lambdabarprime().grid_values(M);
    Vec wp = pt.wprime().grid_values(M);
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j)
        acc += wp(j) / (lp(j) * lbp(j)) * X.cont(j) * Y.cont(j) / z(j);
    acc = -acc / double(M);
    for (size_t i = 0; i < crit.outer.size(); ++i) {
        const auto& r = crit.outer[i];
        acc -= X.outer(i) * Y.outer(i) / (r.z * r.z * r.second);
    }
    for (size_t j = 0; j < crit.inner.size(); ++j) {
        const auto& r = crit.inner[j];
        acc += X.inner(j) * Y.inner(j) / (r.z * r.z * r.second);
    }
    return acc;
}

LaurentSeries key_lemma_residual(const ManifoldPoint& pt, cplx sigma,
                                 const TangentTriple& X) {
    const TruncationParams& par = pt.params();
    const double th = par.spill_threshold;
    LaurentSeries ls = lambda_sigma(pt, sigma);
    LaurentSeries zlsp = ls.z_derivative();

    TangentTriple UX = pt.apply_U(X);
    LaurentSeries term1 = dlambda_sigma_series(pt, sigma, UX);
    LaurentSeries term2 = mul(ls, dlambda_sigma_series(pt, sigma, X), th);

    // (w/(z w')) X as the first slot of an auxiliary triple.
    LaurentSeries S = pt.is_special()
                          ? X.W
                          : div_grid(mul(X.W, pt.w(), th), pt.zwprime(), par);
    TangentTriple aux{S, 0.0, -X.Xu};
    LaurentSeries term3 = mul(zlsp, dlambda_sigma_series(pt, sigma, aux), th);

    // Predicted scalar multiple.
    LaurentSeries one_minus = LaurentSeries::constant(par.N, 1.0);
    LaurentSeries wz = pt.is_special()
                           ? LaurentSeries::constant(par.N, 1.0)
                           : div_grid(pt.w(), pt.zwprime(), par);
    cplx c0 = mul(one_minus - wz, X.W, th).coeff(0) - X.Xv;

    LaurentSeries E = term1 - term2 + term3 - c0 * zlsp;
    return E;
}

}  // namespace toda
