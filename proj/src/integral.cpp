#include "toda/integral.hpp"

#include "toda/specfun.hpp"

namespace toda {

namespace {

cplx quad_dy(const ManifoldPoint& pt, cplx sigma, const CoverComplex& zeta,
             const TangentTriple* X, int M) {
    // (1/2 pi i) \oint f dz/z = (1/M) sum f(z_j); the X = nullptr variant is
    // the y_sigma integrand.
    const Vec& z = unit_roots(M);
    LaurentSeries ls = lambda_sigma(pt, sigma);
    cplx zval = zeta.value();
    cplx acc = 0.0;
    if (X) {
        LaurentSeries dls = dlambda_sigma_series(pt, sigma, *X);
        for (int j = 0; j < M; ++j)
            acc += std::exp(zval * ls.eval(z(j))) * dls.eval(z(j));
    } else {
        for (int j = 0; j < M; ++j) acc += std::exp(zval * ls.eval(z(j)));
    }
    return acc / double(M);
}

}  // namespace

cplx y_sigma(const ManifoldPoint& pt, cplx sigma, const CoverComplex& zeta,
             int M_override) {
    int M = M_override > 0 ? M_override : pt.params().M;
    return zeta.pow(-0.5) * quad_dy(pt, sigma, zeta, nullptr, M);
}

cplx dy_sigma(const ManifoldPoint& pt, cplx sigma, const CoverComplex& zeta,
              const TangentTriple& X, bool check_convergence, int M_override) {
    int M = M_override > 0 ? M_override : pt.params().M;
    cplx v1 = quad_dy(pt, sigma, zeta, &X, M);
    if (check_convergence) {
        cplx v2 = quad_dy(pt, sigma, zeta, &X, 2 * M);
        if (std::abs(v1 - v2) > 1e-10 * (1.0 + std::abs(v2)))
            throw Error(ErrorKind::QuadratureNotConverged,
                        "doubling the node count moved dy_sigma by " +
                            std::to_string(std::abs(v1 - v2)));
        v1 = v2;
    }
    return zeta.pow(0.5) * v1;
}

TangentTriple dy_representative(const ManifoldPoint& pt, cplx sigma,
                                const CoverComplex& zeta) {
    const TruncationParams& par = pt.params();
    const int M = par.M;
    const Vec& z = unit_roots(M);
    LaurentSeries ls = lambda_sigma(pt, sigma);
    cplx zval = zeta.value();

    Vec expv(M);
    for (int j = 0; j < M; ++j) expv(j) = std::exp(zval * ls.eval(z(j)));
    LaurentSeries expser = LaurentSeries::from_grid(expv, par.N, par.spill_threshold);

    LaurentSeries W = sigma * mul(pt.zwprime(), expser, par.spill_threshold) -
                      mul(pt.zwprime(), expser.project_geq(0), par.spill_threshold);
    cplx vslot = 0.0, uslot = 0.0;
    for (int j = 0; j < M; ++j) {
        vslot += expv(j) * pt.eu() / z(j);
        uslot += expv(j);
    }
    vslot /= double(M);
    uslot /= double(M);
    cplx root = zeta.pow(0.5);
    return {root * W, root * vslot, root * uslot};
}

namespace {

cplx ipow_at(cplx z, int n) {
    if (n == 0) return 1.0;
    if (n < 0) return 1.0 / ipow_at(z, -n);
    cplx r = 1.0;
    while (n--) r *= z;
    return r;
}

// Shared engine: residue of g(z) (1+h)^{-(n+1/2)} delta^{-(2n+1)} around z0,
// with f - f(z0) = c delta^2 (1+h(delta)) inverted as a local power series.
// The Taylor data is exact (f and g are stored Laurent polynomials), so the
// extraction carries no contour roundoff; only the principal power of c and
// the (1+h)^alpha binomial recurrence choose branches.
struct SaddleFrame {
    cplx c;
    std::vector<cplx> h;  // h[j], j >= 1; h[0] = 0
    std::vector<cplx> g;  // Taylor coefficients of g at z0
};

cplx taylor_at(const LaurentSeries& s, cplx z, int order) {
    // s^{(order)}(z) / order!
    cplx acc = 0.0;
    for (int k = -s.order(); k <= s.order(); ++k) {
        cplx ck = s.coeff(k);
        if (ck == cplx(0.0)) continue;
        double fac = 1.0;
        for (int j = 0; j < order; ++j) fac *= double(k - j) / double(j + 1);
        if (fac == 0.0) continue;
        acc += ck * fac * ipow_at(z, k - order);
    }
    return acc;
}

SaddleFrame make_frame(const LaurentSeries& f, const LaurentSeries& g, cplx z0,
                       int n_max, double degeneracy_floor = 1e-8) {
    const int L = 2 * n_max + 1;
    SaddleFrame fr;
    fr.c = taylor_at(f, z0, 2);
    double fscale = std::max({std::abs(taylor_at(f, z0, 1)), std::abs(fr.c), 1.0});
    if (std::abs(fr.c) < degeneracy_floor * fscale)
        throw Error(ErrorKind::DegenerateSaddle, "f''(z0) below floor");
    fr.h.assign(std::max(L, 1), 0.0);
    fr.g.assign(std::max(L, 1), 0.0);
    for (int j = 1; j < L; ++j) fr.h[j] = taylor_at(f, z0, j + 2) / fr.c;
    for (int j = 0; j < L; ++j) fr.g[j] = taylor_at(g, z0, j);
    return fr;
}

cplx frame_residue(const SaddleFrame& fr, int n) {
    // [delta^{2n}] g(z0+delta) (1+h)^{-(n+1/2)} via the binomial ODE
    // recurrence (1+h) P' = alpha h' P for P = (1+h)^alpha.
    const int L = 2 * n + 1;
    const double alpha = -(n + 0.5);
    std::vector<cplx> P(L, 0.0);
    P[0] = 1.0;
    for (int k = 1; k < L; ++k) {
        cplx acc = 0.0;
        for (int j = 1; j <= k; ++j)
            acc += (alpha * double(j) - double(k - j)) * fr.h[j] * P[k - j];
        P[k] = acc / double(k);
    }
    cplx res = 0.0;
    for (int i = 0; i < L; ++i) res += fr.g[i] * P[L - 1 - i];
    return res;
}

}  // namespace

std::vector<cplx> saddle_coeffs(const LaurentSeries& f, const LaurentSeries& g,
                                cplx z0, int n_max) {
    SaddleFrame fr = make_frame(f, g, z0, n_max);
    std::vector<cplx> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        cplx res = frame_residue(fr, n);
        double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        out[n] = sgn * gamma_half_plus(n) * std::pow(fr.c, -(n + 0.5)) * res;
    }
    return out;
}

std::vector<cplx> asymptotic_coeffs_residue(const ManifoldPoint& pt,
                                            AsymptoticFamily family,
                                            cplx critical_point, int k_max,
                                            const TangentTriple& X) {
    cplx sigma;
    switch (family) {
        case AsymptoticFamily::SigmaOnCircle:
            sigma = pt.sigma().eval(critical_point);
            break;
        case AsymptoticFamily::SigmaZero: sigma = 0.0; break;
        case AsymptoticFamily::SigmaOne: sigma = 1.0; break;
    }
    LaurentSeries ls = lambda_sigma(pt, sigma);
    LaurentSeries dls = dlambda_sigma_series(pt, sigma, X);
    // g = <d lambda_sigma, X> / z.
    LaurentSeries g = mul(dls, LaurentSeries::monomial(dls.order(), -1),
                          pt.params().spill_threshold);
    SaddleFrame fr = make_frame(ls, g, critical_point, k_max);
    std::vector<cplx> out(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        cplx res = frame_residue(fr, k);
        out[k] = 0.5 * inv_gamma_half_minus(k) * std::pow(fr.c, -(k + 0.5)) * res;
    }
    return out;
}

int dominant_index(const std::vector<cplx>& critical_values, double arg_zeta,
                   double margin) {
    cplx dir = std::polar(1.0, arg_zeta);
    int best = 0;
    double best_re = -1e300, second = -1e300;
    for (size_t i = 0; i < critical_values.size(); ++i) {
        double re = (dir * critical_values[i]).real();
        if (re > best_re) {
            second = best_re;
            best_re = re;
            best = static_cast<int>(i);
        } else {
            second = std::max(second, re);
        }
    }
    double scale = 0.0;
    for (const auto& u : critical_values) scale = std::max(scale, std::abs(u));
    if (critical_values.size() > 1 && best_re - second <= margin * (1.0 + scale))
        throw Error(ErrorKind::AntiStokesDirection,
                    "two critical values tie at this ray direction");
    return best;
}

TangentTriple incompleteness_witness(const ManifoldPoint& pt,
                                     const CoverComplex& zeta) {
    if (!pt.is_special())
        throw Error(ErrorKind::ParameterOutOfScope,
                    "the witness is a special-point construction");
    const int N = pt.params().N;
    cplx a = -zeta.value() * pt.eu();
    // (1 - e^{a/z}) z = z - sum_k a^k z^{1-k} / k!
    LaurentSeries W(N);
    cplx term = 1.0;  // a^k / k!
    double spill = 0.0;
    for (int k = 0; k <= N + 1; ++k) {
        int power = 1 - k;
        if (k > 0) {
            if (power >= -N)
                W.add_coeff(power, -term);
            else
                spill += std::abs(term);
        }
        term *= a / double(k + 1);
    }
    if (spill > 1e-14) W.flag_under_resolved(spill);
    return {std::move(W), 0.0, -1.0};
}

}  // namespace toda
