#include "toda/resurgence.hpp"

#include <Eigen/SVD>

namespace toda {

namespace {

double reduce_angle(double a) {
    // into (-pi, pi]
    double r = std::fmod(a, 2.0 * kPi);
    if (r <= -kPi) r += 2.0 * kPi;
    if (r > kPi) r -= 2.0 * kPi;
    return r;
}

cplx ipow(cplx z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r = 1.0;
    while (n--) r *= z;
    return r;
}

void require_special_resurgence(const ManifoldPoint& pt) {
    if (!pt.is_special())
        throw Error(ErrorKind::ParameterOutOfScope,
                    "resurgence is implemented at the special point");
    if (std::abs(pt.eu()) >= 1.0)
        throw Error(ErrorKind::ParameterOutOfScope,
                    "|e^u| < 1 is required (no discrete canonical coordinates)");
}

}  // namespace

GevreySeries phi_series(const ManifoldPoint& pt, cplx p, int m, int K) {
    GevreySeries s;
    s.coeffs.resize(K + 1);
    cplx ratio = p / pt.eu();
    cplx pw = 1.0;
    double cert = 0.0;
    double kfac = 1.0;
    for (int k = 0; k <= K; ++k) {
        s.coeffs[k] =
            inv_gamma_half_minus(k) * generalized_binomial(m + k - 0.5, 2 * k) * pw;
        if (k > 0) kfac *= k;
        double c = std::pow(std::abs(s.coeffs[k]) / kfac, k > 0 ? 1.0 / k : 1.0);
        cert = std::max(cert, k > 0 ? c : 0.0);
        pw *= ratio;
    }
    s.growth_certificate = cert;
    return s;
}

std::vector<cplx> borel_coeffs(const GevreySeries& s) {
    std::vector<cplx> b(s.coeffs.size());
    double kfac = 1.0;
    for (size_t k = 0; k < s.coeffs.size(); ++k) {
        if (k > 0) kfac *= double(k);
        b[k] = s.coeffs[k] / kfac;
    }
    return b;
}

cplx borel_closed_form(const ManifoldPoint& pt, cplx p, int m, cplx chi) {
    cplx s = p * chi / (4.0 * pt.eu());
    return hyp2f1_borel(m, s).F / std::sqrt(kPi);
}

double borel_radius_estimate(const GevreySeries& s) {
    std::vector<cplx> b = borel_coeffs(s);
    int K = static_cast<int>(b.size()) - 1;
    if (K < 6) throw Error(ErrorKind::ParameterOutOfScope, "needs more terms");
    // Ratio test with Richardson extrapolation in 1/k.
    auto ratio = [&](int k) { return std::abs(b[k - 1]) / std::abs(b[k]); };
    double rK = ratio(K), rK1 = ratio(K - 1);
    return double(K) * rK - double(K - 1) * rK1;
}

namespace {

// Adaptive Gauss quadrature of f on [a,b]: 15-point panels, bisect until the
// two-half refinement agrees.
template <typename F>
cplx adaptive_gl(const F& f, double a, double b, double tol, int depth = 0) {
    static const double x15[15] = {
        -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
        -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
        -0.2011940939974345, 0.0,                 0.2011940939974345,
        0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
        0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
    static const double w15[15] = {
        0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
        0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
        0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
        0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
        0.1071592204671719, 0.0703660474881081, 0.0307532419961173};
    auto panel = [&](double lo, double hi) {
        double hm = 0.5 * (hi - lo), cm = 0.5 * (lo + hi);
        cplx acc = 0.0;
        for (int i = 0; i < 15; ++i) acc += w15[i] * f(cm + hm * x15[i]);
        return acc * hm;
    };
    cplx whole = panel(a, b);
    double mid = 0.5 * (a + b);
    cplx split = panel(a, mid) + panel(mid, b);
    if (std::abs(whole - split) <= tol || depth > 28) return split;
    return adaptive_gl(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive_gl(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

cplx laplace_ray(const ManifoldPoint& pt, const CoverComplex& p, int m,
                 double theta, const CoverComplex& zeta, double tol) {
    require_special_resurgence(pt);
    double theta_st = pt.u().imag() - p.arg;
    double delta = reduce_angle(theta - theta_st);
    if (std::abs(delta) < 1e-6)
        throw Error(ErrorKind::StokesRay, "theta hits the Stokes direction");
    cplx q = std::polar(1.0, theta) * zeta.value();
    if (q.real() <= 1e-12 * std::abs(q))
        throw Error(ErrorKind::OutOfSector, "zeta outside Pi_theta");

    // phi-hat(chi) = (1/sqrt(pi)) F_m(s), s = p chi/(4 e^u); chi = t e^{i theta}.
    // s = (t/(4|e^u|)) e^{i delta'} with delta' = theta + arg p - Im u = delta.
    double s_scale = 1.0 / (4.0 * std::abs(pt.eu()));
    RayBorel2F1 family(m, std::polar(1.0, delta));
    cplx eitheta = std::polar(1.0, theta);
    cplx zval = zeta.value();

    double R = q.real();
    double T = (42.0 + 4.0 * std::abs(m)) / R;
    auto integrand = [&](double t) {
        cplx phihat = family.eval(t * s_scale).F / std::sqrt(kPi);
        return phihat * std::exp(-zval * eitheta * t);
    };
    // Split at the foot of the Borel singularity so the adaptive panels
    // concentrate there when delta is small.
    double tsing = 4.0 * std::abs(pt.eu());
    cplx acc;
    if (tsing < T) {
        acc = adaptive_gl(integrand, 0.0, tsing, tol * 0.5) +
              adaptive_gl(integrand, tsing, T, tol * 0.5);
    } else {
        acc = adaptive_gl(integrand, 0.0, T, tol);
    }
    return zval * eitheta * acc;
}

cplx borel_laplace_toy_error(cplx c, int K, double theta,
                             const CoverComplex& zeta) {
    cplx q = std::polar(1.0, theta) * zeta.value();
    if (q.real() <= 0.0)
        throw Error(ErrorKind::OutOfSector, "zeta outside Pi_theta");
    cplx zval = zeta.value();
    auto fhat = [&](double t) {
        // truncated exponential sum_{k<=K} (c chi)^k / k!, chi = t e^{i theta}
        cplx chi = std::polar(1.0, theta) * t;
        cplx term = 1.0, sum = 1.0;
        for (int k = 1; k <= K; ++k) {
            term *= c * chi / double(k);
            sum += term;
        }
        return sum * std::exp(-zval * chi);
    };
    double T = (45.0 + 2.0 * K) / q.real();
    cplx got = zval * std::polar(1.0, theta) *
               adaptive_gl(fhat, 0.0, T, 1e-13);
    cplx want = 0.0;
    for (int k = 0; k <= K; ++k) want += std::pow(c / zval, k);
    return got - want;
}

cplx resummed_closed_form(const ManifoldPoint& pt, const CoverComplex& p, int m,
                          double theta, const CoverComplex& zeta) {
    require_special_resurgence(pt);
    double theta_st = pt.u().imag() - p.arg;
    double delta = reduce_angle(theta - theta_st);
    if (std::abs(delta) < 1e-6)
        throw Error(ErrorKind::StokesRay, "theta hits the Stokes direction");
    double sgn = delta > 0.0 ? 1.0 : -1.0;
    // omega = -e^{i theta} p / (4 e^u): |arg omega| < pi branch.
    double arg_omega = delta - sgn * kPi;
    double mod_omega = 1.0 / (4.0 * std::abs(pt.eu()));
    // q = e^{i theta} zeta on the cover.
    double arg_q = theta + zeta.arg;
    double mod_q = zeta.mod;
    CoverComplex y{mod_q / (2.0 * mod_omega), arg_q - arg_omega};
    cplx qhalf = std::polar(std::sqrt(mod_q), 0.5 * arg_q);
    cplx winvhalf = std::polar(1.0 / std::sqrt(mod_omega), -0.5 * arg_omega);
    return qhalf * winvhalf / kPi * std::exp(y.value()) *
           bessel_K(std::abs(m), y);
}

namespace {

CoverComplex k_argument(const ManifoldPoint& pt, const CoverComplex& p,
                        const CoverComplex& zeta) {
    // x = -2 zeta e^u / p lifted with arg = pi + arg zeta + Im u - arg p.
    double mod = 2.0 * zeta.mod * std::abs(pt.eu());
    double arg = kPi + zeta.arg + pt.u().imag() - p.arg;
    return {mod, arg};
}

cplx ds_prefactor(const ManifoldPoint& pt, const CoverComplex& zeta) {
    // (1/i pi) e^{zeta v} zeta^{1/2}
    return cplx(0.0, -1.0 / kPi) * std::exp(zeta.value() * pt.v()) * zeta.pow(0.5);
}

}  // namespace

cplx ds_coeff(const ManifoldPoint& pt, const CoverComplex& p,
              const CoverComplex& zeta, int m) {
    require_special_resurgence(pt);
    CoverComplex x = k_argument(pt, p, zeta);
    cplx pm = std::polar(1.0, m * p.arg);
    cplx eu = pt.eu();
    cplx pv = std::polar(1.0, p.arg);
    cplx factor = (m >= 1) ? (eu / (pv * pv) + 1.0) : (eu / (pv * pv));
    return ds_prefactor(pt, zeta) * factor * pm * bessel_K(std::abs(m), x);
}

cplx ds_coeff_v(const ManifoldPoint& pt, const CoverComplex& p,
                const CoverComplex& zeta) {
    require_special_resurgence(pt);
    CoverComplex x = k_argument(pt, p, zeta);
    return ds_prefactor(pt, zeta) * bessel_K(0, x);
}

cplx ds_coeff_u(const ManifoldPoint& pt, const CoverComplex& p,
                const CoverComplex& zeta) {
    require_special_resurgence(pt);
    CoverComplex x = k_argument(pt, p, zeta);
    cplx pv = std::polar(1.0, p.arg);
    return ds_prefactor(pt, zeta) * pt.eu() / pv * bessel_K(1, x);
}

ResummedFunctional ds_p(const ManifoldPoint& pt, const CoverComplex& p,
                        const CoverComplex& zeta, int m_max) {
    ResummedFunctional out;
    out.p = p;
    out.zeta = zeta;
    out.coeffs = WeakFunctional(m_max);
    for (int m = -m_max; m <= m_max; ++m)
        out.coeffs.set_coeff(m, ds_coeff(pt, p, zeta, m));
    out.coeffs.cv = ds_coeff_v(pt, p, zeta);
    out.coeffs.cu = ds_coeff_u(pt, p, zeta);
    // log |c_m| grows like m log m at the window edge (the K_m large-order
    // law); a positive top-of-window slope marks the functional as weak.
    if (m_max >= 4) {
        double a = std::log(std::abs(out.coeffs.coeff(m_max)));
        double b = std::log(std::abs(out.coeffs.coeff(m_max - 2)));
        out.growth_log_slope = 0.5 * (a - b);
        out.weak_growth = out.growth_log_slope > 0.0;
    }
    return out;
}

cplx ds_eval(const ManifoldPoint& pt, const CoverComplex& p,
             const CoverComplex& zeta, const TangentTriple& X) {
    cplx acc = 0.0;
    for (int m = -X.W.order(); m <= X.W.order(); ++m) {
        cplx c = X.W.coeff(m);
        if (c != cplx(0.0)) acc += c * ds_coeff(pt, p, zeta, m);
    }
    if (X.Xv != cplx(0.0)) acc += X.Xv * ds_coeff_v(pt, p, zeta);
    if (X.Xu != cplx(0.0)) acc += X.Xu * ds_coeff_u(pt, p, zeta);
    return acc;
}

CompletenessReport completeness_probe(const ManifoldPoint& pt,
                                      const CoverComplex& zeta, int P, int m_max,
                                      double phi0) {
    require_special_resurgence(pt);
    const int cols = 2 * m_max + 3;
    if (P < cols)
        throw Error(ErrorKind::RankDeficient,
                    "grid of " + std::to_string(P) + " points cannot resolve " +
                        std::to_string(cols) + " coefficients");
    Eigen::MatrixXcd A(P, cols);
    for (int j = 0; j < P; ++j) {
        CoverComplex p{1.0, phi0 + 2.0 * kPi * j / P};
        int c = 0;
        for (int m = -m_max; m <= m_max; ++m)
            A(j, c++) = ds_coeff(pt, p, zeta, m);
        A(j, c++) = ds_coeff_v(pt, p, zeta);
        A(j, c++) = ds_coeff_u(pt, p, zeta);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    Eigen::VectorXd sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++rank;
    CompletenessReport r;
    r.rank = rank;
    r.expected = cols;
    r.singular_values = sv;
    if (rank < cols)
        throw Error(ErrorKind::RankDeficient,
                    "numerical rank " + std::to_string(rank) + " < " +
                        std::to_string(cols) + " (grid aliasing)");
    return r;
}

namespace {

struct DsSampler {
    const ManifoldPoint& pt;
    const CoverComplex& zeta;
    double phi0;
    int P;

    // i pi e^{-zeta v} zeta^{-1/2} <ds_p, X> at p = e^{i phi}.
    cplx F(double phi, const TangentTriple& X) const {
        CoverComplex p{1.0, phi};
        cplx raw = ds_eval(pt, p, zeta, X);
        return raw * cplx(0.0, kPi) * std::exp(-zeta.value() * pt.v()) *
               zeta.pow(-0.5);
    }
};

}  // namespace

TangentTriple reconstruct_from_ds(const ManifoldPoint& pt,
                                  const CoverComplex& zeta,
                                  const TangentTriple& X, int P, double phi0) {
    require_special_resurgence(pt);
    // Support of the unknown vector (taken from the shape of X; the values are
    // reconstructed from the ds samples alone).
    int r = 0, s = 0;
    for (int k = 1; k <= X.W.order(); ++k)
        if (std::abs(X.W.coeff(k)) != 0.0) r = k;
    for (int k = -1; k >= -X.W.order(); --k)
        if (std::abs(X.W.coeff(k)) != 0.0) s = -k;

    DsSampler sampler{pt, zeta, phi0, P};
    std::vector<cplx> F0(P), F1(P);
    for (int j = 0; j < P; ++j) {
        double phi = phi0 + 2.0 * kPi * j / P;
        F0[j] = sampler.F(phi, X);
        F1[j] = sampler.F(phi + 2.0 * kPi, X);
    }

    const int N = std::max(X.W.order(), std::max(r, s) + 2);
    TangentTriple rec{LaurentSeries::zero(N), 0.0, 0.0};
    cplx mzeu = -zeta.value() * pt.eu();  // (-zeta e^u) as a plain value

    auto subtract_column = [&](const TangentTriple& basis, cplx val) {
        for (int j = 0; j < P; ++j) {
            double phi = phi0 + 2.0 * kPi * j / P;
            F0[j] -= val * sampler.F(phi, basis);
            F1[j] -= val * sampler.F(phi + 2.0 * kPi, basis);
        }
    };
    auto fourier = [&](const std::vector<cplx>& vals, int q) {
        cplx acc = 0.0;
        for (int j = 0; j < P; ++j) {
            double phi = phi0 + 2.0 * kPi * j / P;
            acc += vals[j] * std::polar(1.0, -q * phi);
        }
        return acc / double(P);
    };
    auto H = [&]() {
        std::vector<cplx> h(P);
        for (int j = 0; j < P; ++j) h[j] = (F1[j] - F0[j]) / cplx(0.0, 2.0 * kPi);
        return h;
    };
    auto G = [&](const std::vector<cplx>& h) {
        // F = G + i phi H  =>  G = F - i phi H; H here is Delta F/(2 pi i).
        std::vector<cplx> g(P);
        for (int j = 0; j < P; ++j) {
            double phi = phi0 + 2.0 * kPi * j / P;
            g[j] = F0[j] - cplx(0.0, phi) * h[j];
        }
        return g;
    };

    // Positive powers, descending: coefficient of p^{2m} in G-part equals
    // X_m (1/2) (-zeta e^u)^{-m} (m-1)!.
    for (int m = r; m >= 1; --m) {
        std::vector<cplx> h = H();
        std::vector<cplx> g = G(h);
        double fact = 1.0;
        for (int j = 2; j <= m - 1; ++j) fact *= j;
        cplx tm = 0.5 * ipow(mzeu, -m) * fact;
        cplx val = fourier(g, 2 * m) / tm;
        rec.W.add_coeff(m, val);
        subtract_column(TangentTriple::basis(N, m), val);
    }
    // X_v from the log-coefficient of p^0: equals -X_v.
    {
        // F = G + log(x/2) Htilde with Htilde = -Delta F/(2 pi i); the p^0
        // mode of Htilde equals -X_v, so X_v = +fourier(H, 0).
        std::vector<cplx> h = H();
        cplx val = fourier(h, 0);
        rec.Xv = val;
        subtract_column(TangentTriple::unit_field(N), val);
    }
    // X_u from the constant coefficient: equals e^u X_u (-2 zeta e^u)^{-1}.
    {
        std::vector<cplx> h = H();
        std::vector<cplx> g = G(h);
        cplx coeff = pt.eu() / (-2.0 * zeta.value() * pt.eu());
        cplx val = fourier(g, 0) / coeff;
        rec.Xu = val;
        subtract_column(TangentTriple{LaurentSeries::zero(N), 0.0, 1.0}, val);
    }
    // m = 0, -1, ..., -s from the log-coefficients of p^{2m-2}:
    // Htilde_{2m-2} = X_m e^u (-1)^{m+1} (-zeta e^u)^{-m} / (-m)!.
    for (int m = 0; m >= -s; --m) {
        std::vector<cplx> h = H();
        double fact = 1.0;
        for (int j = 2; j <= -m; ++j) fact *= j;
        double sgn = ((-m + 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{m+1} = (-1)^{-m+1}
        cplx tm = pt.eu() * sgn * ipow(mzeu, -m) / fact;
        cplx htilde = -fourier(h, 2 * m - 2);
        cplx val = htilde / tm;
        rec.W.add_coeff(m, val);
        subtract_column(TangentTriple::basis(N, m), val);
    }
    return rec;
}

StokesPairResult stokes_pair(const ManifoldPoint& pt, const CoverComplex& p,
                             double theta, double zeta_abs, double epsilon,
                             const std::vector<int>& ms) {
    require_special_resurgence(pt);
    double theta0 = kPi + pt.u().imag() - p.arg;
    // Admissibility: theta may not fall on the Stokes line directions.
    double d = reduce_angle(theta - (theta0 + kPi / 2.0));
    d = std::min(std::abs(reduce_angle(d)), std::abs(reduce_angle(d + kPi)));
    if (d < 1e-6)
        throw Error(ErrorKind::StokesRay, "admissible line hits the Stokes line");

    CoverComplex zp{zeta_abs, theta + 0.5 * epsilon};
    CoverComplex zm{zeta_abs, theta + kPi + 0.5 * epsilon};
    CoverComplex pm = p.rotated(-kPi);  // "-p" (arg p - pi)

    auto columns = [&](const CoverComplex& z, const CoverComplex& zl2) {
        // rows over mhat: [Y_R columns | Y_L columns]
        const int n = static_cast<int>(ms.size()) + 2;
        Eigen::MatrixXcd R(n, 2), L(n, 2);
        int row = 0;
        for (int m : ms) {
            R(row, 0) = ds_coeff(pt, p, z, m);
            R(row, 1) = ds_coeff(pt, pm, z, m);
            L(row, 0) = ds_coeff(pt, p, z, m);  // Y_L col1 = ds_p(z)
            L(row, 1) = ds_coeff(pt, pm, zl2, m);
            ++row;
        }
        R(row, 0) = ds_coeff_v(pt, p, z);
        R(row, 1) = ds_coeff_v(pt, pm, z);
        L(row, 0) = ds_coeff_v(pt, p, z);
        L(row, 1) = ds_coeff_v(pt, pm, zl2);
        ++row;
        R(row, 0) = ds_coeff_u(pt, p, z);
        R(row, 1) = ds_coeff_u(pt, pm, z);
        L(row, 0) = ds_coeff_u(pt, p, z);
        L(row, 1) = ds_coeff_u(pt, pm, zl2);
        return std::make_pair(R, L);
    };

    auto solve_S = [&](const Eigen::MatrixXcd& R, const Eigen::MatrixXcd& L,
                       double& spread) {
        // Least squares for the 2x2 S in L = R S (QR; the columns differ by the
        // dominance ratio e^{2 Re zeta u_p}, so normal equations would square
        // an already large condition number), plus per-row-pair solves.
        Eigen::Matrix2cd S = R.colPivHouseholderQr().solve(L);
        spread = 0.0;
        const int n = static_cast<int>(R.rows());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Eigen::Matrix2cd A;
                A << R(i, 0), R(i, 1), R(j, 0), R(j, 1);
                double cnd = std::abs(A.determinant()) /
                             (A.row(0).norm() * A.row(1).norm() + 1e-300);
                if (cnd < 1e-13) continue;
                Eigen::Matrix2cd B;
                B << L(i, 0), L(i, 1), L(j, 0), L(j, 1);
                Eigen::Matrix2cd Sij = A.fullPivLu().solve(B);
                spread = std::max(spread, (Sij - S).cwiseAbs().maxCoeff());
            }
        }
        return S;
    };

    StokesPairResult out;
    double spread_p = 0.0, spread_m = 0.0;
    {
        // Pi_+: same lift for both families.
        auto [R, L] = columns(zp, zp.rotated(-2.0 * kPi));
        double rowscale = R.cwiseAbs().maxCoeff();
        if (rowscale < 1e-280)
            throw Error(ErrorKind::IllConditioned, "columns vanish at this zeta");
        out.S_plus = solve_S(R, L, spread_p);
    }
    {
        // Pi_-: Y_R is taken at the lift zeta e^{-2 pi i}.
        CoverComplex zl = zm.rotated(-2.0 * kPi);
        auto make = columns(zl, zl);  // R at the shifted lift
        Eigen::MatrixXcd R = make.first;
        // Y_L at zm: col1 ds_p(zm), col2 ds_{-p}(zm e^{-2pi i}).
        const int n = static_cast<int>(ms.size()) + 2;
        Eigen::MatrixXcd L(n, 2);
        int row = 0;
        for (int m : ms) {
            L(row, 0) = ds_coeff(pt, p, zm, m);
            L(row, 1) = ds_coeff(pt, pm, zl, m);
            ++row;
        }
        L(row, 0) = ds_coeff_v(pt, p, zm);
        L(row, 1) = ds_coeff_v(pt, pm, zl);
        ++row;
        L(row, 0) = ds_coeff_u(pt, p, zm);
        L(row, 1) = ds_coeff_u(pt, pm, zl);
        out.S_minus = solve_S(R, L, spread_m);
    }
    out.max_entry_spread = std::max(spread_p, spread_m);

    // Stokes line separates dominance: u_p - u_{-p} = 4 e^u / p.
    cplx du = 4.0 * pt.eu() / p.value();
    double c1 = (std::polar(1.0, -theta0 + kPi) * du).real();
    double c2 = (std::polar(1.0, -theta0) * du).real();
    out.dominance_separated = (c1 > 0.0) && (c2 < 0.0);
    return out;
}

StokesFamilyResult stokes_family(const ManifoldPoint& pt, double theta, int P,
                                 double zeta_abs, double epsilon, int m_max) {
    require_special_resurgence(pt);
    if (P % 2 != 0)
        throw Error(ErrorKind::ConfigInvalid, "family grid size must be even");
    double c = pt.u().imag() + theta;
    StokesFamilyResult out;
    out.grid_args.resize(P);
    // Half-offset grid over [c - pi/2, c + 3 pi/2) avoids the case boundaries.
    for (int g = 0; g < P; ++g)
        out.grid_args[g] = c - kPi / 2.0 + (g + 0.5) * 2.0 * kPi / P;

    CoverComplex zp{zeta_abs, theta + 0.5 * epsilon};
    CoverComplex zm{zeta_abs, theta + kPi + 0.5 * epsilon};

    auto coeff_row = [&](const CoverComplex& p, const CoverComplex& z, Vec& row) {
        int idx = 0;
        for (int m = -m_max; m <= m_max; ++m) row(idx++) = ds_coeff(pt, p, z, m);
        row(idx++) = ds_coeff_v(pt, p, z);
        row(idx++) = ds_coeff_u(pt, p, z);
    };
    const int W = 2 * m_max + 3;

    auto in_window = [&](double a, double lo, double hi) {
        double r = std::fmod(a - lo, 2.0 * kPi);
        if (r < 0) r += 2.0 * kPi;
        return r < (hi - lo);
    };

    // Pi_+ sector: (Y_L)_p = (Y_R)_p - 2 chi(p) (Y_R)_{e^{i pi} p} where chi
    // selects arg p in (c - pi/2, c + pi/2).
    for (int g = 0; g < P; ++g) {
        double a = out.grid_args[g];
        CoverComplex p{1.0, a};
        bool active = in_window(a, c - kPi / 2.0, c + kPi / 2.0);
        Vec yl(W), yr(W), yr2(W);
        coeff_row(p, active ? zp.rotated(-2.0 * kPi) : zp, yl);
        coeff_row(p, zp, yr);
        double dev = 0.0;
        if (active) {
            coeff_row(p.rotated(kPi), zp, yr2);
            for (int i = 0; i < W; ++i) {
                double scale = 1.0 + std::max(std::abs(yr(i)), std::abs(yr2(i)));
                dev = std::max(dev, std::abs(yl(i) - yr(i) + 2.0 * yr2(i)) / scale);
            }
            int q = (g + P / 2) % P;
            out.kernel_plus.push_back({g, q, -2.0});
        } else {
            for (int i = 0; i < W; ++i) {
                double scale = 1.0 + std::abs(yr(i));
                dev = std::max(dev, std::abs(yl(i) - yr(i)) / scale);
            }
        }
        out.kernel_plus.push_back({g, g, 1.0});
        out.max_plus_deviation = std::max(out.max_plus_deviation, dev);
    }

    // Pi_- sector: Y_R at the lift zeta e^{-2 pi i}; the active half swaps and
    // the shift is e^{-i pi}.
    CoverComplex zl = zm.rotated(-2.0 * kPi);
    for (int g = 0; g < P; ++g) {
        double a = out.grid_args[g];
        CoverComplex p{1.0, a};
        bool upper = in_window(a, c + kPi / 2.0, c + 3.0 * kPi / 2.0);
        Vec yl_(W), yr(W), yr2(W);
        coeff_row(p, upper ? zm : zl, yl_);
        coeff_row(p, zl, yr);
        double dev = 0.0;
        if (upper) {
            coeff_row(p.rotated(-kPi), zl, yr2);
            for (int i = 0; i < W; ++i) {
                double scale = 1.0 + std::max(std::abs(yr(i)), std::abs(yr2(i)));
                dev = std::max(dev, std::abs(yl_(i) - yr(i) + 2.0 * yr2(i)) / scale);
            }
            int q = ((g - P / 2) % P + P) % P;
            out.kernel_minus.push_back({g, q, -2.0});
        } else {
            for (int i = 0; i < W; ++i) {
                double scale = 1.0 + std::abs(yr(i));
                dev = std::max(dev, std::abs(yl_(i) - yr(i)) / scale);
            }
        }
        out.kernel_minus.push_back({g, g, 1.0});
        out.max_minus_deviation = std::max(out.max_minus_deviation, dev);
    }

    // Kernel transpose relation (S_+)_{pq} = (S_-)_{qp} as index sets.
    auto key = [](const StokesFamilyResult::KernelEntry& e) {
        return std::make_tuple(e.p_index, e.q_index,
                               static_cast<int>(std::lround(e.weight)));
    };
    std::vector<std::tuple<int, int, int>> plus, minus_t;
    for (const auto& e : out.kernel_plus) plus.push_back(key(e));
    for (const auto& e : out.kernel_minus)
        minus_t.push_back(std::make_tuple(e.q_index, e.p_index,
                                          static_cast<int>(std::lround(e.weight))));
    std::sort(plus.begin(), plus.end());
    std::sort(minus_t.begin(), minus_t.end());
    out.transpose_consistent = (plus == minus_t);
    return out;
}

}  // namespace toda
