#include "toda/dubrovin.hpp"

#include "toda/specfun.hpp"

namespace toda {

ResidualResult dubrovin_residual(const ManifoldPoint& pt, const ZetaFunctional& xi,
                                 const CoverComplex& zeta, const TangentTriple& X,
                                 double h, double tol) {
    if (h <= 0.0) h = 1e-4 * (1.0 + zeta.mod);
    cplx zval = zeta.value();
    auto at = [&](cplx dz) {
        return xi(CoverComplex::near(zval + dz, zeta.arg), X);
    };
    // Central differences at steps h and h/2, along the radial direction.
    cplx dir = std::polar(1.0, zeta.arg);
    cplx d1 = (at(dir * h) - at(dir * (-h))) / (2.0 * h * dir);
    cplx d2 = (at(dir * (h / 2)) - at(dir * (-h / 2))) / (h * dir);
    cplx dext = (4.0 * d2 - d1) / 3.0;

    TangentTriple UX = pt.apply_U(X);
    TangentTriple VX = pt.apply_V(X);
    cplx action = xi(zeta, UX) - xi(zeta, VX) / zval;
    cplx f0 = xi(zeta, X);

    double scale = std::max({1.0, std::abs(f0), std::abs(action), std::abs(dext)});
    double disagree = std::abs(d2 - d1);
    if (disagree > 10.0 * tol * scale)
        throw Error(ErrorKind::StepTooLarge,
                    "finite-difference extrapolation disagreement " +
                        std::to_string(disagree / scale));
    return {dext - action, scale, disagree};
}

namespace {

// (X(z) - X(p)) / (z - p) by exact synthetic division of each monomial.
LaurentSeries divided_difference(const LaurentSeries& X, cplx p) {
    const int N = X.order();
    LaurentSeries out(N);
    // z^m - p^m = (z-p) sum_{j=0}^{m-1} p^{m-1-j} z^j          (m >= 1)
    // z^m - p^m = -(z-p) sum_{j=m}^{-1} p^{m-1-j} z^j          (m <= -1)
    for (int m = 1; m <= N; ++m) {
        cplx c = X.coeff(m);
        if (c == cplx(0.0)) continue;
        cplx pw = std::pow(p, m - 1);
        for (int j = 0; j <= m - 1; ++j) {
            out.add_coeff(j, c * pw);
            pw /= p;
        }
    }
    for (int m = -1; m >= -N; --m) {
        cplx c = X.coeff(m);
        if (c == cplx(0.0)) continue;
        for (int j = m; j <= -1; ++j)
            out.add_coeff(j, -c * std::pow(p, m - 1 - j));
    }
    return out;
}

}  // namespace

TangentTriple apply_Ap(const ManifoldPoint& pt, cplx p, const TangentTriple& X) {
    if (!pt.is_special())
        throw Error(ErrorKind::ParameterOutOfScope,
                    "A_p is explicit only at the special point");
    cplx einv = 1.0 / pt.eu();
    cplx Xp = X.W.eval(p);
    // (1/p - 1/z)^{-1} (X - X(p)) = p z (X - X(p))/(z - p)
    LaurentSeries dd = divided_difference(X.W, p);
    LaurentSeries zslot = mul(dd, LaurentSeries::monomial(X.W.order(), 1, p),
                              pt.params().spill_threshold);
    zslot *= 0.5 * einv;
    cplx vslot = -0.5 * (Xp / p + X.Xu);
    cplx uslot = -0.5 * einv * Xp;
    return {std::move(zslot), vslot, uslot};
}

namespace {

// (k - V) at the special point on a triple.
TangentTriple k_minus_V(const ManifoldPoint& pt, double k, const TangentTriple& Y) {
    TangentTriple VY = pt.apply_V(Y);
    TangentTriple out = Y;
    out *= cplx(k);
    out -= VY;
    return out;
}

}  // namespace

std::vector<cplx> bessel_matched_constants(const ManifoldPoint& pt, cplx p, int K) {
    // a^k = sqrt(pi) [zeta^{-k}] phi_p^0 = sqrt(pi)/Gamma(1/2-k) binom(k-1/2,2k) (p/e^u)^k.
    std::vector<cplx> a(K + 1);
    for (int k = 0; k <= K; ++k) {
        double inv_gamma = inv_gamma_half_minus(k);  // 1/Gamma(1/2-k)
        double bin = generalized_binomial(0.0 + k - 0.5, 2 * k);
        a[k] = std::sqrt(kPi) * inv_gamma * bin * std::pow(p / pt.eu(), k);
    }
    return a;
}

FormalDubrovinSolution formal_continuous(const ManifoldPoint& pt, cplx p, int K,
                                         const std::vector<cplx>& constants) {
    if (!pt.is_special())
        throw Error(ErrorKind::ParameterOutOfScope,
                    "continuous formal solutions are built at the special point");
    const int N = pt.params().N;
    FormalDubrovinSolution sol;
    sol.u_value = pt.v() + 2.0 * pt.eu() / p;
    sol.a.assign(K + 1, 0.0);
    sol.a[0] = 1.0;
    for (int k = 1; k <= K; ++k)
        if (k - 1 < static_cast<int>(constants.size())) sol.a[k] = constants[k - 1];

    WeakFunctional dup = du_p_functional(pt, p);
    sol.terms.push_back(dup);
    for (int k = 0; k < K; ++k) {
        const WeakFunctional& rk = sol.terms.back();
        WeakFunctional next(N);
        for (int m = -N; m <= N; ++m) {
            TangentTriple Am = apply_Ap(pt, p, TangentTriple::basis(N, m));
            next.set_coeff(m, rk.eval(k_minus_V(pt, k, Am)));
        }
        // A_p e_v = 0, A_p e_u = (0, -1/2, 0).
        next.cv = 0.0;
        TangentTriple Aeu{LaurentSeries::zero(N), -0.5, 0.0};
        next.cu = rk.eval(k_minus_V(pt, k, Aeu));
        // Kernel freedom: + a^{k+1} du_p.
        cplx ak = sol.a[k + 1];
        next.cm += ak * dup.cm;
        next.cv += ak * dup.cv;
        next.cu += ak * dup.cu;
        sol.terms.push_back(std::move(next));
    }
    return sol;
}

namespace {

struct PsiVec {
    Vec cont;
    Vec outer;
    Vec inner;

    PsiVec scaled(cplx s) const {
        return {cont * s, outer * s, inner * s};
    }
    PsiVec& operator+=(const PsiVec& o) {
        cont += o.cont; outer += o.outer; inner += o.inner;
        return *this;
    }
    PsiVec minus(const PsiVec& o) const {
        return {cont - o.cont, outer - o.outer, inner - o.inner};
    }
};

PsiVec apply_V_psi(const ManifoldPoint& pt, const CriticalSet& crit, const PsiVec& y) {
    PsiData d{y.cont, y.outer, y.inner};
    TangentTriple X = psi_inverse(pt, crit, d);
    TangentTriple VX = pt.apply_V(X);
    PsiData r = psi_forward(pt, crit, VX);
    return {r.cont, r.outer, r.inner};
}

}  // namespace

FormalDubrovinSolution formal_discrete(const ManifoldPoint& pt,
                                       const CriticalSet& crit,
                                       DiscreteFamily family, int index, int K) {
    const int M = pt.params().M;
    const bool outer = family == DiscreteFamily::Outer;
    const auto& roots = outer ? crit.outer : crit.inner;
    if (index < 0 || index >= static_cast<int>(roots.size()))
        throw Error(ErrorKind::ParameterOutOfScope, "no such critical point");
    const auto& root = roots[index];
    const cplx ui = root.u;
    Vec up = canonical_values_grid(pt);

    // Margin against the continuous spectrum and the other discrete values.
    double margin = 1e30;
    for (int j = 0; j < M; ++j) margin = std::min(margin, std::abs(ui - up(j)));
    for (size_t i = 0; i < crit.outer.size(); ++i)
        if (!(outer && static_cast<int>(i) == index))
            margin = std::min(margin, std::abs(ui - crit.outer[i].u));
    for (size_t i = 0; i < crit.inner.size(); ++i)
        if (!(!outer && static_cast<int>(i) == index))
            margin = std::min(margin, std::abs(ui - crit.inner[i].u));
    if (margin < 1e-8)
        throw Error(ErrorKind::SolvabilityFailure,
                    "coincident canonical values at the requested critical point");

    const int n_out = static_cast<int>(crit.outer.size());
    const int n_in = static_cast<int>(crit.inner.size());
    auto kernel_slot = [&](PsiVec& v) -> cplx& {
        return outer ? v.outer(index) : v.inner(index);
    };

    // Y^0 = (0, -z_i^2 lambda''(z_i) e_i, 0): Psi^{-1}(Y^0) = du_i.
    PsiVec Y0{Vec::Zero(M), Vec::Zero(n_out), Vec::Zero(n_in)};
    kernel_slot(Y0) = -root.z * root.z * root.second;

    // Solve (u_i - U) Y = R on the image; the kernel slot must cancel.
    auto solve_im = [&](const PsiVec& R) {
        PsiVec y{Vec(M), Vec::Zero(n_out), Vec::Zero(n_in)};
        for (int j = 0; j < M; ++j) y.cont(j) = R.cont(j) / (ui - up(j));
        for (int i = 0; i < n_out; ++i)
            if (!(outer && i == index)) y.outer(i) = R.outer(i) / (ui - crit.outer[i].u);
        for (int i = 0; i < n_in; ++i)
            if (!(!outer && i == index)) y.inner(i) = R.inner(i) / (ui - crit.inner[i].u);
        return y;
    };

    FormalDubrovinSolution sol;
    sol.u_value = ui;
    sol.a.assign(K + 1, 0.0);
    sol.a[0] = 1.0;

    std::vector<PsiVec> terms;
    terms.push_back(Y0);
    // Solvability scale for tolerance decisions.
    double scale0 = std::abs(kernel_slot(Y0));

    for (int k = 0; k < K; ++k) {
        // (k + V) Y^k
        PsiVec R = terms[k].scaled(double(k));
        R += apply_V_psi(pt, crit, terms[k]);
        // Solvability: the kernel slot of R must vanish (it does by the choice
        // of a^k below; at k=0 by the auxiliary lemma).
        cplx obstruction = kernel_slot(R);
        if (std::abs(obstruction) > 1e-7 * (scale0 + R.cont.cwiseAbs().maxCoeff()))
            throw Error(ErrorKind::SolvabilityFailure,
                        "projection onto ker(u_i - U) does not cancel");
        PsiVec Rhat = R;
        kernel_slot(Rhat) = 0.0;
        PsiVec Ynext = solve_im(Rhat);
        // Fix the kernel constant of Y^{k+1} by the next solvability condition:
        // P_i[(k+1+V)(Ynext + a Y0)] = 0.
        PsiVec probe = apply_V_psi(pt, crit, Ynext);
        cplx num = double(k + 1) * kernel_slot(Ynext) + kernel_slot(probe);
        PsiVec vy0 = apply_V_psi(pt, crit, Y0);
        cplx den = double(k + 1) * kernel_slot(Y0) + kernel_slot(vy0);
        if (std::abs(den) < 1e-12 * scale0)
            throw Error(ErrorKind::SolvabilityFailure,
                        "kernel-direction normal equation is singular");
        cplx a = -num / den;
        PsiVec Yk1 = Ynext;
        Yk1 += Y0.scaled(a);
        sol.a[k + 1] = a;
        terms.push_back(std::move(Yk1));
    }

    // Pull back to tangent representatives and weak-functional coefficients.
    const int N = pt.params().N;
    for (const auto& t : terms) {
        PsiData d{t.cont, t.outer, t.inner};
        TangentTriple Z = psi_inverse(pt, crit, d);
        WeakFunctional w(N);
        for (int m = -N; m <= N; ++m)
            w.set_coeff(m, pt.metric(Z, TangentTriple::basis(N, m)));
        w.cv = pt.metric(Z, TangentTriple::unit_field(N));
        w.cu = pt.metric(Z, TangentTriple{LaurentSeries::zero(N), 0.0, 1.0});
        sol.terms.push_back(std::move(w));
        sol.representatives.push_back(std::move(Z));
    }
    return sol;
}

std::vector<double> recursion_residuals(const ManifoldPoint& pt,
                                        const FormalDubrovinSolution& sol,
                                        const std::vector<TangentTriple>& batch) {
    std::vector<double> out;
    for (size_t k = 0; k + 1 < sol.terms.size(); ++k) {
        double worst = 0.0;
        for (const auto& X : batch) {
            TangentTriple UX = pt.apply_U(X);
            TangentTriple uU = X;
            uU *= sol.u_value;
            uU -= UX;  // (u - U) X
            cplx lhs = sol.terms[k + 1].eval(uU);
            cplx rhs = sol.terms[k].eval(k_minus_V(pt, double(k), X));
            double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
        out.push_back(worst);
    }
    return out;
}

}  // namespace toda
