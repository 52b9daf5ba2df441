#include "toda/manifold.hpp"

namespace toda {

ManifoldPoint::ManifoldPoint(LaurentSeries lambda, LaurentSeries lambdabar,
                             TruncationParams par, cplx u_branch_hint,
                             bool has_hint)
    : par_(par), lambda_(std::move(lambda)), lambdabar_(std::move(lambdabar)) {
    par_.validate();
    const int N = par_.N;
    lambda_ = lambda_.resized(N);
    lambdabar_ = lambdabar_.resized(N);
    cplx lead = lambdabar_.coeff(-1);
    if (std::abs(lead) == 0.0)
        throw Error(ErrorKind::T1Violation, "ubar_{-1} = 0");
    v_ = lambdabar_.coeff(0);
    eu_ = lead;
    // Principal log at construction unless a branch was chosen by the caller.
    u_ = has_hint ? u_branch_hint : std::log(lead);
    build_cache();
}

ManifoldPoint ManifoldPoint::from_w_coords(const LaurentSeries& w, cplx v, cplx u,
                                           TruncationParams par) {
    const int N = par.N;
    cplx eu = std::exp(u);
    LaurentSeries lam = w.resized(N).project_leq(0);
    lam.add_coeff(1, 1.0);
    lam.add_coeff(0, -v);
    lam.add_coeff(-1, -eu);
    LaurentSeries lbar = w.resized(N).project_geq(1);
    lbar.add_coeff(1, -1.0);
    lbar.add_coeff(0, v);
    lbar.add_coeff(-1, eu);
    return ManifoldPoint(std::move(lam), std::move(lbar), par, u, true);
}

ManifoldPoint ManifoldPoint::special_point(cplx v, cplx u, TruncationParams par) {
    LaurentSeries w = LaurentSeries::monomial(par.N, 1);
    ManifoldPoint pt = from_w_coords(w, v, u, par);
    pt.special_ = true;
    return pt;
}

void ManifoldPoint::build_cache() {
    const int N = par_.N;
    w_ = lambda_ + lambdabar_;
    wp_ = w_.derivative();
    zwp_ = w_.z_derivative();
    lp_ = lambda_.derivative();
    lbp_ = lambdabar_.derivative();
    // T2 floor is enforced lazily by div_grid; cache the two reciprocals used
    // by the product and the operators.
    inv_zwp_ = inv_grid(zwp_, par_);
    inv_wp_ = inv_grid(wp_, par_);
    sigma_ = div_grid(lp_, wp_, par_);
    sigmap_ = sigma_.derivative();
    (void)N;
}

TangentTriple ManifoldPoint::pair_to_triple(const TangentPair& p) const {
    TangentTriple t;
    t.W = p.X + p.Xbar;
    t.Xv = p.Xbar.coeff(0);
    t.Xu = p.Xbar.coeff(-1) / eu_;
    return t;
}

TangentPair ManifoldPoint::triple_to_pair(const TangentTriple& t) const {
    TangentPair p;
    p.X = t.W.project_leq(0);
    p.X.add_coeff(0, -t.Xv);
    p.X.add_coeff(-1, -eu_ * t.Xu);
    p.Xbar = t.W.project_geq(1);
    p.Xbar.add_coeff(0, t.Xv);
    p.Xbar.add_coeff(-1, eu_ * t.Xu);
    return p;
}

cplx ManifoldPoint::metric(const TangentTriple& X, const TangentTriple& Y) const {
    const int M = par_.M;
    Vec wx = X.W.grid_values(M);
    Vec wy = Y.W.grid_values(M);
    Vec wp = wp_.grid_values(M);
    const Vec& z = unit_roots(M);
    cplx acc = 0.0;
    for (int j = 0; j < M; ++j) acc += wx(j) * wy(j) / (z(j) * wp(j));
    acc /= double(M);
    return acc + X.Xv * Y.Xu + X.Xu * Y.Xv;
}

TangentTriple ManifoldPoint::product(const TangentTriple& X, const TangentTriple& Y) const {
    const double th = par_.spill_threshold;
    LaurentSeries QY = mul(Y.W, inv_zwp_, th);     // Y / (z w')
    LaurentSeries YoverWp = mul(Y.W, inv_wp_, th); // Y / w'
    LaurentSeries zwp_pos = zwp_.project_geq(1);

    // First slot.
    LaurentSeries inner = Y.W.project_geq(1) - mul(zwp_pos, QY, th) + YoverWp;
    LaurentSeries QY_plus_Yu = QY;
    QY_plus_Yu.add_coeff(0, Y.Xu);
    inner += eu_ * LaurentSeries(mul(QY_plus_Yu, LaurentSeries::monomial(par_.N, -1), th));
    inner.add_coeff(0, Y.Xv);
    LaurentSeries first = mul(X.W, inner, th);

    LaurentSeries bracket =
        mul(X.W.project_geq(1), QY, th).project_leq(-1) -
        mul(X.W.project_leq(0), QY, th).project_geq(0);
    bracket += (eu_ * X.Xu) * mul(QY_plus_Yu, LaurentSeries::monomial(par_.N, -1), th);
    bracket += X.Xv * QY;
    first += mul(zwp_, bracket, th);

    // v slot.
    LaurentSeries xw_term = X.W + X.Xu * zwp_;
    cplx vslot = eu_ * mul(xw_term, QY_plus_Yu, th).coeff(1) - eu_ * X.Xu * Y.Xu +
                 X.Xv * Y.Xv;

    // u slot.
    cplx uslot = mul(X.W, QY, th).coeff(0) + X.Xu * Y.Xv + X.Xv * Y.Xu;

    return {std::move(first), vslot, uslot};
}

TangentTriple ManifoldPoint::euler_field() const {
    return {w_ - zwp_, v_, 2.0};
}

TangentTriple ManifoldPoint::apply_U_via_product(const TangentTriple& X) const {
    return product(euler_field(), X);
}

TangentTriple ManifoldPoint::apply_U(const TangentTriple& X) const {
    if (special_) {
        // (v + 2 e^u z^{-1}) X + 2 e^u X_u in the first slot.
        LaurentSeries first = v_ * X.W;
        first += (2.0 * eu_) * mul(X.W, LaurentSeries::monomial(par_.N, -1),
                                   par_.spill_threshold);
        first.add_coeff(0, 2.0 * eu_ * X.Xu);
        cplx vslot = 2.0 * eu_ * X.W.coeff(1) + v_ * X.Xv;
        cplx uslot = 2.0 * X.Xv + v_ * X.Xu;
        return {std::move(first), vslot, uslot};
    }
    const double th = par_.spill_threshold;
    LaurentSeries Q = mul(X.W, inv_zwp_, th);  // X / (z w')
    LaurentSeries Q_plus_Xu = Q;
    Q_plus_Xu.add_coeff(0, X.Xu);
    LaurentSeries e = w_ - zwp_;  // Euler z-slot
    LaurentSeries zinv = LaurentSeries::monomial(par_.N, -1);

    LaurentSeries inner = X.W.project_geq(1) - mul(zwp_.project_geq(1), Q, th) +
                          mul(X.W, inv_wp_, th);
    inner += eu_ * mul(Q_plus_Xu, zinv, th);
    inner.add_coeff(0, X.Xv);
    LaurentSeries first = mul(e, inner, th);

    LaurentSeries bracket = mul(e.project_geq(1), Q, th).project_leq(-1) -
                            mul(e.project_leq(0), Q, th).project_geq(0);
    bracket += 2.0 * eu_ * mul(Q_plus_Xu, zinv, th);
    bracket += v_ * Q;
    first += mul(zwp_, bracket, th);

    cplx vslot = eu_ * mul(w_ + zwp_, Q_plus_Xu, th).coeff(1) - 2.0 * eu_ * X.Xu +
                 v_ * X.Xv;
    cplx uslot = mul(e, Q, th).coeff(0) + 2.0 * X.Xv + v_ * X.Xu;
    return {std::move(first), vslot, uslot};
}

TangentTriple ManifoldPoint::apply_V(const TangentTriple& X) const {
    LaurentSeries S;
    if (special_) {
        S = X.W;  // w/(z w') = 1 at the special point
    } else {
        S = mul(mul(X.W, w_, par_.spill_threshold), inv_zwp_, par_.spill_threshold);
    }
    LaurentSeries first = (-0.5) * X.W + S.z_derivative();
    return {std::move(first), -0.5 * X.Xv, 0.5 * X.Xu};
}

ConditionReport ManifoldPoint::check_conditions(double floor) const {
    ConditionReport r;
    const int M = par_.M;
    r.leading_abs = std::abs(lambdabar_.coeff(-1));
    r.t1 = r.leading_abs > floor;

    Vec wp = wp_.grid_values(M);
    r.min_wprime = wp.cwiseAbs().minCoeff();
    r.t2 = r.min_wprime > floor;

    // Winding number of w(S^1) about 0 plus a sampled simplicity check.
    Vec wgrid = w_.grid_values(M);
    double total = 0.0;
    bool through_zero = false;
    for (int j = 0; j < M; ++j) {
        cplx a = wgrid(j), b = wgrid((j + 1) % M);
        if (std::abs(a) < floor) through_zero = true;
        total += std::arg(b / a);
    }
    r.winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
    r.min_curve_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < M; ++i) {
        for (int j = i + 2; j < M; ++j) {
            int sep = std::min(j - i, M - (j - i));
            if (sep < 2) continue;
            double d = std::abs(wgrid(i) - wgrid(j));
            r.min_curve_gap = std::min(r.min_curve_gap, d);
        }
    }
    r.simple = r.min_curve_gap > floor;
    r.t3 = (r.winding == 1) && r.simple && !through_zero;

    Vec sp = sigmap_.grid_values(M);
    r.min_sigmaprime = sp.cwiseAbs().minCoeff();
    r.t4 = r.min_sigmaprime > floor;

    Vec lp = lp_.grid_values(M);
    Vec lbp = lbp_.grid_values(M);
    r.min_lambdaprime = lp.cwiseAbs().minCoeff();
    r.min_lambdabarprime = lbp.cwiseAbs().minCoeff();
    r.t5 = r.min_lambdaprime > floor && r.min_lambdabarprime > floor;
    return r;
}

void ManifoldPoint::require_conditions(double floor) const {
    ConditionReport r = check_conditions(floor);
    if (!r.all())
        throw Error(ErrorKind::ConditionViolation,
                    std::string("point fails ") + (!r.t1 ? "T1 " : "") +
                        (!r.t2 ? "T2 " : "") + (!r.t3 ? "T3 " : "") +
                        (!r.t4 ? "T4 " : "") + (!r.t5 ? "T5" : ""));
}

}  // namespace toda
