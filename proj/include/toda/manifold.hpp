#pragma once

#include "toda/laurent.hpp"

namespace toda {

// Tangent vector in w-coordinates: (W(z), X_v, X_u) in H(S^1) + C^2.
struct TangentTriple {
    LaurentSeries W;
    cplx Xv = 0.0;
    cplx Xu = 0.0;

    TangentTriple() = default;
    TangentTriple(LaurentSeries w, cplx xv, cplx xu)
        : W(std::move(w)), Xv(xv), Xu(xu) {}

    static TangentTriple unit_field(int N) {
        return {LaurentSeries::zero(N), 1.0, 0.0};
    }
    static TangentTriple basis(int N, int m) {
        return {LaurentSeries::monomial(N, m), 0.0, 0.0};
    }

    double norm() const {
        return std::max({W.max_abs_coeff(), std::abs(Xv), std::abs(Xu)});
    }

    TangentTriple& operator+=(const TangentTriple& o) {
        W += o.W; Xv += o.Xv; Xu += o.Xu;
        return *this;
    }
    TangentTriple& operator-=(const TangentTriple& o) {
        W -= o.W; Xv -= o.Xv; Xu -= o.Xu;
        return *this;
    }
    TangentTriple& operator*=(cplx s) {
        W *= s; Xv *= s; Xu *= s;
        return *this;
    }
    friend TangentTriple operator+(TangentTriple a, const TangentTriple& b) { return a += b; }
    friend TangentTriple operator-(TangentTriple a, const TangentTriple& b) { return a -= b; }
    friend TangentTriple operator*(cplx s, TangentTriple a) { return a *= s; }
};

// Tangent vector in pair form: X(z) with powers <= 0, Xbar(z) with powers >= -1.
struct TangentPair {
    LaurentSeries X;
    LaurentSeries Xbar;
};

struct ConditionReport {
    bool t1 = false, t2 = false, t3 = false, t4 = false, t5 = false;
    double leading_abs = 0.0;   // |ubar_{-1}|
    double min_wprime = 0.0;
    int winding = 0;
    double min_curve_gap = 0.0;  // pairwise separation of the sampled w-curve
    bool simple = false;
    double min_sigmaprime = 0.0;
    double min_lambdaprime = 0.0;
    double min_lambdabarprime = 0.0;
    bool all() const { return t1 && t2 && t3 && t4 && t5; }
};

// A point of M_0 given by the two superpotentials
//   lambda(z)    = z + sum_{k<=0} u_k z^k       (holomorphic outside the disc)
//   lambdabar(z) = sum_{k>=-1} ubar_k z^k       (holomorphic inside)
// with derived data cached on construction.
class ManifoldPoint {
  public:
    ManifoldPoint(LaurentSeries lambda, LaurentSeries lambdabar,
                  TruncationParams par, cplx u_branch_hint = cplx(0, 0),
                  bool has_hint = false);

    // (w, v, u) -> point. u is the chosen logarithm of ubar_{-1}; it is stored
    // as given and never re-branched.
    static ManifoldPoint from_w_coords(const LaurentSeries& w, cplx v, cplx u,
                                       TruncationParams par);

    // The special point lambda_0 = (z, v, u).
    static ManifoldPoint special_point(cplx v, cplx u, TruncationParams par);

    const TruncationParams& params() const { return par_; }
    const LaurentSeries& lambda() const { return lambda_; }
    const LaurentSeries& lambdabar() const { return lambdabar_; }
    const LaurentSeries& w() const { return w_; }
    const LaurentSeries& wprime() const { return wp_; }
    const LaurentSeries& zwprime() const { return zwp_; }
    const LaurentSeries& lambdaprime() const { return lp_; }
    const LaurentSeries& lambdabarprime() const { return lbp_; }
    cplx v() const { return v_; }
    cplx u() const { return u_; }
    cplx eu() const { return eu_; }
    bool is_special() const { return special_; }

    struct WCoords { LaurentSeries w; cplx v; cplx u; };
    WCoords to_w_coords() const { return {w_, v_, u_}; }

    TangentTriple pair_to_triple(const TangentPair& p) const;
    TangentPair triple_to_pair(const TangentTriple& t) const;

    // eta(X,Y) = (1/2*pi*i) \oint W_X W_Y / (z^2 w') dz + Xv Yu + Xu Yv.
    // The integrand takes the H(S^1) components of the triples; this is the
    // convention under which eta is symmetric, U-compatible, and agrees with
    // the diagonal form in canonical coordinates.
    cplx metric(const TangentTriple& X, const TangentTriple& Y) const;

    TangentTriple product(const TangentTriple& X, const TangentTriple& Y) const;

    TangentTriple euler_field() const;

    // Multiplication by the Euler field, via the expanded formula.
    TangentTriple apply_U(const TangentTriple& X) const;
    // Same operator computed as product(E, X); the two must agree.
    TangentTriple apply_U_via_product(const TangentTriple& X) const;

    TangentTriple apply_V(const TangentTriple& X) const;

    ConditionReport check_conditions(double floor = 1e-6) const;
    void require_conditions(double floor = 1e-6) const;

    // sigma(z) = lambda' / (lambda' + lambdabar'), cached.
    const LaurentSeries& sigma() const { return sigma_; }
    const LaurentSeries& sigmaprime() const { return sigmap_; }

  private:
    void build_cache();

    TruncationParams par_;
    LaurentSeries lambda_, lambdabar_;
    cplx v_ = 0.0, u_ = 0.0, eu_ = 0.0;
    bool special_ = false;

    LaurentSeries w_, wp_, zwp_, lp_, lbp_, inv_zwp_, inv_wp_, sigma_, sigmap_;
};

}  // namespace toda
