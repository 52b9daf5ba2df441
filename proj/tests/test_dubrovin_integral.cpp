#include <random>

#include "doctest.h"
#include "toda/dubrovin.hpp"
#include "toda/integral.hpp"
#include "toda/resurgence.hpp"

using namespace toda;

TEST_SUITE_BEGIN("dubrovin");

namespace {

TruncationParams par32() {
    TruncationParams p;
    p.N = 32;
    p.M = 256;
    return p;
}

TangentTriple random_triple(std::mt19937_64& gen, int N, int support = 6) {
    std::uniform_real_distribution<double> u(-1, 1);
    TangentTriple t{LaurentSeries::zero(N), {u(gen), u(gen)}, {u(gen), u(gen)}};
    double w = 1.0;
    for (int k = 0; k <= support; ++k) {
        t.W.add_coeff(k, w * cplx(u(gen), u(gen)));
        if (k > 0) t.W.add_coeff(-k, w * cplx(u(gen), u(gen)));
        w *= 0.7;
    }
    return t;
}

}  // namespace

TEST_CASE("A_p is a left inverse of (u_p - U) and kills the unit field") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    cplx p = std::polar(1.0, 0.9);
    CHECK(apply_Ap(pt, p, TangentTriple::unit_field(32)).norm() == 0.0);
    std::mt19937_64 gen(21);
    cplx up = canonical_value(pt, p);
    for (int t = 0; t < 6; ++t) {
        TangentTriple X = random_triple(gen, 32);
        TangentTriple arg = X;
        arg *= up;
        arg -= pt.apply_U(X);
        TangentTriple back = apply_Ap(pt, p, arg);
        back -= X;
        CHECK(back.norm() < 1e-10 * (1 + X.norm()));
    }
    // Removable singularity has bounded coefficients.
    TangentTriple q = apply_Ap(pt, 1.0, TangentTriple::basis(32, 2));
    CHECK(q.W.max_abs_coeff() < 5.0);
}

TEST_CASE("continuous formal solution satisfies the recursion") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    cplx p = std::polar(1.0, kPi / 5.0);
    FormalDubrovinSolution sol = formal_continuous(pt, p, 5, {});
    std::mt19937_64 gen(22);
    std::vector<TangentTriple> batch;
    for (int t = 0; t < 6; ++t) batch.push_back(random_triple(gen, 32, 5));
    for (double r : recursion_residuals(pt, sol, batch)) CHECK(r < 1e-9);
    for (int k = 0; k <= 5; ++k)
        CHECK(std::abs(sol.terms[k].cv - sol.a[k]) < 1e-12);
}

TEST_CASE("discrete formal solution at e^u = 4") {
    TruncationParams par;
    par.N = 48;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(4.0), par);
    CriticalSet cs = find_critical_set(pt);
    REQUIRE(cs.outer.size() == 2);
    FormalDubrovinSolution sol =
        formal_discrete(pt, cs, DiscreteFamily::Outer, 0, 2);
    std::mt19937_64 gen(23);
    std::vector<TangentTriple> batch;
    for (int t = 0; t < 6; ++t) batch.push_back(random_triple(gen, 48, 5));
    for (double r : recursion_residuals(pt, sol, batch)) CHECK(r < 1e-9);

    // Leading term is du_i.
    TangentTriple want = du_discrete_representative(pt, cs.outer[0].z);
    TangentTriple diff = sol.representatives[0];
    diff -= want;
    CHECK(diff.norm() < 1e-8 * (1 + want.norm()));

    // The kernel constants are discretization independent.
    TruncationParams par2;
    par2.N = 48;
    par2.M = 320;
    ManifoldPoint pt2 = ManifoldPoint::special_point(0.0, std::log(4.0), par2);
    CriticalSet cs2 = find_critical_set(pt2);
    FormalDubrovinSolution sol2 =
        formal_discrete(pt2, cs2, DiscreteFamily::Outer, 0, 2);
    for (int k = 0; k <= 2; ++k)
        CHECK(std::abs(sol.a[k] - sol2.a[k]) < 1e-8 * (1.0 + std::abs(sol.a[k])));
}

TEST_CASE("dy_sigma solves the Dubrovin equation") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    cplx sigma = pt.sigma().eval(std::polar(1.0, 0.4));
    auto xi = [&](const CoverComplex& z, const TangentTriple& X) {
        return dy_sigma(pt, sigma, z, X);
    };
    std::mt19937_64 gen(24);
    TangentTriple X = random_triple(gen, 32, 5);
    ResidualResult rr = dubrovin_residual(pt, xi, CoverComplex(3.0, 0.5), X);
    CHECK(std::abs(rr.residual) < 1e-6 * rr.scale);
}

TEST_CASE("dy_sigma representative and antisymmetry") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    cplx sigma = 0.0;
    CoverComplex zeta(1.5, 0.2);
    TangentTriple rep = dy_representative(pt, sigma, zeta);
    std::mt19937_64 gen(25);
    for (int t = 0; t < 4; ++t) {
        TangentTriple X = random_triple(gen, 32, 5);
        cplx via = pt.metric(rep, X);
        cplx direct = dy_sigma(pt, sigma, zeta, X);
        CHECK(std::abs(via - direct) < 1e-9 * (1 + std::abs(direct)));
        cplx flipped = dy_sigma(pt, sigma, zeta.rotated(2.0 * kPi), X);
        CHECK(std::abs(flipped + direct) < 1e-12 * (1 + std::abs(direct)));
    }
}

TEST_CASE("saddle coefficients calibrate on the Gaussian") {
    LaurentSeries f(4);
    f.set_coeff(2, 1.0);
    std::vector<cplx> d =
        saddle_coeffs(f, LaurentSeries::constant(4, 1.0), 0.0, 2);
    CHECK(std::abs(d[0] - std::sqrt(kPi)) < 1e-13);
    CHECK(std::abs(d[1]) < 1e-13);
    CHECK(std::abs(d[2]) < 1e-13);
}

TEST_CASE("guards: quadrature convergence, step size, boundary roots, ties") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    cplx sigma = pt.sigma().eval(std::polar(1.0, 0.4));
    // Converged at moderate zeta.
    CHECK_NOTHROW(dy_sigma(pt, sigma, CoverComplex(2.0, 0.1),
                           TangentTriple::unit_field(32), true));
    // A coarse grid cannot hold the integrand at large zeta.
    TruncationParams coarse;
    coarse.N = 8;
    coarse.M = 36;
    ManifoldPoint small = ManifoldPoint::special_point(0.0, std::log(0.5), coarse);
    CHECK_THROWS_AS(dy_sigma(small, small.sigma().eval(1.0),
                             CoverComplex(40.0, 0.0),
                             TangentTriple::unit_field(8), true),
                    Error);
    // A huge finite-difference step trips the extrapolation guard.
    auto xi = [&](const CoverComplex& z, const TangentTriple& X) {
        return dy_sigma(pt, sigma, z, X);
    };
    CHECK_THROWS_AS(dubrovin_residual(pt, xi, CoverComplex(2.0, 0.3),
                                      TangentTriple::unit_field(32), 1.5),
                    Error);
    // Critical point exactly on |z| = 1.
    LaurentSeries lam = LaurentSeries::monomial(32, 1);
    lam.add_coeff(-1, 1.0);  // lambda' = 1 - 1/z^2, roots at +-1
    LaurentSeries lbar(32);
    lbar.set_coeff(-1, 0.05);
    ManifoldPoint onring(lam, lbar, par32());
    CHECK_THROWS_AS(find_critical_set(onring), Error);
    // Anti-Stokes tie.
    std::vector<cplx> uv = {cplx(1.0, 0.0), cplx(-1.0, 0.0)};
    CHECK_THROWS_AS(dominant_index(uv, kPi / 2.0), Error);
    CHECK(dominant_index(uv, 0.1) == 0);
}

TEST_CASE("incompleteness witness annihilates dy_sigma") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    CoverComplex zeta(2.0, 0.9);
    TangentTriple X = incompleteness_witness(pt, zeta);
    for (double th : {0.0, 1.0, 2.5}) {
        cplx sigma = pt.sigma().eval(std::polar(1.0, th));
        CHECK(std::abs(dy_sigma(pt, sigma, zeta, X)) < 1e-9);
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("resurgence");

TEST_CASE("phi series leading coefficients") {
    TruncationParams par;
    par.N = 32;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par);
    cplx p = std::polar(1.0, 0.2);
    GevreySeries s = phi_series(pt, p, 0, 10);
    CHECK(std::abs(s.coeffs[0] - 1.0 / std::sqrt(kPi)) < 1e-15);
    cplx want = p / (16.0 * std::sqrt(kPi) * pt.eu());
    CHECK(std::abs(s.coeffs[1] - want) < 1e-15);
    CHECK(std::isfinite(s.growth_certificate));
}

TEST_CASE("toy Borel-Laplace round trip") {
    cplx err = borel_laplace_toy_error(cplx(0.6, 0.25), 12, 0.3,
                                       CoverComplex(2.0, -0.2));
    CHECK(std::abs(err) < 1e-10);
}

TEST_CASE("ray resummation matches the closed form") {
    TruncationParams par;
    par.N = 32;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par);
    CoverComplex p(1.0, 0.0), zeta(3.0, -kPi / 4.0);
    cplx ray = laplace_ray(pt, p, 0, kPi / 2.0, zeta, 1e-12);
    cplx closed = resummed_closed_form(pt, p, 0, kPi / 2.0, zeta);
    CHECK(std::abs(ray - closed) < 1e-8 * (1.0 + std::abs(closed)));
}

TEST_CASE("ds monodromy and the dy difference") {
    TruncationParams par;
    par.N = 32;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par);
    CoverComplex p(1.0, 0.0), zeta(2.0, kPi / 6.0);
    CoverComplex pm = p.rotated(-kPi);
    for (int m : {-2, 0, 1, 3}) {
        cplx l = ds_coeff(pt, p, zeta.rotated(2.0 * kPi), m);
        cplx r = ds_coeff(pt, p, zeta, m) - 2.0 * ds_coeff(pt, pm, zeta, m);
        CHECK(std::abs(l - r) < 1e-11 * (1.0 + std::abs(r)));
        cplx dy = dy_sigma(pt, pt.sigma().eval(p.value()), zeta,
                           TangentTriple::basis(32, m));
        cplx diff = ds_coeff(pt, p, zeta, m) - ds_coeff(pt, pm, zeta, m);
        CHECK(std::abs(dy - diff) < 1e-10 * (1.0 + std::abs(dy)));
    }
}

TEST_CASE("completeness probe and reconstruction") {
    TruncationParams par;
    par.N = 32;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par);
    CoverComplex zeta(2.0, 0.0);
    CompletenessReport cr = completeness_probe(pt, zeta, 16, 3, 0.15);
    CHECK(cr.rank == 9);
    CHECK_THROWS_AS(completeness_probe(pt, zeta, 3, 3, 0.0), Error);

    TangentTriple X{LaurentSeries::zero(8), 1.0, 2.0};
    X.W.set_coeff(2, 1.0);
    X.W.set_coeff(-1, -3.0);
    TangentTriple got = reconstruct_from_ds(pt, zeta, X, 32, 0.1);
    CHECK(std::abs(got.W.coeff(2) - 1.0) < 1e-7);
    CHECK(std::abs(got.W.coeff(-1) + 3.0) < 1e-7);
    CHECK(std::abs(got.Xv - 1.0) < 1e-7);
    CHECK(std::abs(got.Xu - 2.0) < 1e-7);
}

TEST_CASE("stokes pair recovers the matrices") {
    TruncationParams par;
    par.N = 32;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par);
    StokesPairResult sp = stokes_pair(pt, CoverComplex(1.0, 0.0), 0.0, 5.0, 0.1);
    CHECK(std::abs(sp.S_minus(0, 0) - 1.0) < 1e-10);
    CHECK(std::abs(sp.S_minus(1, 0) + 2.0) < 1e-10);
    CHECK(std::abs(sp.S_minus(0, 1)) < 1e-10);
    CHECK(std::abs(sp.S_plus(0, 1) + 2.0) < 1e-10);
    CHECK(std::abs(sp.S_plus(1, 0)) < 1e-10);
}

TEST_SUITE_END();
