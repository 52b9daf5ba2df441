#include "toda/canonical.hpp"

#include <random>

#include "doctest.h"

using namespace toda;

TEST_SUITE_BEGIN("canonical");

namespace {

TruncationParams par32() {
    TruncationParams p;
    p.N = 32;
    p.M = 256;
    return p;
}

TangentTriple random_triple(std::mt19937_64& gen, int N) {
    std::uniform_real_distribution<double> u(-1, 1);
    TangentTriple t{LaurentSeries::zero(N), {u(gen), u(gen)}, {u(gen), u(gen)}};
    double w = 1.0;
    for (int k = 0; k <= 6; ++k) {
        t.W.add_coeff(k, w * cplx(u(gen), u(gen)));
        if (k > 0) t.W.add_coeff(-k, w * cplx(u(gen), u(gen)));
        w *= 0.7;
    }
    return t;
}

}  // namespace

TEST_CASE("sigma curve at the special point") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    LaurentSeries s = sigma_curve(pt);
    CHECK(std::abs(s.coeff(0) - 1.0) < 1e-13);
    CHECK(std::abs(s.coeff(-2) - 0.5) < 1e-13);
    CHECK(std::abs(s.eval(1.0) - 1.5) < 1e-13);
    CHECK(std::abs(canonical_value(pt, 1.0) - 1.0) < 1e-13);
}

TEST_CASE("critical sets of the presets") {
    ManifoldPoint p4 = ManifoldPoint::special_point(0.0, std::log(4.0), par32());
    CriticalSet cs = find_critical_set(p4);
    REQUIRE(cs.outer.size() == 2);
    CHECK(cs.inner.empty());
    bool seen_plus = false, seen_minus = false;
    for (const auto& r : cs.outer) {
        CHECK(std::abs(std::abs(r.z) - 2.0) < 1e-10);
        // u = -lambda(z) with lambda = z - 4/z; the values are -+4i at +-2i.
        CHECK(std::abs(r.u + (r.z - 4.0 / r.z)) < 1e-9);
        if (std::abs(r.u - cplx(0, 4)) < 1e-9) seen_plus = true;
        if (std::abs(r.u + cplx(0, 4)) < 1e-9) seen_minus = true;
    }
    CHECK(seen_plus);
    CHECK(seen_minus);
    ManifoldPoint ph = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    CriticalSet cs2 = find_critical_set(ph);
    CHECK(cs2.outer.empty());
    CHECK(cs2.inner.empty());
}

TEST_CASE("du_p acts by the closed formula at the special point") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    std::mt19937_64 gen(4);
    TangentTriple X = random_triple(gen, 32);
    cplx p = std::polar(1.0, 0.8);
    cplx want = 0.5 / (p * p) * X.W.eval(p) + X.W.project_geq(1).eval(p) + X.Xv +
                0.5 / p * X.Xu;
    CHECK(std::abs(du_p_eval(pt, p, X) - want) < 1e-12);
    WeakFunctional f = du_p_functional(pt, p);
    CHECK(std::abs(f.eval(X) - want) < 1e-12);
}

TEST_CASE("generalized eigen-equation for du_p") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.1, std::log(0.5), par32());
    std::mt19937_64 gen(12);
    for (int t = 0; t < 4; ++t) {
        TangentTriple X = random_triple(gen, 32);
        TangentTriple UX = pt.apply_U(X);
        for (double th : {0.0, 1.1, 2.7, 4.9}) {
            cplx p = std::polar(1.0, th);
            cplx up = canonical_value(pt, p);
            CHECK(std::abs(du_p_eval(pt, p, UX) - up * du_p_eval(pt, p, X)) <
                  1e-10 * (1 + X.norm()));
        }
    }
}

TEST_CASE("psi inverse undoes psi forward with discrete slots") {
    ManifoldPoint p4 =
        ManifoldPoint::special_point(0.0, std::log(4.0),
                                     [] {
                                         TruncationParams p;
                                         p.N = 48;
                                         p.M = 256;
                                         return p;
                                     }());
    CriticalSet cs = find_critical_set(p4);
    REQUIRE(cs.outer.size() == 2);
    std::mt19937_64 gen(13);
    for (int t = 0; t < 4; ++t) {
        TangentTriple X = random_triple(gen, 48);
        PsiData Y = psi_forward(p4, cs, X);
        TangentTriple back = psi_inverse(p4, cs, Y);
        back -= X;
        CHECK(back.norm() < 1e-8 * (1 + X.norm()));
    }
}

TEST_CASE("key lemma residual vanishes") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.2, std::log(0.5), par32());
    std::mt19937_64 gen(14);
    // X = e_v: E(z) = -z lambda_sigma'(z) exactly; the residual subtracts it.
    LaurentSeries r1 =
        key_lemma_residual(pt, cplx(0.4, 0.1), TangentTriple::unit_field(32));
    CHECK(r1.sup_norm_grid(256) < 1e-12);
    // X = e_u: E(z) = 0.
    LaurentSeries r2 = key_lemma_residual(
        pt, cplx(-0.3, 0.7), TangentTriple{LaurentSeries::zero(32), 0.0, 1.0});
    CHECK(r2.sup_norm_grid(256) < 1e-12);
    for (int t = 0; t < 5; ++t) {
        cplx sigma(std::uniform_real_distribution<double>(-1, 1)(gen),
                   std::uniform_real_distribution<double>(-1, 1)(gen));
        TangentTriple X = random_triple(gen, 32);
        LaurentSeries r = key_lemma_residual(pt, sigma, X);
        CHECK(r.sup_norm_grid(256) < 1e-9 * (1 + X.norm()));
    }
}

TEST_CASE("metric in canonical coordinates is diagonal") {
    TruncationParams par;
    par.N = 48;
    par.M = 256;
    ManifoldPoint p4 = ManifoldPoint::special_point(0.0, std::log(4.0), par);
    CriticalSet cs = find_critical_set(p4);
    std::mt19937_64 gen(15);
    for (int t = 0; t < 5; ++t) {
        TangentTriple X = random_triple(gen, 48), Y = random_triple(gen, 48);
        PsiData px = psi_forward(p4, cs, X), py = psi_forward(p4, cs, Y);
        cplx lhs = metric_canonical(p4, cs, px, py);
        cplx rhs = p4.metric(X, Y);
        CHECK(std::abs(lhs - rhs) < 1e-8 * (1 + std::abs(rhs)));
    }
}

TEST_SUITE_END();
