#include "toda/manifold.hpp"

#include <random>

#include "doctest.h"

using namespace toda;

TEST_SUITE_BEGIN("manifold");

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
    for (int k = 0; k <= 7; ++k) {
        t.W.add_coeff(k, w * cplx(u(gen), u(gen)));
        if (k > 0) t.W.add_coeff(-k, w * cplx(u(gen), u(gen)));
        w *= 0.7;
    }
    return t;
}

}  // namespace

TEST_CASE("special point w-coordinates") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    // lambda = z - v - e^u/z, lambdabar = v + e^u/z
    CHECK(std::abs(pt.lambda().coeff(1) - 1.0) < 1e-15);
    CHECK(std::abs(pt.lambda().coeff(-1) + 0.5) < 1e-15);
    CHECK(std::abs(pt.lambdabar().coeff(-1) - 0.5) < 1e-15);
    auto wc = pt.to_w_coords();
    CHECK(std::abs(wc.w.coeff(1) - 1.0) < 1e-15);
    CHECK(std::abs(wc.v) < 1e-15);
    CHECK(std::abs(std::exp(wc.u) - 0.5) < 1e-15);
}

TEST_CASE("metric slot examples at the special point") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    TangentTriple e = TangentTriple::unit_field(32);
    TangentTriple eu{LaurentSeries::zero(32), 0.0, 1.0};
    CHECK(std::abs(pt.metric(e, e)) < 1e-13);
    CHECK(std::abs(pt.metric(e, eu) - 1.0) < 1e-13);
    std::mt19937_64 gen(5);
    for (int t = 0; t < 5; ++t) {
        TangentTriple X = random_triple(gen, 32), Y = random_triple(gen, 32);
        CHECK(std::abs(pt.metric(X, Y) - pt.metric(Y, X)) < 1e-12);
    }
}

TEST_CASE("product laws") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    std::mt19937_64 gen(6);
    TangentTriple e = TangentTriple::unit_field(32);
    for (int t = 0; t < 5; ++t) {
        TangentTriple X = random_triple(gen, 32), Y = random_triple(gen, 32),
                      Z = random_triple(gen, 32);
        TangentTriple eX = pt.product(e, X);
        eX -= X;
        CHECK(eX.norm() < 1e-12);
        TangentTriple ab = pt.product(X, Y), ba = pt.product(Y, X);
        ab -= ba;
        CHECK(ab.norm() < 1e-12);
        TangentTriple l = pt.product(pt.product(X, Y), Z);
        TangentTriple r = pt.product(X, pt.product(Y, Z));
        l -= r;
        CHECK(l.norm() < 1e-10);
        CHECK(std::abs(pt.metric(pt.product(X, Y), Z) -
                       pt.metric(X, pt.product(Y, Z))) < 1e-10);
    }
}

TEST_CASE("U at the special point maps e_u to the constant 2 e^u") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    TangentTriple eu{LaurentSeries::zero(32), 0.0, 1.0};
    TangentTriple U = pt.apply_U(eu);
    CHECK(std::abs(U.W.coeff(0) - 1.0) < 1e-14);  // 2 e^u = 1
    CHECK(std::abs(U.Xv) < 1e-14);
    CHECK(std::abs(U.Xu) < 1e-14);
}

TEST_CASE("two computation paths for U agree at a generic point") {
    TruncationParams par;
    par.N = 48;
    par.M = 256;
    LaurentSeries w = LaurentSeries::monomial(48, 1);
    w.add_coeff(2, 0.1);
    w.add_coeff(0, 0.2);
    w.add_coeff(-1, 0.3);
    ManifoldPoint pt = ManifoldPoint::from_w_coords(w, 0.2, std::log(0.5), par);
    std::mt19937_64 gen(8);
    for (int t = 0; t < 5; ++t) {
        TangentTriple X = random_triple(gen, 48);
        TangentTriple a = pt.apply_U(X), b = pt.apply_U_via_product(X);
        a -= b;
        CHECK(a.norm() < 1e-10);
        // U symmetric, V antisymmetric.
        TangentTriple Y = random_triple(gen, 48);
        CHECK(std::abs(pt.metric(pt.apply_U(X), Y) -
                       pt.metric(X, pt.apply_U(Y))) < 1e-10);
        CHECK(std::abs(pt.metric(pt.apply_V(X), Y) +
                       pt.metric(X, pt.apply_V(Y))) < 1e-10);
    }
}

TEST_CASE("condition reports") {
    ManifoldPoint good = ManifoldPoint::special_point(0.0, std::log(0.5), par32());
    CHECK(good.check_conditions().all());
    ManifoldPoint good4 = ManifoldPoint::special_point(0.0, std::log(4.0), par32());
    CHECK(good4.check_conditions().all());

    ManifoldPoint bad = ManifoldPoint::special_point(0.0, 0.0, par32());
    ConditionReport cr = bad.check_conditions();
    CHECK(!cr.t5);  // lambda' vanishes on S^1 when |e^u| = 1
    CHECK(cr.t2);
    CHECK(!cr.all());
}

TEST_CASE("pair and triple forms are inverse") {
    ManifoldPoint pt = ManifoldPoint::special_point(0.3, std::log(2.0), par32());
    std::mt19937_64 gen(9);
    TangentTriple X = random_triple(gen, 32);
    TangentTriple back = pt.pair_to_triple(pt.triple_to_pair(X));
    back -= X;
    CHECK(back.norm() < 1e-13);
    TangentPair pr = pt.triple_to_pair(X);
    for (int k = 1; k <= 32; ++k) CHECK(std::abs(pr.X.coeff(k)) < 1e-15);
    for (int k = -2; k >= -32; --k) CHECK(std::abs(pr.Xbar.coeff(k)) < 1e-15);
}

TEST_SUITE_END();
