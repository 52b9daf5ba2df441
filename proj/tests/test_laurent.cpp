#include "toda/laurent.hpp"

#include <random>

#include "doctest.h"

using namespace toda;

TEST_SUITE_BEGIN("laurent");

TEST_CASE("projections select coefficients exactly") {
    // f = z + 2 + 3 z^{-1}
    LaurentSeries f(4);
    f.set_coeff(1, 1.0);
    f.set_coeff(0, 2.0);
    f.set_coeff(-1, 3.0);

    LaurentSeries hi = project(f, ProjectMode::Geq, 1);
    CHECK(hi.coeff(1) == cplx(1.0));
    CHECK(hi.coeff(0) == cplx(0.0));
    CHECK(hi.coeff(-1) == cplx(0.0));

    CHECK(f.coeff_at(0) == cplx(2.0));

    LaurentSeries lo = project(f, ProjectMode::Leq, 0);
    CHECK(lo.coeff(1) == cplx(0.0));
    CHECK(lo.coeff(0) == cplx(2.0));
    CHECK(lo.coeff(-1) == cplx(3.0));
}

TEST_CASE("multiplication on small examples") {
    LaurentSeries z = LaurentSeries::monomial(4, 1);
    LaurentSeries zi = LaurentSeries::monomial(4, -1);
    LaurentSeries one = mul(z, zi);
    CHECK(std::abs(one.coeff(0) - 1.0) < 1e-15);
    CHECK(one.max_abs_coeff() == 1.0);

    LaurentSeries a = LaurentSeries::constant(4, 1.0);
    a.add_coeff(1, 1.0);  // 1 + z
    LaurentSeries b = LaurentSeries::constant(4, 1.0);
    b.add_coeff(1, -1.0);  // 1 - z
    LaurentSeries ab = mul(a, b);
    CHECK(std::abs(ab.coeff(0) - 1.0) < 1e-15);
    CHECK(std::abs(ab.coeff(2) + 1.0) < 1e-15);
    CHECK(std::abs(ab.coeff(1)) < 1e-15);

    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(-1, 1);
    LaurentSeries f(6);
    for (int k = -6; k <= 6; ++k) f.set_coeff(k, {dist(gen), dist(gen)});
    LaurentSeries idm = mul(f, LaurentSeries::constant(6, 1.0));
    for (int k = -6; k <= 6; ++k)
        CHECK(std::abs(idm.coeff(k) - f.coeff(k)) < 1e-15);
}

TEST_CASE("derivative and contour mean") {
    LaurentSeries z2 = LaurentSeries::monomial(4, 2);
    LaurentSeries d = z2.derivative();
    CHECK(std::abs(d.coeff(1) - 2.0) < 1e-15);

    LaurentSeries f(4);
    f.set_coeff(1, 1.0);
    f.set_coeff(0, 5.0);
    f.set_coeff(-1, 1.0);
    CHECK(std::abs(f.contour_mean() - 5.0) < 1e-15);

    // contour_mean((z+1)/z) = 1
    LaurentSeries g(4);
    g.set_coeff(0, 1.0);
    g.set_coeff(-1, 1.0);
    CHECK(std::abs(g.contour_mean() - 1.0) < 1e-15);

    // Quadrature/coefficient duality.
    CHECK(std::abs(contour_mean_quadrature(f.grid_values(64)) - 5.0) < 1e-12);
}

TEST_CASE("grid representation round trip") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(-1, 1);
    const int N = 12, M = 4 * N + 1;
    LaurentSeries f(N);
    for (int k = -N; k <= N; ++k) f.set_coeff(k, {u(gen), u(gen)});
    LaurentSeries back = LaurentSeries::from_grid(f.grid_values(M), N, 1.0);
    for (int k = -N; k <= N; ++k)
        CHECK(std::abs(back.coeff(k) - f.coeff(k)) <= 1e-12 * (1 + f.max_abs_coeff()));
}

TEST_CASE("product bilinearity and commutativity at tolerance") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1, 1);
    const int N = 10;
    auto rnd = [&] {
        LaurentSeries f(N);
        for (int k = -5; k <= 5; ++k) f.set_coeff(k, {u(gen), u(gen)});
        return f;
    };
    LaurentSeries f = rnd(), g = rnd(), h = rnd();
    LaurentSeries lhs = mul(f, g + h);
    LaurentSeries rhs = mul(f, g) + mul(f, h);
    LaurentSeries comm = mul(g, f);
    for (int k = -N; k <= N; ++k) {
        CHECK(std::abs(lhs.coeff(k) - rhs.coeff(k)) < 1e-12);
        CHECK(std::abs(mul(f, g).coeff(k) - comm.coeff(k)) < 1e-12);
    }
}

TEST_CASE("spill is detected") {
    LaurentSeries zN = LaurentSeries::monomial(4, 4);
    LaurentSeries prod = mul(zN, zN);  // z^8 falls outside the window
    CHECK(prod.under_resolved());
    CHECK(prod.spill() > 0.5);
}

TEST_CASE("grid division checks the floor") {
    TruncationParams par;
    par.N = 8;
    par.M = 64;
    LaurentSeries one = LaurentSeries::constant(8, 1.0);
    LaurentSeries g = LaurentSeries::monomial(8, 1);
    g.add_coeff(0, 1.0);  // z + 1 vanishes on the grid circle at z = -1
    CHECK_THROWS_AS(div_grid(one, g, par), Error);

    LaurentSeries safe = LaurentSeries::monomial(8, 1);
    safe.add_coeff(0, 3.0);
    LaurentSeries q = div_grid(one, safe, par);
    // 1/(3+z) = 1/3 - z/9 + ...
    CHECK(std::abs(q.coeff(0) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(q.coeff(1) + 1.0 / 9.0) < 1e-12);
}

TEST_SUITE_END();
