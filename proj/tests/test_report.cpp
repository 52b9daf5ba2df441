#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "toda/json_io.hpp"
#include "toda/suites.hpp"

using namespace toda;

TEST_SUITE_BEGIN("report");

TEST_CASE("series JSON round trip") {
    LaurentSeries f(3);
    f.set_coeff(-3, {0.5, -1.0});
    f.set_coeff(0, 2.0);
    f.set_coeff(2, {0.0, 0.25});
    LaurentSeries g = series_from_json(series_to_json(f));
    for (int k = -3; k <= 3; ++k) CHECK(f.coeff(k) == g.coeff(k));
}

TEST_CASE("point JSON and presets") {
    TruncationParams par;
    par.N = 16;
    par.M = 80;
    ManifoldPoint pt = point_from_spec("special:0.25,0.5", par);
    CHECK(std::abs(pt.v() - 0.25) < 1e-15);
    CHECK(std::abs(pt.eu() - 0.5) < 1e-15);
    ManifoldPoint back = point_from_json(point_to_json(pt), par);
    for (int k = -16; k <= 16; ++k) {
        CHECK(std::abs(pt.lambda().coeff(k) - back.lambda().coeff(k)) < 1e-15);
        CHECK(std::abs(pt.lambdabar().coeff(k) - back.lambdabar().coeff(k)) < 1e-15);
    }
    CHECK_THROWS_AS(point_from_spec("nonsense", par), Error);
}

TEST_CASE("critical set and formal solution JSON") {
    TruncationParams par;
    par.N = 32;
    par.M = 256;
    ManifoldPoint pt = ManifoldPoint::special_point(0.0, std::log(4.0), par);
    CriticalSet cs = find_critical_set(pt);
    CriticalSet back = critical_set_from_json(critical_set_to_json(cs));
    REQUIRE(back.outer.size() == cs.outer.size());
    for (size_t i = 0; i < cs.outer.size(); ++i) {
        CHECK(std::abs(back.outer[i].z - cs.outer[i].z) < 1e-15);
        CHECK(std::abs(back.outer[i].u - cs.outer[i].u) < 1e-15);
    }

    ManifoldPoint p1 = ManifoldPoint::special_point(0.0, std::log(0.5), par);
    FormalDubrovinSolution sol = formal_continuous(p1, 1.0, 2, {});
    std::string js = formal_solution_to_json(sol);
    CHECK(js.find("\"a\"") != std::string::npos);
    CHECK(js.find("\"u_value\"") != std::string::npos);

    PsiData d;
    d.cont = Vec::Zero(4);
    d.outer = Vec::Zero(1);
    d.inner = Vec::Zero(0);
    CHECK(psi_data_to_json(d).find("continuous") != std::string::npos);
}

TEST_CASE("config parsing and validation") {
    RunConfig cfg;
    cfg.apply_kv("N", "24");
    cfg.apply_kv("M", "128");
    cfg.apply_kv("suites", "metric,stokes");
    cfg.apply_kv("seed", "99");
    cfg.apply_kv("tol.stokes.S-minus", "1e-8");
    CHECK(cfg.truncation.N == 24);
    CHECK(cfg.suites.size() == 2);
    CHECK(cfg.tolerance_overrides.at("stokes.S-minus") == 1e-8);
    cfg.validate();

    RunConfig empty;
    empty.suites.clear();
    CHECK_THROWS_AS(empty.validate(), Error);

    RunConfig bad;
    bad.suites = {"no-such-suite"};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("plot data names are checked") {
    RunConfig cfg;
    cfg.suites = {"metric"};
    CHECK_THROWS_AS(emit_plot_data(cfg, "no-such-series"), Error);
    CHECK(emit_plot_data(cfg, "sector-map").rfind("arg_zeta", 0) == 0);
}

TEST_CASE("reports are deterministic for a fixed config") {
    RunConfig cfg;
    cfg.suites = {"specfun-selftest"};
    cfg.seed = 4242;
    Report a = run_suite(cfg);
    Report b = run_suite(cfg);
    CHECK(a.to_json_string() == b.to_json_string());
    CHECK(a.records.size() > 5);
}

TEST_CASE("tolerance overrides flip records") {
    RunConfig cfg;
    cfg.suites = {"specfun-selftest"};
    cfg.tolerance_overrides["specfun.K0-at-1"] = 1e-300;  // unachievable
    Report r = run_suite(cfg);
    bool found = false;
    for (const auto& rec : r.records)
        if (rec.name == "specfun.K0-at-1") {
            found = true;
            CHECK(!rec.pass);
        }
    CHECK(found);
    CHECK(!r.all_pass());
}

TEST_SUITE_END();
