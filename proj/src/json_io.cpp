#include "toda/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toda {

using nlohmann::ordered_json;

namespace {

ordered_json series_json(const LaurentSeries& f) {
    ordered_json j;
    j["N"] = f.order();
    ordered_json arr = ordered_json::array();
    for (int k = -f.order(); k <= f.order(); ++k) {
        cplx c = f.coeff(k);
        arr.push_back({c.real(), c.imag()});
    }
    j["coeffs"] = arr;
    return j;
}

LaurentSeries series_parse(const ordered_json& j) {
    int N = j.at("N").get<int>();
    const auto& arr = j.at("coeffs");
    if (static_cast<int>(arr.size()) != 2 * N + 1)
        throw Error(ErrorKind::ConfigInvalid, "coeffs length must be 2N+1");
    LaurentSeries f(N);
    for (int i = 0; i < 2 * N + 1; ++i)
        f.set_coeff(i - N, cplx(arr[i][0].get<double>(), arr[i][1].get<double>()));
    return f;
}

}  // namespace

std::string series_to_json(const LaurentSeries& f) { return series_json(f).dump(); }

LaurentSeries series_from_json(const std::string& text) {
    return series_parse(ordered_json::parse(text));
}

std::string point_to_json(const ManifoldPoint& pt) {
    ordered_json j;
    j["w"] = series_json(pt.w());
    j["v"] = {pt.v().real(), pt.v().imag()};
    j["u"] = {pt.u().real(), pt.u().imag()};
    return j.dump(2);
}

ManifoldPoint point_from_json(const std::string& text, TruncationParams par) {
    ordered_json j = ordered_json::parse(text);
    if (j.contains("w")) {
        LaurentSeries w = series_parse(j.at("w"));
        cplx v(j.at("v")[0].get<double>(), j.at("v")[1].get<double>());
        cplx u(j.at("u")[0].get<double>(), j.at("u")[1].get<double>());
        return ManifoldPoint::from_w_coords(w, v, u, par);
    }
    if (j.contains("lambda") && j.contains("lambdabar")) {
        return ManifoldPoint(series_parse(j.at("lambda")),
                             series_parse(j.at("lambdabar")), par);
    }
    throw Error(ErrorKind::ConfigInvalid,
                "point JSON needs either w/v/u or lambda/lambdabar");
}

namespace {

ordered_json cplx_json(cplx z) { return {z.real(), z.imag()}; }
cplx cplx_parse(const ordered_json& j) {
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string critical_set_to_json(const CriticalSet& cs) {
    ordered_json j;
    for (const char* side : {"outer", "inner"}) {
        const auto& roots = side == std::string("outer") ? cs.outer : cs.inner;
        ordered_json arr = ordered_json::array();
        for (const auto& r : roots) {
            ordered_json e;
            e["z"] = cplx_json(r.z);
            e["u"] = cplx_json(r.u);
            e["second"] = cplx_json(r.second);
            arr.push_back(e);
        }
        j[side] = arr;
    }
    return j.dump(2);
}

CriticalSet critical_set_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    CriticalSet cs;
    for (const auto& e : j.at("outer"))
        cs.outer.push_back({cplx_parse(e.at("z")), cplx_parse(e.at("u")),
                            cplx_parse(e.at("second"))});
    for (const auto& e : j.at("inner"))
        cs.inner.push_back({cplx_parse(e.at("z")), cplx_parse(e.at("u")),
                            cplx_parse(e.at("second"))});
    return cs;
}

std::string psi_data_to_json(const PsiData& d) {
    ordered_json j;
    auto vec = [](const Vec& v) {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < v.size(); ++i) arr.push_back({v(i).real(), v(i).imag()});
        return arr;
    };
    j["continuous"] = vec(d.cont);
    j["outer"] = vec(d.outer);
    j["inner"] = vec(d.inner);
    return j.dump();
}

std::string formal_solution_to_json(const FormalDubrovinSolution& sol) {
    ordered_json j;
    j["u_value"] = cplx_json(sol.u_value);
    ordered_json a = ordered_json::array();
    for (const auto& c : sol.a) a.push_back(cplx_json(c));
    j["a"] = a;
    ordered_json terms = ordered_json::array();
    for (const auto& t : sol.terms) {
        ordered_json e;
        e["N"] = t.N;
        ordered_json cm = ordered_json::array();
        for (int m = -t.N; m <= t.N; ++m) cm.push_back(cplx_json(t.coeff(m)));
        e["coeffs"] = cm;
        e["cv"] = cplx_json(t.cv);
        e["cu"] = cplx_json(t.cu);
        terms.push_back(e);
    }
    j["terms"] = terms;
    return j.dump();
}

ManifoldPoint point_from_spec(const std::string& spec, TruncationParams par) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in)
            throw Error(ErrorKind::ConfigInvalid, "cannot open " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return point_from_json(ss.str(), par);
    }
    const std::string prefix = "special:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string rest = spec.substr(prefix.size());
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorKind::ConfigInvalid, "expected special:v,e_u");
        double v = std::stod(rest.substr(0, comma));
        double eu = std::stod(rest.substr(comma + 1));
        if (eu <= 0.0)
            throw Error(ErrorKind::ConfigInvalid, "preset e_u must be positive");
        return ManifoldPoint::special_point(v, std::log(eu), par);
    }
    throw Error(ErrorKind::ConfigInvalid, "unrecognized point spec: " + spec);
}

}  // namespace toda
