#include "toda/laurent.hpp"

#include <map>
#include <mutex>

namespace toda {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnderResolved: return "UnderResolved";
        case ErrorKind::T1Violation: return "T1Violation";
        case ErrorKind::T2Violation: return "T2Violation";
        case ErrorKind::ConditionViolation: return "ConditionViolation";
        case ErrorKind::BoundaryRoot: return "BoundaryRoot";
        case ErrorKind::DegenerateCritical: return "DegenerateCritical";
        case ErrorKind::SolvabilityFailure: return "SolvabilityFailure";
        case ErrorKind::StepTooLarge: return "StepTooLarge";
        case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
        case ErrorKind::DegenerateSaddle: return "DegenerateSaddle";
        case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
        case ErrorKind::AntiStokesDirection: return "AntiStokesDirection";
        case ErrorKind::StokesRay: return "StokesRay";
        case ErrorKind::OutOfSector: return "OutOfSector";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::IllConditioned: return "IllConditioned";
        case ErrorKind::OverlapMismatch: return "OverlapMismatch";
        case ErrorKind::ParameterOutOfScope: return "ParameterOutOfScope";
        case ErrorKind::ConfigInvalid: return "ConfigInvalid";
        case ErrorKind::MissingSeries: return "MissingSeries";
    }
    return "Error";
}

const Vec& unit_roots(int M) {
    static std::map<int, Vec> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    Vec r(M);
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * kPi * j / M;
        r(j) = cplx(std::cos(th), std::sin(th));
    }
    return cache.emplace(M, std::move(r)).first->second;
}

cplx LaurentSeries::eval(cplx z) const {
    // Horner on the polynomial part in z and on the principal part in 1/z.
    cplx pos = 0.0;
    for (int k = N_; k >= 1; --k) pos = (pos + coeff(k)) * z;
    int lowest = -N_;
    while (lowest <= -1 && coeff(lowest) == cplx(0.0)) ++lowest;
    cplx neg = 0.0;
    if (lowest <= -1) {
        cplx zi = 1.0 / z;
        for (int k = lowest; k <= -1; ++k) neg = (neg + coeff(k)) * zi;
    }
    return pos + coeff(0) + neg;
}

Vec LaurentSeries::grid_values(int M) const {
    Vec out(M);
    const Vec& z = unit_roots(M);
    for (int j = 0; j < M; ++j) out(j) = eval(z(j));
    return out;
}

LaurentSeries LaurentSeries::from_grid(const Vec& values, int N,
                                       double spill_threshold) {
    const int M = static_cast<int>(values.size());
    const Vec& z = unit_roots(M);
    LaurentSeries f(N);
    for (int k = -N; k <= N; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < M; ++j) {
            // z_j^{-k} = conj(z_j)^k on the unit circle
            int idx = ((-k % M) * j) % M;
            if (idx < 0) idx += M;
            acc += values(j) * z(idx);
        }
        f.set_coeff(k, acc / double(M));
    }
    if (!f.truncation_honest(spill_threshold)) {
        double edge = std::max(std::abs(f.coeff(N)), std::abs(f.coeff(-N)));
        f.flag_under_resolved(edge / (f.max_abs_coeff() + 1e-300));
    }
    return f;
}

LaurentSeries LaurentSeries::project_geq(int p) const {
    LaurentSeries g(N_);
    for (int k = std::max(p, -N_); k <= N_; ++k) g.set_coeff(k, coeff(k));
    g.inherit_flags(*this);
    return g;
}

LaurentSeries LaurentSeries::project_leq(int p) const {
    LaurentSeries g(N_);
    for (int k = -N_; k <= std::min(p, N_); ++k) g.set_coeff(k, coeff(k));
    g.inherit_flags(*this);
    return g;
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries g(N_);
    for (int k = -N_ + 1; k <= N_; ++k) g.set_coeff(k - 1, double(k) * coeff(k));
    double lost = std::abs(double(-N_) * coeff(-N_));
    if (lost > 0) {
        double scale = max_abs_coeff() + 1e-300;
        if (lost / scale > 1e-14) g.flag_under_resolved(lost / scale);
    }
    g.inherit_flags(*this);
    return g;
}

LaurentSeries LaurentSeries::z_derivative() const {
    LaurentSeries g(N_);
    for (int k = -N_; k <= N_; ++k) g.set_coeff(k, double(k) * coeff(k));
    g.inherit_flags(*this);
    return g;
}

LaurentSeries LaurentSeries::resized(int N) const {
    LaurentSeries g(N);
    for (int k = std::max(-N, -N_); k <= std::min(N, N_); ++k)
        g.set_coeff(k, coeff(k));
    if (N < N_) {
        double lost = 0.0;
        for (int k = -N_; k < -N; ++k) lost += std::abs(coeff(k));
        for (int k = N + 1; k <= N_; ++k) lost += std::abs(coeff(k));
        double scale = max_abs_coeff() + 1e-300;
        if (lost / scale > 1e-12) g.flag_under_resolved(lost / scale);
    }
    g.inherit_flags(*this);
    return g;
}

bool LaurentSeries::truncation_honest(double threshold) const {
    double m = max_abs_coeff();
    if (m == 0.0) return true;
    double edge = std::max(std::abs(coeff(N_)), std::abs(coeff(-N_)));
    return edge / m <= threshold;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& g) {
    if (g.N_ > N_) *this = resized(g.N_);
    for (int k = -g.N_; k <= g.N_; ++k) add_coeff(k, g.coeff(k));
    inherit_flags(g);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& g) {
    if (g.N_ > N_) *this = resized(g.N_);
    for (int k = -g.N_; k <= g.N_; ++k) add_coeff(k, -g.coeff(k));
    inherit_flags(g);
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(cplx s) {
    c_ *= s;
    return *this;
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g,
                  double spill_threshold) {
    const int N = std::max(f.order(), g.order());
    const int full = f.order() + g.order();
    // Exact convolution on the full support [-full, full].
    Vec conv = Vec::Zero(2 * full + 1);
    for (int a = -f.order(); a <= f.order(); ++a) {
        cplx fa = f.coeff(a);
        if (fa == cplx(0.0)) continue;
        for (int b = -g.order(); b <= g.order(); ++b) {
            conv(a + b + full) += fa * g.coeff(b);
        }
    }
    LaurentSeries h(N);
    double kept = 0.0, lost = 0.0;
    for (int k = -full; k <= full; ++k) {
        double m = std::abs(conv(k + full));
        if (k >= -N && k <= N) {
            h.set_coeff(k, conv(k + full));
            kept += m;
        } else {
            lost += m;
        }
    }
    double total = kept + lost;
    if (total > 0 && lost / total > spill_threshold)
        h.flag_under_resolved(lost / total);
    h.inherit_flags(f, g);
    return h;
}

LaurentSeries div_grid(const LaurentSeries& f, const LaurentSeries& g,
                       const TruncationParams& par, double floor) {
    Vec fg = f.grid_values(par.M);
    Vec gg = g.grid_values(par.M);
    double mn = gg.cwiseAbs().minCoeff();
    if (mn < floor)
        throw Error(ErrorKind::T2Violation,
                    "denominator dips to " + std::to_string(mn) + " on the grid");
    Vec q = fg.cwiseQuotient(gg);
    LaurentSeries h = LaurentSeries::from_grid(q, std::max(f.order(), g.order()),
                                               par.spill_threshold);
    h.inherit_flags(f, g);
    return h;
}

LaurentSeries inv_grid(const LaurentSeries& g, const TruncationParams& par,
                       double floor) {
    return div_grid(LaurentSeries::constant(g.order(), 1.0), g, par, floor);
}

LaurentSeries project(const LaurentSeries& f, ProjectMode mode, int p) {
    switch (mode) {
        case ProjectMode::Geq: return f.project_geq(p);
        case ProjectMode::Leq: return f.project_leq(p);
        case ProjectMode::Single: {
            LaurentSeries g(f.order());
            g.set_coeff(p, f.coeff(p));
            return g;
        }
    }
    return f;
}

cplx contour_mean_quadrature(const Vec& grid_values) {
    return grid_values.mean();
}

}  // namespace toda
