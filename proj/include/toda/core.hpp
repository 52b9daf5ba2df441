#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace toda {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class ErrorKind {
    UnderResolved,
    T1Violation,
    T2Violation,
    ConditionViolation,
    BoundaryRoot,
    DegenerateCritical,
    SolvabilityFailure,
    StepTooLarge,
    QuadratureNotConverged,
    DegenerateSaddle,
    BranchAmbiguity,
    AntiStokesDirection,
    StokesRay,
    OutOfSector,
    RankDeficient,
    IllConditioned,
    OverlapMismatch,
    ParameterOutOfScope,
    ConfigInvalid,
    MissingSeries,
};

const char* to_string(ErrorKind k);

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(to_string(k)) + ": " + msg), kind(k) {}
};

// Mixed absolute/relative comparison used throughout: |a-b| <= tol*(1+max(|a|,|b|)).
inline bool close(cplx a, cplx b, double tol) {
    double m = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * (1.0 + m);
}

inline double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / (1.0 + std::max(std::abs(got), std::abs(want)));
}

}  // namespace toda
