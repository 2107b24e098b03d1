#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcgeo {

enum class Errc {
    EmptySeries,
    DivisionByZero,
    RootOfZero,
    UnlimitedShadow,
    NonRealComparison,
    ParseError,
    ZeroVector,
    InvalidCircle,
    NonIsolatedIntersection,
    IdenticalCircles,
    UndefinedCrossRatio,
    EvaluationError,
    EmptyPerturbationSpace,
    InvalidProjector,
    NotPolynomial,
    UnknownKind,
    DanglingReference,
    CycleError,
    ConstraintViolation,
    MissingAssignment,
    UnknownElement,
    UnknownScenario,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace lcgeo
