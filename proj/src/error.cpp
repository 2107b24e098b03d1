#include "lcgeo/error.hpp"

namespace lcgeo {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::EmptySeries: return "EmptySeries";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::RootOfZero: return "RootOfZero";
        case Errc::UnlimitedShadow: return "UnlimitedShadow";
        case Errc::NonRealComparison: return "NonRealComparison";
        case Errc::ParseError: return "ParseError";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::InvalidCircle: return "InvalidCircle";
        case Errc::NonIsolatedIntersection: return "NonIsolatedIntersection";
        case Errc::IdenticalCircles: return "IdenticalCircles";
        case Errc::UndefinedCrossRatio: return "UndefinedCrossRatio";
        case Errc::EvaluationError: return "EvaluationError";
        case Errc::EmptyPerturbationSpace: return "EmptyPerturbationSpace";
        case Errc::InvalidProjector: return "InvalidProjector";
        case Errc::NotPolynomial: return "NotPolynomial";
        case Errc::UnknownKind: return "UnknownKind";
        case Errc::DanglingReference: return "DanglingReference";
        case Errc::CycleError: return "CycleError";
        case Errc::ConstraintViolation: return "ConstraintViolation";
        case Errc::MissingAssignment: return "MissingAssignment";
        case Errc::UnknownElement: return "UnknownElement";
        case Errc::UnknownScenario: return "UnknownScenario";
    }
    return "Unknown";
}

}  // namespace lcgeo
