#include "planecomp/error.hpp"

namespace planecomp {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::CompositeModulus: return "CompositeModulus";
        case ErrorKind::InfiniteField: return "InfiniteField";
        case ErrorKind::ZeroDivisor: return "ZeroDivisor";
        case ErrorKind::NotUnivariate: return "NotUnivariate";
        case ErrorKind::RootAtLambda: return "RootAtLambda";
        case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DenominatorIdenticallyZero: return "DenominatorIdenticallyZero";
        case ErrorKind::MissingInverse: return "MissingInverse";
        case ErrorKind::ConstantDivisor: return "ConstantDivisor";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::InconsistentQuotients: return "InconsistentQuotients";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::DeterminantNotOne: return "DeterminantNotOne";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::RootAtZero: return "RootAtZero";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ZeroCornerCoefficient: return "ZeroCornerCoefficient";
        case ErrorKind::ZeroScalar: return "ZeroScalar";
        case ErrorKind::YDividesP: return "YDividesP";
        case ErrorKind::DegenerateTriple: return "DegenerateTriple";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::ExponentOverflow: return "ExponentOverflow";
        case ErrorKind::TooManyVariables: return "TooManyVariables";
        case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace planecomp
