#pragma once

#include <stdexcept>
#include <string>

namespace planecomp {

// Malformed-input conditions. Mathematical failures (a map that is not an
// isomorphism, curves that are not equivalent) are reported as data, never
// through these.
enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    CompositeModulus,
    InfiniteField,
    ZeroDivisor,
    NotUnivariate,
    RootAtLambda,
    DegreeBoundExceeded,
    ParseError,
    DimensionMismatch,
    DenominatorIdenticallyZero,
    MissingInverse,
    ConstantDivisor,
    NotHomogeneous,
    InconsistentQuotients,
    PreconditionViolated,
    DeterminantNotOne,
    NotCoprime,
    RootAtZero,
    DegreeTooLarge,
    ZeroCornerCoefficient,
    ZeroScalar,
    YDividesP,
    DegenerateTriple,
    TooFewPoints,
    NotSquarefree,
    DegreeMismatch,
    FieldTooLarge,
    ExponentOverflow,
    TooManyVariables,
    SearchTooLarge,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace planecomp
