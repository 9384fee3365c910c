#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace epw {

// Every math-layer failure carries one of these codes; the CLI serializes
// the code name verbatim.
enum class ErrorCode {
    DivisionByZero,
    MixedFields,
    BadReduction,
    NoReconstruction,
    DegreeOverflow,
    WrongAmbient,
    WrongDimension,
    ZeroInput,
    ZeroVector,
    MixedAmbient,
    NotIncident,
    NotIsotropic,
    NotAMember,
    InconsistentEvaluations,
    NotDivisible,
    BadChart,
    NotOnHypersurface,
    BadHyperplane,
    ConstructionDegenerate,
    SpanDeficient,
    NotACurve,
    BadFrame,
    InternalInconsistency,
    InfeasibleInput,
    GenerationFailed,
    ParseError,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class MathError : public std::runtime_error {
public:
    MathError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw MathError(code, message);
}

}  // namespace epw
