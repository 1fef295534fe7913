#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycloskew {

enum class ErrorCode {
    NotPrime,
    NotPrimitivePolynomial,
    InvalidGenerator,
    FieldTooLarge,
    DivisionByZero,
    ZeroHasNoLog,
    NotPrimePower,
    NotOneMod4,
    NotOneMod8,
    NoRepresentation,
    NotInPrimeSubfield,
    OrderNotDivisible,
    OrderDoesNotDivide,
    IndexOutOfRange,
    CalibrationAmbiguous,
    DuplicateElement,
    ElementOutOfRange,
    NotDisjoint,
    ContainsZero,
    NotApplicable,
    PredictionMismatch,
    DeltaNotConstant,
    ProfileNotTwoValued,
    HypothesisNotMet,
    BoundTooLarge,
    IOError,
    ParseError,
    UnknownMode,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cycloskew
