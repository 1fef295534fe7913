#include "cycloskew/error.hpp"

namespace cycloskew {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimitivePolynomial: return "NotPrimitivePolynomial";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroHasNoLog: return "ZeroHasNoLog";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotOneMod4: return "NotOneMod4";
    case ErrorCode::NotOneMod8: return "NotOneMod8";
    case ErrorCode::NoRepresentation: return "NoRepresentation";
    case ErrorCode::NotInPrimeSubfield: return "NotInPrimeSubfield";
    case ErrorCode::OrderNotDivisible: return "OrderNotDivisible";
    case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CalibrationAmbiguous: return "CalibrationAmbiguous";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::ContainsZero: return "ContainsZero";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::PredictionMismatch: return "PredictionMismatch";
    case ErrorCode::DeltaNotConstant: return "DeltaNotConstant";
    case ErrorCode::ProfileNotTwoValued: return "ProfileNotTwoValued";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownMode: return "UnknownMode";
    }
    return "Unknown";
}

}  // namespace cycloskew
