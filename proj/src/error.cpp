#include "fppcert/error.hpp"

namespace fppcert {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::AmbiguousConstraint: return "AmbiguousConstraint";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotTotallyRamified: return "NotTotallyRamified";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotLiftable: return "NotLiftable";
    case ErrorCode::InvalidCandidate: return "InvalidCandidate";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::NegativeDimension: return "NegativeDimension";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace fppcert
