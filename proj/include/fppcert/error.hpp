#pragma once

#include <stdexcept>
#include <string>

namespace fppcert {

enum class ErrorCode {
    NoSquareRoot,
    AmbiguousConstraint,
    NotAUnit,
    PrecisionLoss,
    DivisionByZero,
    NotTotallyRamified,
    ZeroElement,
    NotLiftable,
    InvalidCandidate,
    NonIntegerResult,
    Underdetermined,
    NegativeDimension,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

/* Every failure raised by the library carries one of the codes above so the
   CLI and tests can dispatch on it without string matching. */
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

}  // namespace fppcert
