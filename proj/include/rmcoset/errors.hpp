#pragma once

#include <stdexcept>
#include <string>

namespace rmcoset {

enum class Errc {
    NonPrimeCharacteristic,
    UnsupportedSize,
    ReducibleModulus,
    DivisionByZero,
    MixedFields,
    MixedShapes,
    WindowTooLarge,
    InvalidWindow,
    PreconditionViolated,
    NotInWindow,
    RankOutOfRange,
    InvalidParameters,
    BudgetExceeded,
    LengthMismatch,
    InconsistentShares,
    DecodingFailure,
    Overflow,
    UnknownTable,
    Io,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the Errc codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rmcoset
