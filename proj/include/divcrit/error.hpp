#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divcrit {

enum class ErrorCode {
    EmptyInput,
    InvalidDigit,
    InvalidBase,
    ZeroN,
    InvalidDivisor,
    InvalidParameters,
    NoSoundCandidate,
    NoSoundCriterion,
    BaseMismatch,
    NegativeInput,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by `parse` for a character outside the base's alphabet.
class InvalidDigitError : public Error {
public:
    InvalidDigitError(std::size_t position, char character, int base);

    std::size_t position() const noexcept { return position_; }
    char character() const noexcept { return character_; }

private:
    std::size_t position_;
    char character_;
};

} // namespace divcrit
