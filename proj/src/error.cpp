#include "divcrit/error.hpp"

#include <string>

namespace divcrit {

const char* error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidDigit: return "InvalidDigit";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::ZeroN: return "ZeroN";
    case ErrorCode::InvalidDivisor: return "InvalidDivisor";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NoSoundCandidate: return "NoSoundCandidate";
    case ErrorCode::NoSoundCriterion: return "NoSoundCriterion";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NegativeInput: return "NegativeInput";
    }
    return "Unknown";
}

namespace {

std::string describe_char(char c)
{
    if (c >= 0x21 && c <= 0x7e) return std::string("'") + c + "'";
    return "byte " + std::to_string(static_cast<unsigned char>(c));
}

} // namespace

InvalidDigitError::InvalidDigitError(std::size_t position, char character, int base)
    : Error(ErrorCode::InvalidDigit,
            "invalid digit " + describe_char(character) + " at position " + std::to_string(position) +
                " for base " + std::to_string(base)),
      position_(position), character_(character)
{
}

} // namespace divcrit
