#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divcrit/bigint.hpp"

namespace divcrit {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

/// Throws Error(InvalidBase) unless base is in [2, 36].
void check_base(int base);

/// A signed integer written in positional notation.
///
/// Digits are stored little-endian: digits()[k] is the coefficient of base^k,
/// so the index lines up with the exponent in A = sum a_k t^k. The
/// representation is canonical: no leading zeros, and zero is "+0".
class Numeral {
public:
    /// Builds a numeral from little-endian digits. Trailing (high-order)
    /// zeros are stripped; throws if a digit is out of range for `base`.
    Numeral(int base, bool negative, std::vector<std::uint8_t> digits);

    static Numeral zero(int base);

    int base() const noexcept { return base_; }
    bool negative() const noexcept { return negative_; }
    bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }
    std::span<const std::uint8_t> digits() const noexcept { return digits_; }
    std::uint8_t digit(std::size_t k) const { return digits_.at(k); }

    /// Highest digit index m (number of digits minus one).
    std::size_t degree() const noexcept { return digits_.size() - 1; }
    std::size_t size() const noexcept { return digits_.size(); }

    Numeral abs() const;
    Numeral negated() const;

    friend bool operator==(const Numeral&, const Numeral&) = default;

private:
    int base_;
    bool negative_;
    std::vector<std::uint8_t> digits_;
};

/// Parses an optional '-' followed by digits 0-9/A-Z (case-insensitive).
Numeral parse(std::string_view text, int base);

BigInt to_value(const Numeral& x);
Numeral from_value(const BigInt& v, int base);

/// Canonical text: uppercase digits, ASCII '-' for negatives.
std::string format(const Numeral& x);

/// Digit value of an alphanumeric character, or -1.
int digit_value(char c) noexcept;
char digit_char(int value);

} // namespace divcrit
