#include "divcrit/numeral.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "divcrit/error.hpp"

namespace divcrit {

namespace {

// U+2212 MINUS SIGN, UTF-8 encoded.
constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

} // namespace

void check_base(int base)
{
    if (base < kMinBase || base > kMaxBase)
        throw Error(ErrorCode::InvalidBase, "base must be in [2, 36], got " + std::to_string(base));
}

int digit_value(char c) noexcept
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

char digit_char(int value)
{
    static constexpr char kAlphabet[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if (value < 0 || value >= kMaxBase) throw std::out_of_range("digit value out of range");
    return kAlphabet[value];
}

Numeral::Numeral(int base, bool negative, std::vector<std::uint8_t> digits)
    : base_(base), negative_(negative), digits_(std::move(digits))
{
    check_base(base_);
    for (auto d : digits_) {
        if (d >= base_)
            throw Error(ErrorCode::InvalidDigit,
                        "digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
    }
    while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
    if (digits_.empty()) digits_.push_back(0);
    if (is_zero()) negative_ = false;
}

Numeral Numeral::zero(int base)
{
    return Numeral(base, false, {0});
}

Numeral Numeral::abs() const
{
    Numeral r = *this;
    r.negative_ = false;
    return r;
}

Numeral Numeral::negated() const
{
    Numeral r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

Numeral parse(std::string_view text, int base)
{
    check_base(base);
    bool negative = false;
    std::size_t start = 0;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        start = 1;
    } else if (text.starts_with(kUnicodeMinus)) {
        negative = true;
        start = kUnicodeMinus.size();
    }
    if (start >= text.size()) throw Error(ErrorCode::EmptyInput, "empty numeral");

    std::vector<std::uint8_t> digits;
    digits.reserve(text.size() - start);
    for (std::size_t i = text.size(); i-- > start;) {
        const int v = digit_value(text[i]);
        if (v < 0 || v >= base) throw InvalidDigitError(i, text[i], base);
        digits.push_back(static_cast<std::uint8_t>(v));
    }
    return Numeral(base, negative, std::move(digits));
}

BigInt to_value(const Numeral& x)
{
    BigInt v = 0;
    const auto digits = x.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v *= x.base();
        v += *it;
    }
    return x.negative() ? BigInt(-v) : v;
}

Numeral from_value(const BigInt& v, int base)
{
    check_base(base);
    BigInt mag = abs(v);
    std::vector<std::uint8_t> digits;
    if (mag == 0) digits.push_back(0);
    while (mag > 0) {
        BigInt q, r;
        boost::multiprecision::divide_qr(mag, BigInt(base), q, r);
        digits.push_back(static_cast<std::uint8_t>(r));
        mag = std::move(q);
    }
    return Numeral(base, v < 0, std::move(digits));
}

std::string format(const Numeral& x)
{
    std::string s;
    s.reserve(x.size() + 1);
    if (x.negative()) s.push_back('-');
    const auto digits = x.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(digit_char(*it));
    return s;
}

} // namespace divcrit
