#include "divcrit/rules.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "divcrit/error.hpp"

namespace divcrit {

std::pair<BigInt, std::int64_t> split(const BigInt& A, int t)
{
    if (A < 0) throw Error(ErrorCode::NegativeInput, "split requires A >= 0");
    BigInt B, b;
    boost::multiprecision::divide_qr(A, BigInt(t), B, b);
    return {std::move(B), static_cast<std::int64_t>(b)};
}

BigInt restricted_step(const BigInt& A, const ParameterSet& ps)
{
    const auto [B, b] = split(abs(A), ps.t());
    BigInt r = B * ps.u() + BigInt(ps.w()) * b;
    if (A < 0) r = -r;
    return r;
}

namespace {

std::size_t digit_count(const BigInt& v, int t)
{
    if (abs(v) < std::numeric_limits<std::int64_t>::max() / 64) {
        std::int64_t mag = static_cast<std::int64_t>(abs(v));
        std::size_t count = 1;
        while (mag >= t) {
            mag /= t;
            ++count;
        }
        return count;
    }
    const BigInt mag = abs(v);
    BigInt place = t;
    std::size_t count = 1;
    while (place <= mag) {
        place *= t;
        ++count;
    }
    return count;
}

} // namespace

const char* termination_name(Termination t) noexcept
{
    switch (t) {
    case Termination::BelowThreshold: return "below-threshold";
    case Termination::FixedPoint: return "fixed-point";
    case Termination::NoDecrease: return "no-decrease";
    case Termination::IterationCap: return "iteration-cap";
    }
    return "unknown";
}

namespace {

template <typename Int>
Int magnitude(const Int& v)
{
    return v < 0 ? Int(-v) : v;
}

// Shared loop for the machine-integer and arbitrary-precision paths. Every
// value after the first is appended to `values`.
template <typename Int, typename Step>
Termination iterate(Int cur, const Int& threshold, std::size_t max_iters, std::vector<BigInt>& values, Step step)
{
    for (std::size_t i = 0;; ++i) {
        const Int mag = magnitude(cur);
        if (mag <= threshold) return Termination::BelowThreshold;
        if (i == max_iters) return Termination::IterationCap;
        Int next = step(cur);
        if (next == cur) return Termination::FixedPoint;
        if (magnitude(next) >= mag) return Termination::NoDecrease;
        values.emplace_back(next);
        cur = std::move(next);
    }
}

} // namespace

ReductionTrace reduce(const BigInt& A, const ParameterSet& ps, const ReduceOptions& opts)
{
    const BigInt threshold = opts.threshold.value_or(BigInt(std::int64_t{ps.t()} * ps.t() * ps.t()));
    const std::size_t max_iters = opts.max_iters.value_or(digit_count(A, ps.t()) + 8);
    if (threshold < ps.t()) throw Error(ErrorCode::InvalidParameters, "reduce threshold must be >= t");
    if (max_iters < 1) throw Error(ErrorCode::InvalidParameters, "reduce needs max_iters >= 1");

    ReductionTrace trace{ps, {A}, Termination::IterationCap};

    // Below `small` the step cannot overflow int64, and magnitudes only
    // shrink, so a trace that starts there stays there.
    const std::int64_t au = ps.u() < 0 ? -ps.u() : ps.u();
    const std::int64_t aw = ps.w() < 0 ? -ps.w() : ps.w();
    const std::int64_t small = std::numeric_limits<std::int64_t>::max() / 4 / std::max<std::int64_t>({1, au, aw});
    if (abs(A) < small && aw <= small / ps.t()) {
        const std::int64_t limit = threshold < small ? static_cast<std::int64_t>(threshold) : small;
        trace.termination = iterate<std::int64_t>(static_cast<std::int64_t>(A), limit, max_iters, trace.values,
                                                  [&](std::int64_t v) {
                                                      return restricted_step_i64(v, ps.t(), ps.w(), ps.u());
                                                  });
    } else {
        trace.termination = iterate<BigInt>(A, threshold, max_iters, trace.values,
                                            [&](const BigInt& v) { return restricted_step(v, ps); });
    }
    return trace;
}

std::vector<BigInt> gdc_coefficients(const ParameterSet& ps, std::size_t m)
{
    // c_0 = w^m, then c_{k+1} = c_k * u / w. Build both power tables to
    // stay exact when w = 0.
    std::vector<BigInt> upow(m + 1), wpow(m + 1);
    upow[0] = 1;
    wpow[0] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        upow[k] = upow[k - 1] * ps.u();
        wpow[k] = wpow[k - 1] * ps.w();
    }
    std::vector<BigInt> c(m + 1);
    for (std::size_t k = 0; k <= m; ++k) c[k] = upow[k] * wpow[m - k];
    return c;
}

namespace {

void check_base_match(const Numeral& x, const ParameterSet& ps)
{
    if (x.base() != ps.t())
        throw Error(ErrorCode::BaseMismatch, "numeral base " + std::to_string(x.base()) +
                                                 " differs from parameter base " + std::to_string(ps.t()));
}

} // namespace

GdcForm gdc_form(const Numeral& x, const ParameterSet& ps)
{
    check_base_match(x, ps);
    GdcForm form{ps, x.degree(), gdc_coefficients(ps, x.degree()), 0};
    for (std::size_t k = 0; k <= form.degree; ++k) form.value += form.coefficients[k] * x.digit(k);
    if (x.negative()) form.value = -form.value;
    return form;
}

BigInt gdc_evaluate(const Numeral& x, const ParameterSet& ps)
{
    check_base_match(x, ps);
    // Horner in u from the top digit: the digit j places below the top
    // carries weight w^j.
    const auto digits = x.digits();
    BigInt acc = 0;
    BigInt wpow = 1;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        acc = acc * ps.u() + wpow * digits[digits.size() - 1 - k];
        wpow *= ps.w();
    }
    return x.negative() ? BigInt(-acc) : acc;
}

BigInt identical_digit_form(int a, std::size_t m, const ParameterSet& ps)
{
    if (a < 0 || a >= ps.t()) throw Error(ErrorCode::InvalidDigit, "repdigit value out of range for base");
    const BigInt u = ps.u();
    const BigInt w = ps.w();
    if (u == w) return BigInt(a) * (m + 1) * ipow(u, static_cast<unsigned>(m));
    const unsigned e = static_cast<unsigned>(m + 1);
    return BigInt(a) * ((ipow(u, e) - ipow(w, e)) / (u - w));
}

BigInt digit_sum(const Numeral& x)
{
    BigInt s = 0;
    for (auto d : x.digits()) s += d;
    return s;
}

BigInt alternating_sum(const Numeral& x)
{
    BigInt s = 0;
    const std::size_t m = x.degree();
    for (std::size_t k = 0; k <= m; ++k) {
        if ((m - k) % 2 == 0)
            s += x.digit(k);
        else
            s -= x.digit(k);
    }
    return s;
}

} // namespace divcrit
