#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divcrit/bigint.hpp"
#include "divcrit/numeral.hpp"
#include "divcrit/params.hpp"

namespace divcrit {

/// A = t*B + b with 0 <= b < t. Requires A >= 0 (Error(NegativeInput)).
std::pair<BigInt, std::int64_t> split(const BigInt& A, int t);

/// R = u*B + w*b for (B, b) = split(|A|, t), negated when A < 0.
BigInt restricted_step(const BigInt& A, const ParameterSet& ps);

/// Machine-integer restricted step for the scan kernels. The caller keeps
/// |A| small enough that u*B + w*b cannot overflow.
inline std::int64_t restricted_step_i64(std::int64_t A, std::int64_t t, std::int64_t w, std::int64_t u) noexcept
{
    const bool neg = A < 0;
    const std::int64_t mag = neg ? -A : A;
    const std::int64_t r = u * (mag / t) + w * (mag % t);
    return neg ? -r : r;
}

enum class Termination { BelowThreshold, FixedPoint, NoDecrease, IterationCap };

const char* termination_name(Termination t) noexcept;

/// Values A = R_0, R_1, ... produced by repeated restricted steps.
struct ReductionTrace {
    ParameterSet params;
    std::vector<BigInt> values;
    Termination termination;

    const BigInt& last() const { return values.back(); }
    std::size_t steps() const noexcept { return values.size() - 1; }
};

struct ReduceOptions {
    /// Defaults to t^3.
    std::optional<BigInt> threshold;
    /// Defaults to digit count of A in base t, plus 8.
    std::optional<std::size_t> max_iters;
};

/// Applies restricted_step until |R| <= threshold, R stops changing, |R|
/// stops shrinking, or max_iters steps have run. Values that would repeat
/// or fail to shrink are not appended.
ReductionTrace reduce(const BigInt& A, const ParameterSet& ps, const ReduceOptions& opts = {});

/// c_k = u^k * w^(m-k) for k = 0..m.
std::vector<BigInt> gdc_coefficients(const ParameterSet& ps, std::size_t m);

/// Criterion coefficients bound to one numeral.
struct GdcForm {
    ParameterSet params;
    std::size_t degree;
    std::vector<BigInt> coefficients;
    BigInt value;
};

/// Builds the coefficient sequence for x's degree and evaluates it.
GdcForm gdc_form(const Numeral& x, const ParameterSet& ps);

/// C = sum_k u^k w^(m-k) a_k, negated for negative x. Evaluated by Horner's
/// rule in (u, w) without materializing the coefficients.
/// Throws Error(BaseMismatch) if x.base() != ps.t().
BigInt gdc_evaluate(const Numeral& x, const ParameterSet& ps);

/// Closed form of the criterion for the repdigit with m + 1 copies of `a`.
BigInt identical_digit_form(int a, std::size_t m, const ParameterSet& ps);

BigInt digit_sum(const Numeral& x);

/// sum_k (-1)^(m-k) a_k: the most significant digit counts positive.
BigInt alternating_sum(const Numeral& x);

} // namespace divcrit
