#pragma once

#include <cstdint>
#include <string>

#include "divcrit/error.hpp"
#include "divcrit/numeral.hpp"
#include "divcrit/tables.hpp"

namespace divcrit::detail {

inline void check_range(int t, std::int64_t from, std::int64_t to, std::int64_t q_max)
{
    check_base(t);
    if (from < 2 || to < from)
        throw Error(ErrorCode::InvalidDivisor,
                    "divisor range must satisfy 2 <= from <= to, got [" + std::to_string(from) + ", " +
                        std::to_string(to) + "]");
    if (q_max < 1) throw Error(ErrorCode::InvalidParameters, "q_max must be >= 1");
}

/// Selected rule for one divisor, classified with an n*t^2 scan.
RuleRow build_row(std::int64_t n, int t, std::int64_t q_max);

} // namespace divcrit::detail
