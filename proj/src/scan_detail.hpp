#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "divcrit/error.hpp"
#include "divcrit/verify.hpp"

namespace divcrit::detail {

inline void check_scan_bound(const ParameterSet& ps, std::int64_t bound)
{
    if (bound < 0) throw Error(ErrorCode::InvalidParameters, "scan bound must be >= 0");
    if (bound > max_scan_bound(ps))
        throw Error(ErrorCode::InvalidParameters,
                    "scan bound " + std::to_string(bound) + " would overflow the machine-integer kernel");
}

inline void finalize(EquivalenceReport& report)
{
    std::sort(report.reverse_witnesses.begin(), report.reverse_witnesses.end());
    report.verdict = report.reverse_witnesses.empty()
                         ? SoundnessClass::full()
                         : SoundnessClass::forward_only(report.reverse_witnesses.front());
}

} // namespace divcrit::detail
