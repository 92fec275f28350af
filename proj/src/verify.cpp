#include "divcrit/verify.hpp"

#include <limits>
#include <string>

#include "divcrit/error.hpp"
#include "divcrit/rules.hpp"
#include "scan_detail.hpp"

namespace divcrit {

bool oracle_divisible(const BigInt& A, std::int64_t n)
{
    if (n < 2) throw Error(ErrorCode::InvalidDivisor, "divisor must be >= 2, got " + std::to_string(n));
    return A % n == 0;
}

std::int64_t max_scan_bound(const ParameterSet& ps) noexcept
{
    constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
    const std::int64_t au = ps.u() < 0 ? -ps.u() : ps.u();
    const std::int64_t aw = ps.w() < 0 ? -ps.w() : ps.w();
    // |R| <= |u| * bound / t + |w| * (t - 1); keep both terms under kLimit.
    if (aw > kLimit / ps.t()) return -1;
    return au == 0 ? kLimit : kLimit / au;
}

EquivalenceReport equivalence_audit(const ParameterSet& ps, std::int64_t bound)
{
    detail::check_scan_bound(ps, bound);
    EquivalenceReport report{ps, bound, 0, {}, SoundnessClass::full()};

    const std::int64_t n = ps.n();
    const std::int64_t t = ps.t();
    const std::int64_t w = ps.w();
    const std::int64_t u = ps.u();
    std::int64_t forward = 0;

#pragma omp parallel
    {
        std::vector<std::int64_t> local;
        std::int64_t local_forward = 0;

#pragma omp for schedule(static) nowait
        for (std::int64_t A = 0; A <= bound; ++A) {
            const bool a_div = A % n == 0;
            const bool r_div = restricted_step_i64(A, t, w, u) % n == 0;
            local_forward += (a_div && !r_div) ? 1 : 0;
            if (r_div && !a_div) local.push_back(A);
        }

#pragma omp critical(divcrit_audit_merge)
        {
            forward += local_forward;
            report.reverse_witnesses.insert(report.reverse_witnesses.end(), local.begin(), local.end());
        }
    }

    report.forward_violations = forward;
    detail::finalize(report);
    return report;
}

bool congruence_check(const BigInt& A, const ParameterSet& ps)
{
    const std::int64_t n = ps.n();
    const BigInt w = ps.w();
    const BigInt R = restricted_step(A, ps);
    if ((R - w * A) % n != 0) return false;

    const Numeral x = from_value(A, ps.t());
    const BigInt C = gdc_evaluate(x, ps);
    const BigInt wm = ipow(w, static_cast<unsigned>(x.degree()));
    return (C - wm * A) % n == 0;
}

const char* method_name(Method m) noexcept
{
    switch (m) {
    case Method::Restricted: return "restricted";
    case Method::Gdc: return "gdc";
    case Method::Oracle: return "oracle";
    }
    return "unknown";
}

bool verdict_with(const Numeral& x, const ParameterSet& ps, Method method)
{
    if (x.base() != ps.t())
        throw Error(ErrorCode::BaseMismatch, "numeral base " + std::to_string(x.base()) +
                                                 " differs from parameter base " + std::to_string(ps.t()));
    if (method == Method::Oracle) return oracle_divisible(to_value(x), ps.n());
    if (!ps.predicted_sound())
        throw Error(ErrorCode::NoSoundCriterion, "parameter set (w=" + std::to_string(ps.w()) + ", u=" +
                                                     std::to_string(ps.u()) + ") is forward-only for n=" +
                                                     std::to_string(ps.n()));
    if (method == Method::Restricted) {
        const auto trace = reduce(to_value(x), ps);
        return oracle_divisible(trace.last(), ps.n());
    }
    return oracle_divisible(gdc_evaluate(x, ps), ps.n());
}

bool verdict(const Numeral& x, std::int64_t n, Method method, const VerdictOptions& opts)
{
    if (n < 2) throw Error(ErrorCode::InvalidDivisor, "divisor must be >= 2, got " + std::to_string(n));
    if (method == Method::Oracle) return oracle_divisible(to_value(x), n);

    const auto ps = best_sound(n, x.base(), opts.q_max);
    if (!ps) {
        if (opts.allow_fallback) return oracle_divisible(to_value(x), n);
        throw Error(ErrorCode::NoSoundCriterion, "no sound parameter set for n=" + std::to_string(n) + " in base " +
                                                     std::to_string(x.base()) + " with q_max=" +
                                                     std::to_string(opts.q_max));
    }
    return verdict_with(x, *ps, method);
}

} // namespace divcrit
