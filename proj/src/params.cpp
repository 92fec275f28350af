#include "divcrit/params.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "divcrit/error.hpp"
#include "divcrit/numeral.hpp"
#include "divcrit/verify.hpp"

namespace divcrit {

namespace {

std::int64_t iabs(std::int64_t v) noexcept { return v < 0 ? -v : v; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_divisor(std::int64_t n)
{
    if (n < 2) throw Error(ErrorCode::InvalidDivisor, "divisor must be >= 2, got " + std::to_string(n));
}

std::string describe(std::int64_t n, int t, std::int64_t w, std::int64_t u)
{
    return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ", w=" + std::to_string(w) +
           ", u=" + std::to_string(u) + ")";
}

} // namespace

ParameterSet::ParameterSet(std::int64_t n, int t, std::int64_t q, std::int64_t w, std::int64_t u)
    : n_(n), t_(t), q_(q), w_(w), u_(u)
{
    check_divisor(n);
    if (t < 2) throw Error(ErrorCode::InvalidBase, "base must be >= 2");
    if (q == 0) throw Error(ErrorCode::InvalidParameters, "q = 0 gives N = 0 " + describe(n, t, w, u));
    if (w * t - u != q * n)
        throw Error(ErrorCode::InvalidParameters,
                    "w*t - u = " + std::to_string(w * t - u) + " but q*n = " + std::to_string(q * n) + " " +
                        describe(n, t, w, u));
    if (iabs(u) > t - 1) throw Error(ErrorCode::InvalidParameters, "|u| exceeds t - 1 " + describe(n, t, w, u));
}

ParameterSet ParameterSet::from_wu(std::int64_t n, int t, std::int64_t w, std::int64_t u)
{
    check_divisor(n);
    const std::int64_t N = w * t - u;
    if (N == 0 || N % n != 0)
        throw Error(ErrorCode::InvalidParameters,
                    "w*t - u = " + std::to_string(N) + " is not a nonzero multiple of n " + describe(n, t, w, u));
    return ParameterSet(n, t, N / n, w, u);
}

ParameterSet ParameterSet::negated() const
{
    return ParameterSet(n_, t_, -q_, -w_, -u_);
}

bool ParameterSet::predicted_sound() const noexcept
{
    return std::gcd(iabs(w_), n_) == 1;
}

const char* soundness_name(const SoundnessClass& s) noexcept
{
    return s.is_full() ? "full" : "forward-only";
}

std::vector<WU> representations(std::int64_t N, int t)
{
    if (N == 0) throw Error(ErrorCode::ZeroN, "N must be nonzero");
    if (t < 2) throw Error(ErrorCode::InvalidBase, "base must be >= 2");

    // u = w*t - N; the floor quotient gives u = -r with r = N mod t in [0, t).
    const std::int64_t w0 = floor_div(N, t);
    const std::int64_t r = N - w0 * t;
    if (r == 0) return {{w0, 0}};

    std::vector<WU> out{{w0, -r}, {w0 + 1, t - r}};
    std::sort(out.begin(), out.end(), [](const WU& a, const WU& b) {
        return std::tuple(iabs(a.u), iabs(a.w), a.w < 0) < std::tuple(iabs(b.u), iabs(b.w), b.w < 0);
    });
    return out;
}

std::vector<ParameterSet> enumerate(std::int64_t n, int t, std::int64_t q_max)
{
    check_divisor(n);
    if (q_max < 1) throw Error(ErrorCode::InvalidParameters, "q_max must be >= 1");

    std::vector<ParameterSet> out;
    out.reserve(static_cast<std::size_t>(4 * q_max));
    for (std::int64_t k = 1; k <= q_max; ++k) {
        for (std::int64_t q : {k, -k}) {
            for (const WU& p : representations(q * n, t)) out.emplace_back(n, t, q, p.w, p.u);
        }
    }
    return out;
}

SoundnessClass classify(const ParameterSet& ps, std::int64_t bound)
{
    const auto report = equivalence_audit(ps, std::max(bound, ps.n()));
    if (report.verdict.is_full() != ps.predicted_sound())
        throw std::logic_error("exhaustive scan contradicts gcd prediction for " +
                               describe(ps.n(), ps.t(), ps.w(), ps.u()));
    return report.verdict;
}

bool better_candidate(const ParameterSet& a, const ParameterSet& b) noexcept
{
    auto key = [](const ParameterSet& p) {
        return std::tuple(p.u() == 0, iabs(p.w()) > p.t() - 1, iabs(p.u()), iabs(p.w()), p.w() < 0, iabs(p.q()),
                          p.u() < 0);
    };
    return key(a) < key(b);
}

ParameterSet select_best(std::span<const ParameterSet> candidates, bool require_sound)
{
    if (candidates.empty()) throw Error(ErrorCode::InvalidParameters, "no candidates to select from");

    const ParameterSet* best = nullptr;
    for (const auto& c : candidates) {
        if (require_sound && !c.predicted_sound()) continue;
        if (best == nullptr || better_candidate(c, *best)) best = &c;
    }
    if (best == nullptr)
        throw Error(ErrorCode::NoSoundCandidate,
                    "no sound parameter set among " + std::to_string(candidates.size()) + " candidates for n=" +
                        std::to_string(candidates.front().n()));
    return *best;
}

std::optional<ParameterSet> best_sound(std::int64_t n, int t, std::int64_t q_max)
{
    const auto candidates = enumerate(n, t, q_max);
    try {
        return select_best(candidates, true);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoSoundCandidate) return std::nullopt;
        throw;
    }
}

} // namespace divcrit
