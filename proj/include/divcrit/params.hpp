#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace divcrit {

/// Integer solution (w, u) of N = w*t - u.
struct WU {
    std::int64_t w;
    std::int64_t u;

    friend bool operator==(const WU&, const WU&) = default;
};

/// Divisibility parameters for divisor n in base t.
///
/// Satisfies N = q*n = w*t - u with |u| <= t - 1, q != 0. The restricted
/// step for A = t*B + b is R = u*B + w*b; the full-digit criterion is
/// C = sum_k u^k w^(m-k) a_k.
class ParameterSet {
public:
    /// Validates every invariant; throws Error(InvalidParameters) otherwise.
    ParameterSet(std::int64_t n, int t, std::int64_t q, std::int64_t w, std::int64_t u);

    /// Parameters from an explicit (w, u); q is derived from N = w*t - u.
    static ParameterSet from_wu(std::int64_t n, int t, std::int64_t w, std::int64_t u);

    std::int64_t n() const noexcept { return n_; }
    int t() const noexcept { return t_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t N() const noexcept { return q_ * n_; }
    std::int64_t w() const noexcept { return w_; }
    std::int64_t u() const noexcept { return u_; }
    WU wu() const noexcept { return {w_, u_}; }

    /// (w, u) -> (-w, -u), q -> -q. Criterion values flip sign.
    ParameterSet negated() const;

    /// gcd(|w|, n) == 1, the condition for the rule to decide both ways.
    bool predicted_sound() const noexcept;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

private:
    std::int64_t n_;
    int t_;
    std::int64_t q_;
    std::int64_t w_;
    std::int64_t u_;
};

/// Full: n | criterion <=> n | A. ForwardOnly: only n | A => n | criterion;
/// `witness` is the smallest A >= 0 with n | criterion(A) and n !| A.
struct SoundnessClass {
    enum class Kind { Full, ForwardOnly };

    Kind kind = Kind::Full;
    std::int64_t witness = 0;

    static SoundnessClass full() { return {Kind::Full, 0}; }
    static SoundnessClass forward_only(std::int64_t witness) { return {Kind::ForwardOnly, witness}; }

    bool is_full() const noexcept { return kind == Kind::Full; }

    friend bool operator==(const SoundnessClass&, const SoundnessClass&) = default;
};

/// "full" / "forward-only".
const char* soundness_name(const SoundnessClass& s) noexcept;

inline constexpr std::int64_t kDefaultQMax = 3;

/// Every (w, u) with w*t - u = N and |u| <= t - 1, by ascending |u|
/// (ties: smaller |w|, then w > 0). One pair when t | N, two otherwise.
std::vector<WU> representations(std::int64_t N, int t);

/// All parameter sets for q = 1, -1, 2, -2, ..., q_max, -q_max.
std::vector<ParameterSet> enumerate(std::int64_t n, int t, std::int64_t q_max = kDefaultQMax);

/// Full/ForwardOnly via gcd(|w|, n), confirmed by exhaustive scan of
/// A in [0, max(bound, n)]. Throws std::logic_error if scan and prediction
/// disagree.
SoundnessClass classify(const ParameterSet& ps, std::int64_t bound);

/// Ranking used by select_best; smaller is better.
///
/// Candidates with u = 0 (last-digit rules) and with |w| > t - 1 rank last.
/// Among the rest: min |u|, min |w|, w > 0, min |q|, u > 0.
bool better_candidate(const ParameterSet& a, const ParameterSet& b) noexcept;

/// Best candidate by `better_candidate`. With `require_sound`, candidates
/// with gcd(|w|, n) != 1 are dropped first (Error(NoSoundCandidate) if none
/// remain). Throws Error(InvalidParameters) on an empty list.
ParameterSet select_best(std::span<const ParameterSet> candidates, bool require_sound);

/// Best sound set for (n, t) within q_max, if any.
std::optional<ParameterSet> best_sound(std::int64_t n, int t, std::int64_t q_max = kDefaultQMax);

} // namespace divcrit
