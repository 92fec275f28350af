#pragma once

#include <cstdint>
#include <vector>

#include "divcrit/bigint.hpp"
#include "divcrit/numeral.hpp"
#include "divcrit/params.hpp"

namespace divcrit {

/// Ground truth: A mod n == 0. Throws Error(InvalidDivisor) for n < 2.
bool oracle_divisible(const BigInt& A, std::int64_t n);

/// Result of comparing a restricted rule against the oracle on [0, bound].
struct EquivalenceReport {
    ParameterSet params;
    std::int64_t bound;
    /// A with n | A but n !| R(A). Always zero for a valid parameter set.
    std::int64_t forward_violations = 0;
    /// Ascending A with n | R(A) and n !| A.
    std::vector<std::int64_t> reverse_witnesses;
    SoundnessClass verdict;
};

/// Largest bound the machine-integer scan accepts for these parameters.
std::int64_t max_scan_bound(const ParameterSet& ps) noexcept;

/// Exhaustive scan of A = 0..bound, OpenMP-parallel over A.
/// Output is identical to equivalence_audit_serial.
EquivalenceReport equivalence_audit(const ParameterSet& ps, std::int64_t bound);

/// Single-threaded reference for equivalence_audit.
EquivalenceReport equivalence_audit_serial(const ParameterSet& ps, std::int64_t bound);

/// restricted_step(A) == w*A (mod n) and gdc_evaluate(A) == w^m*A (mod n),
/// with m the degree of A in base t.
bool congruence_check(const BigInt& A, const ParameterSet& ps);

enum class Method { Restricted, Gdc, Oracle };

const char* method_name(Method m) noexcept;

struct VerdictOptions {
    std::int64_t q_max = kDefaultQMax;
    /// Use the oracle when no sound parameter set exists instead of
    /// throwing Error(NoSoundCriterion).
    bool allow_fallback = false;
};

/// Decides n | x with the chosen method. Restricted reduces and then takes
/// one direct modulo of the residual; Gdc takes one modulo of C.
bool verdict(const Numeral& x, std::int64_t n, Method method, const VerdictOptions& opts = {});

/// Same, with an explicit parameter set (must be predicted sound).
bool verdict_with(const Numeral& x, const ParameterSet& ps, Method method);

} // namespace divcrit
