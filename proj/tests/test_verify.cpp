#include <gtest/gtest.h>

#include <random>

#include "divcrit/error.hpp"
#include "divcrit/rules.hpp"
#include "divcrit/tables.hpp"
#include "divcrit/verify.hpp"
#include "oracles.hpp"

using namespace divcrit;

TEST(Oracle, Examples)
{
    EXPECT_TRUE(oracle_divisible(5916, 17));
    EXPECT_TRUE(oracle_divisible(0, 5));
    EXPECT_FALSE(oracle_divisible(9, 27));
    EXPECT_TRUE(oracle_divisible(-34, 17));
    EXPECT_TRUE(oracle_divisible(ipow(BigInt(10), 100) * 7, 7));
    try {
        oracle_divisible(5, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidDivisor);
    }
}

TEST(EquivalenceAudit, SeventeenIsFull)
{
    const auto r = equivalence_audit(ParameterSet::from_wu(17, 10, 5, -1), 10000);
    EXPECT_EQ(r.verdict, SoundnessClass::full());
    EXPECT_TRUE(r.reverse_witnesses.empty());
    EXPECT_EQ(r.forward_violations, 0);
}

TEST(EquivalenceAudit, TwentySeven)
{
    const auto r = equivalence_audit(ParameterSet::from_wu(27, 10, 3, 3), 1000);
    EXPECT_EQ(r.verdict, SoundnessClass::forward_only(9));
    EXPECT_EQ(r.reverse_witnesses.front(), 9);
    EXPECT_EQ(restricted_step(9, r.params), 27);
    EXPECT_EQ(r.forward_violations, 0);
}

TEST(EquivalenceAudit, TwentyTwo)
{
    const auto r = equivalence_audit(ParameterSet::from_wu(22, 10, -2, 2), 1000);
    EXPECT_EQ(r.verdict, SoundnessClass::forward_only(11));
    EXPECT_EQ(restricted_step(11, r.params), 0);
}

TEST(EquivalenceAudit, WitnessesAreCompleteAndAscending)
{
    const auto ps = ParameterSet::from_wu(18, 10, 2, 2);
    const auto r = equivalence_audit(ps, 5000);
    std::vector<std::int64_t> expected;
    for (std::int64_t A = 0; A <= 5000; ++A)
        if (oracle::step(A, 10, 2, 2) % 18 == 0 && A % 18 != 0) expected.push_back(A);
    EXPECT_EQ(r.reverse_witnesses, expected);
}

TEST(EquivalenceAudit, BoundOverflowIsRejected)
{
    const auto ps = ParameterSet::from_wu(17, 10, 5, -1);
    EXPECT_THROW(equivalence_audit(ps, max_scan_bound(ps) + 1), Error);
    EXPECT_THROW(equivalence_audit(ps, -1), Error);
}

TEST(EquivalenceAudit, ParallelMatchesSerial)
{
    for (int t : {2, 8, 10, 16}) {
        for (std::int64_t n = 2; n <= 40; ++n) {
            for (const auto& ps : enumerate(n, t, 2)) {
                const auto par = equivalence_audit(ps, 20000);
                const auto ser = equivalence_audit_serial(ps, 20000);
                ASSERT_EQ(par.reverse_witnesses, ser.reverse_witnesses);
                ASSERT_EQ(par.forward_violations, ser.forward_violations);
                ASSERT_EQ(par.verdict, ser.verdict);
                ASSERT_EQ(par.forward_violations, 0);
            }
        }
    }
}

TEST(Congruence, Examples)
{
    EXPECT_TRUE(congruence_check(5916, ParameterSet::from_wu(17, 10, 2, 3)));
    EXPECT_TRUE(congruence_check(1860523, ParameterSet::from_wu(7, 10, -2, 1)));
    EXPECT_TRUE(congruence_check(0, ParameterSet::from_wu(7, 10, -2, 1)));
    EXPECT_TRUE(congruence_check(-98765, ParameterSet::from_wu(13, 10, 4, 1)));
}

TEST(Verdict, Examples)
{
    for (auto m : {Method::Restricted, Method::Gdc, Method::Oracle}) {
        EXPECT_TRUE(verdict(parse("5916", 10), 17, m));
        EXPECT_TRUE(verdict(parse("1860523", 10), 7, m));
        EXPECT_FALSE(verdict(parse("9", 10), 27, m));
    }
}

TEST(Verdict, NoSoundCriterion)
{
    // Every octal candidate for 16 within q_max = 3 has even w.
    try {
        verdict(parse("20", 8), 16, Method::Restricted);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoSoundCriterion);
    }
    EXPECT_TRUE(verdict(parse("20", 8), 16, Method::Restricted, {.allow_fallback = true}));
    EXPECT_TRUE(verdict(parse("20", 8), 16, Method::Oracle));
    EXPECT_THROW(verdict_with(parse("9", 10), ParameterSet::from_wu(27, 10, 3, 3), Method::Gdc), Error);
}

TEST(VerdictProperty, MethodsAgreeWithOracle)
{
    std::mt19937_64 rng(2024);
    const int bases[] = {2, 8, 10, 16};
    int decided = 0;
    for (int i = 0; i < 10000; ++i) {
        const std::int64_t A = static_cast<std::int64_t>(rng() % 1000000000);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 99);
        const int t = bases[rng() % 4];
        const auto x = from_value(A, t);
        const bool truth = A % n == 0;
        ASSERT_EQ(verdict(x, n, Method::Oracle), truth);
        const auto ps = best_sound(n, t, 3);
        if (!ps) continue;
        ASSERT_EQ(verdict_with(x, *ps, Method::Restricted), truth) << A << " " << n << " " << t;
        ASSERT_EQ(verdict_with(x, *ps, Method::Gdc), truth) << A << " " << n << " " << t;
        ++decided;
    }
    EXPECT_GT(decided, 8000);
}

TEST(VerdictProperty, DivisibleInputsAgree)
{
    // Random A rarely hits multiples; check multiples explicitly.
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 99);
        const std::int64_t A = n * static_cast<std::int64_t>(rng() % 10000000);
        for (int t : {2, 8, 10, 16}) {
            const auto ps = best_sound(n, t, 3);
            if (!ps) continue;
            ASSERT_TRUE(verdict_with(from_value(A, t), *ps, Method::Restricted));
            ASSERT_TRUE(verdict_with(from_value(A, t), *ps, Method::Gdc));
        }
    }
}

TEST(AuditCompleteness, PaperRowsWithCommonFactorHaveWitness)
{
    for (int id : {1, 2}) {
        const auto& table = paper_table(id);
        for (const auto& row : table.rows) {
            const std::int64_t N = row.w * table.base - row.u;
            if (N == 0 || N % row.n != 0) continue;
            const auto ps = ParameterSet::from_wu(row.n, table.base, row.w, row.u);
            const auto r = equivalence_audit(ps, row.n * table.base * table.base);
            EXPECT_EQ(r.forward_violations, 0);
            EXPECT_EQ(r.verdict.is_full(), oracle::gcd(row.w, row.n) == 1) << "table " << id << " n=" << row.n;
        }
    }
}
