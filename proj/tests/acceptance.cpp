// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "divcrit/numeral.hpp"
#include "divcrit/params.hpp"
#include "divcrit/rules.hpp"
#include "divcrit/tables.hpp"
#include "divcrit/verify.hpp"

using namespace divcrit;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& msg)
    {
        if (!cond && ok) why << msg;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Check&)>& body)
{
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Every criterion must run at desk scale.
    if (secs >= 10.0) c.expect(false, "took " + std::to_string(secs) + " s (limit 10 s)");
    std::printf("[%s] AC%-2d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.ok ? "" : ": ",
                c.why.str().c_str());
    if (!c.ok) ++failures;
}

std::vector<TableAuditFinding> of_kind(const std::vector<TableAuditFinding>& all, FindingKind k)
{
    std::vector<TableAuditFinding> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](const auto& f) { return f.kind == k; });
    return out;
}

std::vector<std::int64_t> ns(const std::vector<TableAuditFinding>& v)
{
    std::vector<std::int64_t> out;
    for (const auto& f : v) out.push_back(f.n);
    return out;
}

std::string str(const std::vector<std::int64_t>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

bool row_valid(const PaperRow& r, int t)
{
    const std::int64_t N = r.w * t - r.u;
    return N != 0 && N % r.n == 0;
}

} // namespace

int main()
{
    criterion(1, "restricted rule on 5916 gives 1785, -2346, -561, all divisible by 17", [](Check& c) {
        const std::pair<WU, long long> cases[] = {{{2, 3}, 1785}, {{3, -4}, -2346}, {{5, -1}, -561}};
        for (const auto& [p, expected] : cases) {
            const BigInt R = restricted_step(5916, ParameterSet::from_wu(17, 10, p.w, p.u));
            c.expect(R == expected, "R(5916) for w=" + std::to_string(p.w) + " is " + R.str());
            c.expect(R % 17 == 0, R.str() + " not divisible by 17");
        }
    });

    criterion(2, "criterion for 1860523 with n=7, (w,u)=(-2,1) is 217 and 7 | 217", [](Check& c) {
        const BigInt C = gdc_evaluate(parse("1860523", 10), ParameterSet::from_wu(7, 10, -2, 1));
        c.expect(C == 217, "C = " + C.str());
        c.expect(C % 7 == 0, "7 does not divide C");
    });

    criterion(3, "n=3, q=1..3 yields (1,7), (1,4), (1,1); selection returns (1,1)", [](Check& c) {
        const WU expected[] = {{1, 7}, {1, 4}, {1, 1}};
        for (int q = 1; q <= 3; ++q) {
            const auto reps = representations(3 * q, 10);
            c.expect(std::find(reps.begin(), reps.end(), expected[q - 1]) != reps.end(),
                     "missing pair for q=" + std::to_string(q));
        }
        const auto best = select_best(enumerate(3, 10, 3), true);
        c.expect(best.wu() == WU{1, 1}, "selected w=" + std::to_string(best.w()) + " u=" + std::to_string(best.u()));
    });

    criterion(4, "decimal table: 31/36 sound rows regenerate up to sign; unsound rows and n=11 flagged",
              [](Check& c) {
                  const auto& table = paper_table(1);
                  const auto findings = audit_paper_table(1);
                  const auto unsound = of_kind(findings, FindingKind::UnsoundRow);
                  std::vector<std::int64_t> witnesses;
                  for (const auto& f : unsound) witnesses.push_back(f.witness.value_or(-1));
                  c.expect(ns(unsound) == std::vector<std::int64_t>{18, 22, 27, 33, 87},
                           "unsound rows " + str(ns(unsound)));
                  c.expect(witnesses == std::vector<std::int64_t>{9, 11, 9, 11, 29}, "witnesses " + str(witnesses));
                  c.expect(ns(of_kind(findings, FindingKind::NSignMismatch)) == std::vector<std::int64_t>{11},
                           "N sign mismatch rows " + str(ns(of_kind(findings, FindingKind::NSignMismatch))));

                  const auto unsound_ns = ns(unsound);
                  const std::set<std::int64_t> bad(unsound_ns.begin(), unsound_ns.end());
                  int sound = 0, matched = 0;
                  std::vector<std::int64_t> mismatched;
                  for (const auto& row : table.rows) {
                      if (bad.contains(row.n)) continue;
                      ++sound;
                      const auto g = generate(10, row.n, row.n, 3).at(0);
                      const bool same = (g.w == row.w && g.u == row.u) || (g.w == -row.w && g.u == -row.u);
                      if (same && g.soundness.is_full())
                          ++matched;
                      else
                          mismatched.push_back(row.n);
                  }
                  c.expect(table.rows.size() == 36, "table has " + std::to_string(table.rows.size()) + " rows");
                  c.expect(sound == 31, std::to_string(sound) + " sound rows");
                  c.expect(matched == 31, "regeneration mismatches at " + str(mismatched));
              });

    criterion(5, "octal table: 15_8 N mismatch (26 vs 22), 16_8/22_8/24_8/25_8 unsound, others exact", [](Check& c) {
        const auto& table = paper_table(2);
        const auto findings = audit_paper_table(2);
        const auto eq = of_kind(findings, FindingKind::NEqualityViolation);
        c.expect(ns(eq) == std::vector<std::int64_t>{015}, "equality violations " + str(ns(eq)));
        c.expect(!eq.empty() && eq[0].detail.find("N=26 but w*t-u=22") != std::string::npos, "wrong detail");
        const auto unsound = ns(of_kind(findings, FindingKind::UnsoundRow));
        c.expect(unsound == std::vector<std::int64_t>{016, 022, 024, 025}, "unsound rows " + str(unsound));
        c.expect(of_kind(findings, FindingKind::NSignMismatch).empty(), "unexpected N sign mismatch");
        for (const auto& row : table.rows) {
            if (row.n == 015) continue;
            c.expect(row.w * 8 - row.u == row.N, "row " + std::to_string(row.n) + " violates N = w*t - u");
        }
    });

    criterion(6, "every decimal row with gcd(|w|,n)=1 is an equivalence on [0, 10^5]", [](Check& c) {
        for (const auto& row : paper_table(1).rows) {
            if (std::gcd(row.w < 0 ? -row.w : row.w, row.n) != 1) continue;
            const auto ps = ParameterSet::from_wu(row.n, 10, row.w, row.u);
            const auto par = equivalence_audit(ps, 100000);
            const auto ser = equivalence_audit_serial(ps, 100000);
            c.expect(par.forward_violations == 0 && par.reverse_witnesses.empty(),
                     "mismatch for n=" + std::to_string(row.n));
            c.expect(ser.forward_violations == 0 && ser.reverse_witnesses.empty(),
                     "serial mismatch for n=" + std::to_string(row.n));
        }
    });

    criterion(7, "10^4 random cases: R == w*A and C == w^m*A (mod n)", [](Check& c) {
        std::mt19937_64 rng(20240601);
        const int bases[] = {2, 8, 10, 16};
        int failures_seen = 0;
        for (int i = 0; i < 10000; ++i) {
            const int t = bases[rng() % 4];
            const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 99);
            const auto sets = enumerate(n, t, 3);
            const auto& ps = sets[rng() % sets.size()];
            const std::int64_t A = static_cast<std::int64_t>(rng() % 2000000001) - 1000000000;
            const BigInt R = restricted_step(A, ps);
            const auto x = from_value(A, t);
            const BigInt C = gdc_evaluate(x, ps);
            const BigInt wm = ipow(BigInt(ps.w()), static_cast<unsigned>(x.degree()));
            const bool ok = (R - BigInt(ps.w()) * A) % n == 0 && (C - wm * A) % n == 0 && congruence_check(A, ps);
            if (!ok) ++failures_seen;
        }
        c.expect(failures_seen == 0, std::to_string(failures_seen) + " failures");
    });

    criterion(8, "octal digit sum decides 7, octal alternating sum decides 3; 17223 has digit sum 15", [](Check& c) {
        for (std::int64_t A = 0; A <= 10000; ++A) {
            const auto x = from_value(A, 8);
            c.expect((A % 7 == 0) == (digit_sum(x) % 7 == 0), "digit sum fails at " + std::to_string(A));
            c.expect((A % 3 == 0) == (alternating_sum(x) % 3 == 0), "alternating sum fails at " + std::to_string(A));
        }
        const BigInt s = digit_sum(parse("17223", 10));
        c.expect(s == 15 && s % 3 == 0, "digit sum of 17223 is " + s.str());
    });

    criterion(9, "repdigit closed form equals the criterion for t in {8,10}, a < t, m <= 12", [](Check& c) {
        for (int id : {1, 2}) {
            const auto& table = paper_table(id);
            const int t = table.base;
            for (const auto& row : table.rows) {
                if (!row_valid(row, t)) continue;
                const auto ps = ParameterSet::from_wu(row.n, t, row.w, row.u);
                for (int a = 1; a < t; ++a) {
                    for (std::size_t m = 0; m <= 12; ++m) {
                        const Numeral rep(t, false, std::vector<std::uint8_t>(m + 1, static_cast<std::uint8_t>(a)));
                        c.expect(identical_digit_form(a, m, ps) == gdc_evaluate(rep, ps),
                                 "table " + std::to_string(id) + " n=" + std::to_string(row.n) +
                                     " a=" + std::to_string(a) + " m=" + std::to_string(m));
                    }
                }
            }
        }
    });

    criterion(10, "reduce terminates within digits+8 steps for A < 10^6 on sound decimal rows; verdicts exact",
              [](Check& c) {
                  std::vector<ParameterSet> rules;
                  for (const auto& row : paper_table(1).rows) {
                      const auto ps = ParameterSet::from_wu(row.n, 10, row.w, row.u);
                      if (ps.predicted_sound()) rules.push_back(ps);
                  }
                  c.expect(rules.size() == 31, std::to_string(rules.size()) + " sound rules");
                  std::vector<std::int64_t> bad(rules.size(), 0);
#pragma omp parallel for schedule(dynamic)
                  for (std::size_t i = 0; i < rules.size(); ++i) {
                      const auto& ps = rules[i];
                      for (std::int64_t A = 0; A < 1000000; ++A) {
                          const auto trace = reduce(A, ps);
                          const std::size_t digits = A == 0 ? 1 : static_cast<std::size_t>(std::to_string(A).size());
                          const bool terminated =
                              trace.termination != Termination::IterationCap && trace.steps() <= digits + 8;
                          const bool right = (trace.last() % ps.n() == 0) == (A % ps.n() == 0);
                          if (!terminated || !right) ++bad[i];
                      }
                  }
                  for (std::size_t i = 0; i < rules.size(); ++i)
                      c.expect(bad[i] == 0, std::to_string(bad[i]) + " failures for n=" + std::to_string(rules[i].n()));
              });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
