#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divcrit/params.hpp"

namespace divcrit {

/// "uB + wb" normalized so the first nonzero coefficient is positive,
/// e.g. (w, u) = (1, -2) -> "2B - b". With u = 0 this is "wb".
std::string rule_text(std::int64_t w, std::int64_t u);

struct RuleRow {
    std::int64_t n;
    int t;
    std::int64_t q;
    std::int64_t N;
    std::int64_t w;
    std::int64_t u;
    std::string rule;
    SoundnessClass soundness;
    /// False when no candidate within q_max is sound; the row then carries
    /// the best forward-only candidate.
    bool has_sound_rule = true;

    bool last_digit() const noexcept { return u == 0; }
    friend bool operator==(const RuleRow&, const RuleRow&) = default;
};

/// One row per divisor in [from, to], parallel over divisors.
std::vector<RuleRow> generate(int t, std::int64_t from, std::int64_t to, std::int64_t q_max = kDefaultQMax);
std::vector<RuleRow> generate_serial(int t, std::int64_t from, std::int64_t to, std::int64_t q_max = kDefaultQMax);

RuleRow make_row(const ParameterSet& ps, const SoundnessClass& soundness, bool has_sound_rule);

enum class TableFormat { Text, Csv };

std::string render(std::span<const RuleRow> rows, TableFormat format, int t = 10);

/// A row of one of the two published rule tables, values as printed.
struct PaperRow {
    std::int64_t n;
    std::int64_t N;
    std::int64_t u;
    std::int64_t w;
    /// Printed rule; empty for the blank "round number" rows.
    std::string rule;
};

/// A worked example printed next to a table: one number in decimal and
/// the same number as written in the table's base.
struct PaperConversion {
    std::string decimal;
    std::string in_base;
};

struct PaperTable {
    int id;
    int base;
    std::vector<PaperRow> rows;
    std::vector<PaperConversion> conversions = {};
};

const PaperTable& paper_table(int id);

enum class FindingKind {
    NEqualityViolation,
    NSignMismatch,
    NotMultiple,
    UnsoundRow,
    BlankRow,
    SignFlippedRuleText,
    RuleTextMismatch,
    NoSoundRule,
    ForwardViolation,
    ConversionMismatch,
};

const char* finding_name(FindingKind k) noexcept;

struct TableAuditFinding {
    /// 1 or 2 for the published tables, 0 for a generated range.
    int table_id;
    /// Row divisor; 0 for findings not tied to a row.
    std::int64_t n;
    FindingKind kind;
    std::string detail;
    std::optional<std::int64_t> witness;
};

/// Checks a table's rows: N = w*t - u, the sign of N, n | N, the printed
/// rule against (w, u), and soundness by exhaustive scan to n*t^2. Worked
/// base conversions are re-evaluated too.
std::vector<TableAuditFinding> audit_table(const PaperTable& table);
std::vector<TableAuditFinding> audit_paper_table(int id);

/// Generates rows for [from, to] and re-audits each by exhaustive scan to
/// `bound` (n*t^2 when bound is 0). Reports divisors without a sound rule.
std::vector<TableAuditFinding> audit_generated(int t, std::int64_t from, std::int64_t to, std::int64_t q_max,
                                               std::int64_t bound = 0);

/// One line per finding: "table=<id> n=<n> kind=<kind> detail=<...> [witness=<W>]".
std::string format_finding(const TableAuditFinding& f, int base);

/// Parses "uB + wb"-style rule text into (u, w). Returns nullopt on garbage.
std::optional<WU> parse_rule_text(const std::string& text);

} // namespace divcrit
