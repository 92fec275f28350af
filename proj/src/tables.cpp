#include "divcrit/tables.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <sstream>
#include <stdexcept>

#include "divcrit/numeral.hpp"
#include "divcrit/rules.hpp"
#include "divcrit/verify.hpp"
#include "table_detail.hpp"

namespace divcrit {

namespace {

std::int64_t iabs(std::int64_t v) noexcept { return v < 0 ? -v : v; }

std::string coefficient_term(std::int64_t magnitude, char symbol)
{
    return (magnitude == 1 ? std::string() : std::to_string(magnitude)) + symbol;
}

std::string in_base(std::int64_t v, int t)
{
    return format(from_value(BigInt(v), t));
}

} // namespace

std::string rule_text(std::int64_t w, std::int64_t u)
{
    if (u < 0 || (u == 0 && w < 0)) {
        w = -w;
        u = -u;
    }
    if (u == 0) return w == 0 ? "0" : coefficient_term(w, 'b');
    std::string s = coefficient_term(u, 'B');
    if (w != 0) s += (w > 0 ? " + " : " - ") + coefficient_term(iabs(w), 'b');
    return s;
}

std::optional<WU> parse_rule_text(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) return std::nullopt;

    WU out{0, 0};
    bool seen_B = false, seen_b = false;
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            return std::nullopt;
        }
        std::int64_t coef = 0;
        bool has_digits = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = coef * 10 + (s[i] - '0');
            has_digits = true;
            ++i;
        }
        if (!has_digits) coef = 1;
        if (i >= s.size()) return std::nullopt;
        if (s[i] == 'B' && !seen_B) {
            out.u = sign * coef;
            seen_B = true;
        } else if (s[i] == 'b' && !seen_b) {
            out.w = sign * coef;
            seen_b = true;
        } else {
            return std::nullopt;
        }
        ++i;
    }
    return out;
}

RuleRow make_row(const ParameterSet& ps, const SoundnessClass& soundness, bool has_sound_rule)
{
    return RuleRow{ps.n(), ps.t(), ps.q(), ps.N(), ps.w(), ps.u(), rule_text(ps.w(), ps.u()), soundness,
                   has_sound_rule};
}

RuleRow detail::build_row(std::int64_t n, int t, std::int64_t q_max)
{
    const auto candidates = enumerate(n, t, q_max);
    const auto sound = best_sound(n, t, q_max);
    const ParameterSet chosen = sound ? *sound : select_best(candidates, false);
    return make_row(chosen, classify(chosen, n * t * t), sound.has_value());
}

std::vector<RuleRow> generate(int t, std::int64_t from, std::int64_t to, std::int64_t q_max)
{
    detail::check_range(t, from, to, q_max);
    const std::int64_t count = to - from + 1;
    std::vector<std::optional<RuleRow>> slots(static_cast<std::size_t>(count));
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)] = detail::build_row(from + i, t, q_max);
        } catch (...) {
#pragma omp critical(divcrit_generate_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<RuleRow> rows;
    rows.reserve(slots.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    return rows;
}

std::string render(std::span<const RuleRow> rows, TableFormat format, int t)
{
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        out << "n,q,N,u,w,rule,soundness\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.q << ',' << r.N << ',' << r.u << ',' << r.w << ',' << r.rule << ','
                << soundness_name(r.soundness) << '\n';
        }
        return out.str();
    }

    check_base(t);
    using Line = std::array<std::string, 8>;
    std::vector<Line> lines;
    lines.push_back({"n", "q", "N", "u", "w", "rule", "soundness", "note"});
    for (const auto& r : rows) {
        std::string N = in_base(r.N, t);
        if (t != 10) N += " (" + std::to_string(r.N) + ")";
        std::string note;
        if (!r.has_sound_rule)
            note = "no sound rule";
        else if (r.last_digit())
            note = "last-digit";
        lines.push_back({in_base(r.n, t), std::to_string(r.q), N, std::to_string(r.u), std::to_string(r.w), r.rule,
                         soundness_name(r.soundness), note});
    }

    std::array<std::size_t, 8> width{};
    for (const auto& l : lines)
        for (std::size_t c = 0; c < l.size(); ++c) width[c] = std::max(width[c], l[c].size());

    for (const auto& l : lines) {
        std::string line;
        for (std::size_t c = 0; c < l.size(); ++c) {
            if (c > 0) line += "  ";
            // Numeric columns right-aligned, text left-aligned.
            const bool right = c < 5;
            const std::string pad(width[c] - l[c].size(), ' ');
            line += right ? pad + l[c] : l[c] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

const char* finding_name(FindingKind k) noexcept
{
    switch (k) {
    case FindingKind::NEqualityViolation: return "NEqualityViolation";
    case FindingKind::NSignMismatch: return "NSignMismatch";
    case FindingKind::NotMultiple: return "NotMultiple";
    case FindingKind::UnsoundRow: return "UnsoundRow";
    case FindingKind::BlankRow: return "BlankRow";
    case FindingKind::SignFlippedRuleText: return "SignFlippedRuleText";
    case FindingKind::RuleTextMismatch: return "RuleTextMismatch";
    case FindingKind::NoSoundRule: return "NoSoundRule";
    case FindingKind::ForwardViolation: return "ForwardViolation";
    case FindingKind::ConversionMismatch: return "ConversionMismatch";
    }
    return "Unknown";
}

std::vector<TableAuditFinding> audit_table(const PaperTable& table)
{
    const int t = table.base;
    std::vector<TableAuditFinding> findings;
    auto add = [&](const PaperRow& row, FindingKind kind, std::string detail,
                   std::optional<std::int64_t> witness = std::nullopt) {
        findings.push_back({table.id, row.n, kind, std::move(detail), witness});
    };

    for (const PaperRow& row : table.rows) {
        const std::int64_t actual = row.w * t - row.u;
        bool consistent = true;
        if (actual != row.N) {
            consistent = false;
            const std::string detail = "N=" + std::to_string(row.N) + " but w*t-u=" + std::to_string(actual);
            add(row, actual == -row.N ? FindingKind::NSignMismatch : FindingKind::NEqualityViolation, detail);
        }
        if (row.N == 0 || row.N % row.n != 0) {
            add(row, FindingKind::NotMultiple, "N=" + std::to_string(row.N) + " is not a multiple of n");
        }

        if (row.rule.empty()) {
            add(row, FindingKind::BlankRow, "no rule printed; u=0, N is a multiple of the base");
            continue;
        }

        const auto printed = parse_rule_text(row.rule);
        if (!printed) {
            add(row, FindingKind::RuleTextMismatch, "unparseable rule \"" + row.rule + "\"");
        } else if (printed->u == row.u && printed->w == row.w) {
            // matches
        } else if (printed->u == -row.u && printed->w == -row.w) {
            add(row, FindingKind::SignFlippedRuleText,
                "rule \"" + row.rule + "\" is the global negation of u=" + std::to_string(row.u) +
                    ", w=" + std::to_string(row.w));
        } else {
            add(row, FindingKind::RuleTextMismatch,
                "rule \"" + row.rule + "\" does not match u=" + std::to_string(row.u) + ", w=" +
                    std::to_string(row.w));
        }

        // Soundness only means something when (w, u) encodes a multiple of n.
        const bool valid = (consistent || actual == -row.N) && actual != 0 && actual % row.n == 0;
        if (!valid) continue;
        const auto ps = ParameterSet::from_wu(row.n, t, row.w, row.u);
        const auto report = equivalence_audit(ps, row.n * t * t);
        if (report.forward_violations != 0) {
            add(row, FindingKind::ForwardViolation,
                std::to_string(report.forward_violations) + " forward violations (implementation error)");
        }
        if (!report.verdict.is_full()) {
            const std::int64_t W = report.verdict.witness;
            add(row, FindingKind::UnsoundRow,
                "R(" + std::to_string(W) + ")=" + std::to_string(restricted_step_i64(W, t, row.w, row.u)) +
                    " is divisible by n but " + std::to_string(W) + " is not",
                W);
        }
    }

    for (const auto& conv : table.conversions) {
        const BigInt printed = to_value(parse(conv.in_base, t));
        const BigInt decimal = to_value(parse(conv.decimal, 10));
        if (printed != decimal) {
            findings.push_back({table.id, 0, FindingKind::ConversionMismatch,
                                conv.in_base + "_" + std::to_string(t) + " is " + printed.str() + ", not " +
                                    conv.decimal + "; " + conv.decimal + " is " + format(from_value(decimal, t)) +
                                    "_" + std::to_string(t),
                                std::nullopt});
        }
    }
    return findings;
}

std::vector<TableAuditFinding> audit_paper_table(int id)
{
    return audit_table(paper_table(id));
}

std::vector<TableAuditFinding> audit_generated(int t, std::int64_t from, std::int64_t to, std::int64_t q_max,
                                               std::int64_t bound)
{
    const auto rows = generate(t, from, to, q_max);
    std::vector<TableAuditFinding> findings;
    for (const auto& r : rows) {
        const auto ps = ParameterSet(r.n, r.t, r.q, r.w, r.u);
        const auto report = equivalence_audit(ps, bound > 0 ? bound : r.n * t * t);
        if (report.forward_violations != 0) {
            findings.push_back({0, r.n, FindingKind::ForwardViolation,
                                std::to_string(report.forward_violations) +
                                    " forward violations (implementation error)",
                                std::nullopt});
        }
        if (!r.has_sound_rule) {
            findings.push_back({0, r.n, FindingKind::NoSoundRule,
                                "no sound rule within q_max=" + std::to_string(q_max) + "; best is " + r.rule,
                                report.verdict.is_full() ? std::nullopt
                                                         : std::optional<std::int64_t>(report.verdict.witness)});
        } else if (!report.verdict.is_full()) {
            findings.push_back({0, r.n, FindingKind::UnsoundRow,
                                "selected rule " + r.rule + " fails the reverse direction",
                                report.verdict.witness});
        }
    }
    return findings;
}

std::string format_finding(const TableAuditFinding& f, int base)
{
    std::string line = "table=" + std::to_string(f.table_id);
    if (f.n != 0) {
        line += " n=" + in_base(f.n, base);
        if (base != 10) line += "_" + std::to_string(base);
    }
    line += " kind=" + std::string(finding_name(f.kind));
    if (f.witness) line += " witness=" + std::to_string(*f.witness);
    line += " detail=" + f.detail;
    return line;
}

} // namespace divcrit
