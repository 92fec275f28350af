#include "cli.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "divcrit/error.hpp"
#include "divcrit/numeral.hpp"
#include "divcrit/params.hpp"
#include "divcrit/rules.hpp"
#include "divcrit/tables.hpp"
#include "divcrit/verify.hpp"

namespace divcrit::cli {

namespace {

struct Invocation {
    int base = 10;
    std::int64_t divisor = 0;
    std::string numeral;
    std::string numeral_flag;
    std::optional<std::int64_t> w;
    std::optional<std::int64_t> u;
    std::int64_t q_max = kDefaultQMax;
    std::int64_t bound = 0;
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::string method = "restricted";
    std::string format = "text";
    bool all = false;
    bool show_coefficients = false;
    int paper_table = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value in base t, annotated with its decimal value when t != 10.
std::string show(const BigInt& v, int t)
{
    if (t == 10) return v.str();
    return format(from_value(v, t)) + " (" + v.str() + ")";
}

std::string describe(const ParameterSet& ps)
{
    return "q=" + std::to_string(ps.q()) + " N=" + std::to_string(ps.N()) + " w=" + std::to_string(ps.w()) +
           " u=" + std::to_string(ps.u()) + " rule=" + rule_text(ps.w(), ps.u());
}

std::string verdict_text(bool divisible)
{
    return divisible ? "divisible" : "not divisible";
}

const std::string& numeral_of(const Invocation& inv)
{
    if (!inv.numeral.empty() && !inv.numeral_flag.empty()) throw UsageError("numeral given twice");
    const std::string& s = inv.numeral.empty() ? inv.numeral_flag : inv.numeral;
    if (s.empty()) throw UsageError("a numeral argument is required");
    return s;
}

/// Parameter set from --w/--u, or the best sound set. Unsound sets are
/// rejected because their criterion cannot decide non-divisibility.
ParameterSet choose_params(const Invocation& inv)
{
    if (inv.w.has_value() != inv.u.has_value()) throw UsageError("--w and --u must be given together");
    if (inv.w) {
        const auto ps = ParameterSet::from_wu(inv.divisor, inv.base, *inv.w, *inv.u);
        if (!ps.predicted_sound()) {
            const auto s = classify(ps, inv.divisor * inv.base * inv.base);
            throw Error(ErrorCode::NoSoundCriterion,
                        "w=" + std::to_string(ps.w()) + " u=" + std::to_string(ps.u()) +
                            " is forward-only for n=" + std::to_string(ps.n()) + " (witness " +
                            std::to_string(s.witness) + ")");
        }
        return ps;
    }
    const auto best = best_sound(inv.divisor, inv.base, inv.q_max);
    if (!best)
        throw Error(ErrorCode::NoSoundCriterion, "no sound parameter set for n=" + std::to_string(inv.divisor) +
                                                     " in base " + std::to_string(inv.base) +
                                                     " with q_max=" + std::to_string(inv.q_max));
    return *best;
}

int cmd_derive(const Invocation& inv, std::ostream& out)
{
    if (inv.w || inv.u) throw UsageError("derive does not accept --w/--u");
    const std::int64_t bound = inv.divisor * inv.base * inv.base;
    auto line = [&](const ParameterSet& ps) {
        out << describe(ps) << " soundness=" << soundness_name(classify(ps, bound)) << '\n';
    };

    const auto candidates = enumerate(inv.divisor, inv.base, inv.q_max);
    if (inv.all) {
        for (const auto& ps : candidates) line(ps);
        return kExitYes;
    }
    const auto best = best_sound(inv.divisor, inv.base, inv.q_max);
    line(best ? *best : select_best(candidates, false));
    return best ? kExitYes : kExitNo;
}

Method parse_method(const std::string& m)
{
    if (m == "restricted") return Method::Restricted;
    if (m == "gdc") return Method::Gdc;
    if (m == "oracle") return Method::Oracle;
    throw UsageError("unknown method '" + m + "'");
}

int cmd_check(const Invocation& inv, std::ostream& out)
{
    const Numeral x = parse(numeral_of(inv), inv.base);
    const Method method = parse_method(inv.method);
    bool divisible;
    if (method == Method::Oracle)
        divisible = oracle_divisible(to_value(x), inv.divisor);
    else
        divisible = verdict_with(x, choose_params(inv), method);
    out << verdict_text(divisible) << '\n';
    return divisible ? kExitYes : kExitNo;
}

int cmd_reduce(const Invocation& inv, std::ostream& out)
{
    const Numeral x = parse(numeral_of(inv), inv.base);
    const ParameterSet ps = choose_params(inv);
    const auto trace = reduce(to_value(x), ps);
    out << "params: " << describe(ps) << '\n';
    for (std::size_t k = 0; k < trace.values.size(); ++k)
        out << "step " << k << ": R = " << show(trace.values[k], inv.base) << '\n';
    out << "termination: " << termination_name(trace.termination) << '\n';
    const bool divisible = oracle_divisible(trace.last(), ps.n());
    out << verdict_text(divisible) << '\n';
    return divisible ? kExitYes : kExitNo;
}

int cmd_gdc(const Invocation& inv, std::ostream& out)
{
    const Numeral x = parse(numeral_of(inv), inv.base);
    const ParameterSet ps = choose_params(inv);
    out << "params: " << describe(ps) << '\n';
    if (inv.show_coefficients) {
        out << "coefficients: [";
        const auto c = gdc_coefficients(ps, x.degree());
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? ", " : "") << c[k];
        out << "]\n";
    }
    const BigInt C = gdc_evaluate(x, ps);
    out << "C = " << show(C, inv.base) << '\n';
    const bool divisible = oracle_divisible(C, ps.n());
    out << verdict_text(divisible) << '\n';
    return divisible ? kExitYes : kExitNo;
}

TableFormat parse_format(const std::string& f)
{
    if (f == "text") return TableFormat::Text;
    if (f == "csv") return TableFormat::Csv;
    throw UsageError("unknown format '" + f + "'");
}

int cmd_table(const Invocation& inv, std::ostream& out)
{
    const TableFormat fmt = parse_format(inv.format);
    const auto rows = generate(inv.base, inv.from, inv.to, inv.q_max);
    out << render(rows, fmt, inv.base);
    return kExitYes;
}

int cmd_audit(const Invocation& inv, std::ostream& out)
{
    std::vector<TableAuditFinding> findings;
    int base = inv.base;
    if (inv.paper_table != 0) {
        if (inv.from != 0 || inv.to != 0) throw UsageError("--paper-table cannot be combined with --from/--to");
        base = paper_table(inv.paper_table).base;
        findings = audit_paper_table(inv.paper_table);
    } else {
        if (inv.bound < 0) throw UsageError("--bound must be >= 0");
        findings = audit_generated(inv.base, inv.from, inv.to, inv.q_max, inv.bound);
    }
    for (const auto& f : findings) out << format_finding(f, base) << '\n';
    if (findings.empty()) out << "no findings\n";
    return findings.empty() ? kExitYes : kExitNo;
}

bool is_numeral_token(const std::string& s)
{
    if (s.size() < 2 || s[0] != '-') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isalnum(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// CLI11 reads "-FF" as a cluster of short flags. Negative numerals are
// rewritten to the hidden --negative-numeral option; only "-b", "-n", "-h" stay flags.
std::vector<std::string> rewrite_negative_numerals(const std::vector<std::string>& args)
{
    static const std::set<std::string> kShortFlags = {"-b", "-n", "-h"};
    static const std::set<std::string> kTakesValue = {"-b", "--base", "-n", "--divisor", "--q-max", "--w", "--u",
                                                      "--method", "--from", "--to", "--bound", "--format",
                                                      "--paper-table", "--negative-numeral"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--") {
            out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(i), args.end());
            break;
        }
        const bool is_value = i > 0 && kTakesValue.contains(args[i - 1]);
        if (!is_value && is_numeral_token(args[i]) && !kShortFlags.contains(args[i]))
            out.push_back("--negative-numeral=" + args[i]);
        else
            out.push_back(args[i]);
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    Invocation inv;
    CLI::App app{"Derive, apply, verify, and audit digit-based divisibility criteria", "divcrit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_divisor) {
        sub->add_option("-b,--base", inv.base, "Radix of numerals and tables (2-36)")->check(CLI::Range(2, 36));
        if (needs_divisor) sub->add_option("-n,--divisor", inv.divisor, "Divisor n >= 2")->required();
        sub->add_option("--q-max", inv.q_max, "Largest |q| for N = q*n")->check(CLI::PositiveNumber);
    };
    auto add_numeral = [&](CLI::App* sub) {
        sub->add_option("numeral", inv.numeral, "Test number in the -b base");
        sub->add_option("--negative-numeral", inv.numeral_flag)->group("");
        sub->add_option("--w", inv.w, "Override parameter w");
        sub->add_option("--u", inv.u, "Override parameter u");
    };

    auto* derive = app.add_subcommand("derive", "List divisibility parameter sets");
    add_common(derive, true);
    derive->add_flag("--all", inv.all, "Every candidate instead of the best");
    derive->add_option("--w", inv.w)->group("");
    derive->add_option("--u", inv.u)->group("");

    auto* check = app.add_subcommand("check", "Decide divisibility");
    add_common(check, true);
    add_numeral(check);
    check->add_option("--method", inv.method, "restricted | gdc | oracle");

    auto* reduce_cmd = app.add_subcommand("reduce", "Trace iterated restricted steps");
    add_common(reduce_cmd, true);
    add_numeral(reduce_cmd);

    auto* gdc = app.add_subcommand("gdc", "Evaluate the full-digit criterion");
    add_common(gdc, true);
    add_numeral(gdc);
    gdc->add_flag("--show-coefficients", inv.show_coefficients, "Print c_0..c_m");

    auto* table = app.add_subcommand("table", "Generate a rule table");
    add_common(table, false);
    table->add_option("--from", inv.from, "First divisor")->required();
    table->add_option("--to", inv.to, "Last divisor")->required();
    table->add_option("--format", inv.format, "text | csv");

    auto* audit = app.add_subcommand("audit", "Audit a published table or a generated range");
    add_common(audit, false);
    audit->add_option("--paper-table", inv.paper_table, "Published table 1 (decimal) or 2 (octal)")
        ->check(CLI::IsMember({1, 2}));
    audit->add_option("--from", inv.from, "First divisor");
    audit->add_option("--to", inv.to, "Last divisor");
    audit->add_option("--bound", inv.bound, "Scan bound (default n*t^2)");

    const auto args = rewrite_negative_numerals(raw_args);
    std::vector<const char*> argv{"divcrit"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kExitYes : kExitUsage;
    }

    try {
        if (audit->parsed() && inv.paper_table == 0 && (inv.from == 0 || inv.to == 0))
            throw UsageError("audit needs --paper-table or both --from and --to");
        if (derive->parsed()) return cmd_derive(inv, out);
        if (check->parsed()) return cmd_check(inv, out);
        if (reduce_cmd->parsed()) return cmd_reduce(inv, out);
        if (gdc->parsed()) return cmd_gdc(inv, out);
        if (table->parsed()) return cmd_table(inv, out);
        if (audit->parsed()) return cmd_audit(inv, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << error_name(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace divcrit::cli
