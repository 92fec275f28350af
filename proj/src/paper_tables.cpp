#include <stdexcept>
#include <string>

#include "divcrit/error.hpp"
#include "divcrit/tables.hpp"

namespace divcrit {

namespace {

// Rows exactly as printed, errors included. Columns: n, N, u, w, rule.
// Table 2 lists n and N in base 8; they are converted on load.
struct RawRow {
    const char* n;
    const char* N;
    int u;
    int w;
    const char* rule;
};

constexpr RawRow kDecimalRows[] = {
    {"3", "9", 1, 1, "B+b"},      {"4", "8", 2, 1, "2B+b"},      {"5", "5", 5, 1, "5B+b"},
    {"6", "12", -2, 1, "2B-b"},   {"7", "-21", 1, -2, "B-2b"},   {"8", "8", 2, 1, "2B+b"},
    {"9", "9", 1, 1, "B+b"},      {"11", "11", 1, -1, "B-b"},    {"12", "-12", 2, -1, "2B-b"},
    {"13", "39", 1, 4, "B+4b"},   {"14", "28", 2, 3, "2B+3b"},   {"15", "-15", 5, -1, "5B-b"},
    {"16", "-32", 2, -3, "2B-3b"}, {"17", "-51", 1, -5, "B-5b"}, {"18", "18", 2, 2, "2B+2b"},
    {"19", "19", 1, 2, "B+2b"},   {"21", "-21", 1, -2, "B-2b"},  {"22", "-22", 2, -2, "2B-2b"},
    {"23", "69", 1, 7, "B+7b"},   {"24", "48", 2, 5, "2B+5b"},   {"25", "-25", 5, -2, "5B-2b"},
    {"26", "-52", 2, -5, "2B-5b"}, {"27", "27", 3, 3, "3B+3b"},  {"28", "28", 2, 3, "2B+3b"},
    {"29", "29", 1, 3, "B+3b"},   {"31", "31", -1, 3, "B-3b"},   {"32", "32", -2, 3, "2B-3b"},
    {"33", "-33", 3, -3, "3B-3b"}, {"39", "39", 1, 4, "B+4b"},   {"49", "49", 1, 5, "B+5b"},
    {"59", "59", 1, 6, "B+6b"},   {"69", "69", 1, 7, "B+7b"},    {"79", "79", 1, 8, "B+8b"},
    {"81", "81", -1, 8, "B-8b"},  {"83", "83", -3, 8, "3B-8b"},  {"87", "87", 3, 9, "3B+9b"},
};

constexpr RawRow kOctalRows[] = {
    {"3", "11", -1, 1, "B-b"},   {"4", "10", 0, 1, "b"},      {"5", "5", 3, 1, "3B+b"},
    {"6", "6", 2, 1, "2B+b"},    {"7", "7", 1, 1, "B+b"},     {"10", "10", 0, 1, ""},
    {"11", "11", -1, 1, "B-b"},  {"12", "12", -2, 1, "2B-b"}, {"13", "13", -3, 1, "3B-b"},
    {"14", "14", -4, 1, "4B-b"}, {"15", "32", 2, 3, "2B+3b"}, {"16", "16", 2, 2, "2B+2b"},
    {"17", "17", 1, 2, "B+2b"},  {"20", "20", 0, 2, ""},      {"21", "21", -1, 2, "B-2b"},
    {"22", "22", -2, 2, "2B-2b"}, {"23", "46", 2, 5, "2B+5b"}, {"24", "24", -4, 2, "4B-2b"},
    {"25", "25", 3, 3, "3B+3b"}, {"26", "26", 2, 3, "2B+3b"}, {"27", "27", 1, 3, "B+3b"},
    {"30", "30", 0, 3, ""},      {"31", "31", -1, 3, "B-3b"}, {"32", "32", -2, 3, "2B-3b"},
};

template <std::size_t Size>
PaperTable load(int id, int base, const RawRow (&raw)[Size])
{
    PaperTable table{id, base, {}};
    for (const RawRow& r : raw) {
        table.rows.push_back({std::stoll(r.n, nullptr, base), std::stoll(r.N, nullptr, base), r.u, r.w, r.rule});
    }
    return table;
}

} // namespace

const PaperTable& paper_table(int id)
{
    static const PaperTable decimal = load(1, 10, kDecimalRows);
    static const PaperTable octal = [] {
        PaperTable t = load(2, 8, kOctalRows);
        t.conversions.push_back({"17223", "41515"});
        return t;
    }();
    if (id == 1) return decimal;
    if (id == 2) return octal;
    throw Error(ErrorCode::InvalidParameters, "paper table id must be 1 or 2, got " + std::to_string(id));
}

} // namespace divcrit
