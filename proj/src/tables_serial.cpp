#include "divcrit/tables.hpp"
#include "table_detail.hpp"

namespace divcrit {

std::vector<RuleRow> generate_serial(int t, std::int64_t from, std::int64_t to, std::int64_t q_max)
{
    detail::check_range(t, from, to, q_max);
    std::vector<RuleRow> rows;
    rows.reserve(static_cast<std::size_t>(to - from + 1));
    for (std::int64_t n = from; n <= to; ++n) rows.push_back(detail::build_row(n, t, q_max));
    return rows;
}

} // namespace divcrit
