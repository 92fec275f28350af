#include "divcrit/rules.hpp"
#include "divcrit/verify.hpp"
#include "scan_detail.hpp"

namespace divcrit {

EquivalenceReport equivalence_audit_serial(const ParameterSet& ps, std::int64_t bound)
{
    detail::check_scan_bound(ps, bound);
    EquivalenceReport report{ps, bound, 0, {}, SoundnessClass::full()};

    for (std::int64_t A = 0; A <= bound; ++A) {
        const bool a_div = A % ps.n() == 0;
        const bool r_div = restricted_step_i64(A, ps.t(), ps.w(), ps.u()) % ps.n() == 0;
        if (a_div && !r_div) ++report.forward_violations;
        if (r_div && !a_div) report.reverse_witnesses.push_back(A);
    }

    detail::finalize(report);
    return report;
}

} // namespace divcrit
