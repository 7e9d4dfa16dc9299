#include "pqd/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pqd {

CorrelationReport full_report(const XState& s, bool oracle_check,
                              GridSpec grid) {
    const ThetaExtremes e = s0_s1(s);
    const double min_cond = std::min(e.s0, e.s1);
    const double reduced = reduced_entropy(s);
    const double joint = joint_entropy(s);

    CorrelationReport r;
    r.joint_entropy = joint;
    r.reduced_entropy = reduced;
    r.mutual_information = mutual_information(s);
    r.s0 = e.s0;
    r.s1 = e.s1;
    r.discord = reduced - joint + min_cond;
    r.classical_correlation = reduced - min_cond;
    r.concurrence = concurrence_closed(s);
    r.eof = eof_from_concurrence(r.concurrence);
    r.optimal_theta = e.s1 <= e.s0 ? 0.5 * std::numbers::pi : 0.0;
    r.optimal_phi = optimal_phi(s);
    if (oracle_check) {
        r.numeric = discord_numeric(s, grid);
        r.upper_bound_tight =
            std::abs(e.s1 - r.numeric->min_conditional_entropy) <= 1e-6;
    }
    return r;
}

} // namespace pqd
