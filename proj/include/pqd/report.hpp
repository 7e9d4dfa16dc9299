#pragma once

#include <optional>

#include "pqd/oracle.hpp"
#include "pqd/xstate.hpp"

namespace pqd {

/// Everything the CLI prints for one state. Entropic quantities are in
/// bits. `discord` and `classical_correlation` use the analytic minimum
/// min{S0,S1} of the conditional entropy, so
/// discord = mutual_information - classical_correlation holds exactly; on
/// family-generated states min{S0,S1} = S1 and the value coincides with
/// discord_compact. `upper_bound_tight` is meaningful only when `numeric`
/// is present.
struct CorrelationReport {
    double discord;
    double eof;
    double concurrence;
    double mutual_information;
    double classical_correlation;
    double joint_entropy;
    double reduced_entropy;
    double s0;
    double s1;
    double optimal_theta; // pi/2 when S1 <= S0, else 0
    double optimal_phi;   // phi_m
    bool upper_bound_tight = true;
    std::optional<NumericDiscord> numeric;
};

/// Assembles all measures. With oracle_check set, runs discord_numeric on
/// the given grid and records whether it confirms S1 as the global minimum
/// (|S1 - numeric minimum| <= 1e-6).
CorrelationReport full_report(const XState& s, bool oracle_check = false,
                              GridSpec grid = {});

} // namespace pqd
