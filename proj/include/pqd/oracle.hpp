#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pqd/xstate.hpp"

namespace pqd {

/// Measurement-angle grid for the exhaustive discord search: n_theta points
/// over [0,pi] inclusive, n_phi points over [0,2pi). Minimums 181 x 360.
struct GridSpec {
    int n_theta = 721;
    int n_phi = 1440;
};

struct NumericDiscord {
    double discord;                 // S(rho_B) - S(rho_AB) + min S_{A|B}
    double min_conditional_entropy; // the located minimum
    MeasurementAngles argmin;
};

/// Brute-force discord: evaluates the conditional entropy on the full
/// (theta,phi) grid, then refines the best cell coordinate-wise (theta,
/// then phi, two passes) by golden-section search down to refine_tol in
/// angle. The refined minimum never exceeds the best grid value.
NumericDiscord discord_numeric(const XState& s, GridSpec grid = {},
                               double refine_tol = 1e-10);

/// Concurrence from the spectrum of R = rho (sy x sy) rho* (sy x sy).
/// R is assembled by plain 4x4 matrix products; the X block structure
/// splits it into two 2x2 blocks whose eigenvalue square roots are
/// extracted numerically (and stably) from each block's trace and
/// determinant. Returns max{0, r1 - r2 - r3 - r4} with r_i the square
/// roots in decreasing order.
double concurrence_rmatrix(const XState& s);

/// One state where the analytic upper bound min{S0,S1} exceeded the
/// numerically located minimum by more than the scan tolerance.
struct TightnessHit {
    std::size_t index;
    XState state;
    double s0;
    double s1;
    double numeric_min;
    double gap; // min(s0,s1) - numeric_min
    MeasurementAngles argmin;
};

/// Runs discord_numeric over every state and reports each one whose
/// min{S0,S1} - numeric minimum exceeds tol. Empty for all states the
/// family generators produce.
std::vector<TightnessHit> tightness_scan(std::span<const XState> states,
                                         GridSpec grid = {},
                                         double tol = 1e-6);

} // namespace pqd
