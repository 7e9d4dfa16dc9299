#pragma once

namespace pqd {

/// Slack applied when clamping probabilities/weights onto their closed domain.
inline constexpr double kDomainSlack = 1e-12;

/// -x log2(x) with the 0 log 0 := 0 convention. Inputs within kDomainSlack
/// of [0,1] are clamped onto the interval first.
double shannon_term(double x);

/// Binary entropy H(x) = -x log2(x) - (1-x) log2(1-x), in bits.
/// Throws std::domain_error when x lies outside [0,1] by more than
/// kDomainSlack.
double binary_entropy(double x);

/// H((1+kappa)/2) for a qubit whose eigenvalues are (1 +- kappa)/2.
/// Both probabilities are formed directly from kappa, so no precision is
/// lost when kappa approaches 1. kappa is clamped into [0,1].
double entropy_of_gap(double kappa);

} // namespace pqd
