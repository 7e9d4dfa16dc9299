#pragma once

#include <array>
#include <complex>

namespace pqd {

using complexd = std::complex<double>;

/// Absolute tolerance for the XState constructor invariants.
inline constexpr double kStateTol = 1e-12;

/// Probability below which a measurement branch is treated as degenerate
/// (it then contributes 0 to the conditional entropy).
inline constexpr double kDegenerateBranch = 1e-15;

/// Two-qubit X state with exchange and parity symmetry,
///
///     [ v+   0    0   u* ]
///     [ 0    y    y   0  ]        basis {|00>, |01>, |10>, |11>}
///     [ 0    y    y   0  ]
///     [ u    0    0   v- ]
///
/// The constructor enforces v+, v-, y >= 0, unit trace v+ + v- + 2y = 1,
/// and positivity |u|^2 <= v+ v-, each within kStateTol; weights that are
/// negative by less than the tolerance are clamped to zero.
class XState {
  public:
    XState(double v_plus, double v_minus, double y, complexd u);

    double v_plus() const { return v_plus_; }
    double v_minus() const { return v_minus_; }
    double y() const { return y_; }
    complexd u() const { return u_; }

  private:
    double v_plus_;
    double v_minus_;
    double y_;
    complexd u_;
};

/// Nonzero eigenvalues of the X state: lambda0 = 2y from the middle block,
/// lambda+- = (v+ + v- +- sqrt((v+ - v-)^2 + 4|u|^2))/2 from the corners.
/// (The fourth eigenvalue of the 4x4 matrix is identically zero.)
struct Spectrum {
    double lambda0;
    double lambda_plus;
    double lambda_minus;
};

Spectrum xstate_spectrum(const XState& s);

/// S(rho_AB) in bits.
double joint_entropy(const XState& s);

/// S(rho_B) = H(v+ + y); equals S(rho_A) by exchange symmetry.
double reduced_entropy(const XState& s);

/// I = S(rho_A) + S(rho_B) - S(rho_AB) = 2 S(rho_B) - S(rho_AB).
double mutual_information(const XState& s);

/// Bloch angles of the projective measurement on qubit B,
/// n = (sin t cos p, sin t sin p, cos t), theta in [0,pi], phi in [0,2pi).
struct MeasurementAngles {
    double theta;
    double phi;
};

enum class BranchSign { plus, minus };

/// One measurement branch: outcome probability p+-(theta), the conditional
/// 2x2 state of qubit A (row-major), and its eigenvalue gap kappa, so the
/// eigenvalues are (1 +- kappa)/2. A branch with probability below
/// kDegenerateBranch reports probability 0, kappa 0 and the maximally
/// mixed state.
struct ConditionalOutcome {
    double probability;
    std::array<complexd, 4> state;
    double kappa;
};

ConditionalOutcome conditional_outcome(const XState& s, MeasurementAngles a,
                                       BranchSign sign);

/// S_{A|B}(theta,phi) = sum over branches of p * H((1+kappa)/2); kappa comes
/// from exact diagonalization of each branch's conditional state.
double conditional_entropy(const XState& s, MeasurementAngles a);

/// phi_m = arg(u)/2 in [0,pi), the phase minimizing S_{A|B}(theta,phi) for
/// every theta. Returns 0 when |u| < 1e-15 (the phase is then irrelevant).
double optimal_phi(const XState& s);

/// Conditional entropies at the two extremal measurement directions,
/// S0 at theta = 0 and S1 at theta = pi/2 (both at phi = phi_m).
struct ThetaExtremes {
    double s0;
    double s1;
};

ThetaExtremes s0_s1(const XState& s);

/// The compact discord expression D = S(rho_B) - S(rho_AB) + S1. Exact for
/// states whose conditional-entropy minimum sits at theta = pi/2 (every
/// state produced by the family generators, per the numeric tightness
/// checks); an upper bound otherwise.
struct CompactDiscord {
    double discord;
    double s0;
    double s1;
};

CompactDiscord discord_compact(const XState& s);

/// Concurrence C = 2 max{0, |u| - y, y - sqrt(v+ v-)}.
double concurrence_closed(const XState& s);

/// E_F = H((1 + sqrt(1 - C^2))/2). Throws std::domain_error when c lies
/// outside [0,1] by more than kDomainSlack.
double eof_from_concurrence(double c);

namespace detail {

/// |y e^{-i phi} + conj(u) e^{i phi}|^2, the squared off-diagonal weight of
/// the unnormalized conditional state before the sin(theta)/2 factor.
double offdiag_sq(const XState& s, double phi);

/// conditional_entropy for precomputed cos(theta), sin^2(theta) and
/// off-diagonal weight; shared by the public overload and the grid oracle.
double conditional_entropy_ct(const XState& s, double cos_theta,
                              double sin_sq_theta, double offdiag_sq);

} // namespace detail

} // namespace pqd
