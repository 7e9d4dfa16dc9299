#include "pqd/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pqd/entropy.hpp"

namespace pqd {

namespace {

double clamp_weight(double w, const char* name) {
    if (w < -kStateTol)
        throw std::invalid_argument(std::string("XState: ") + name +
                                    " must be >= 0; got " + std::to_string(w));
    return w < 0.0 ? 0.0 : w;
}

} // namespace

XState::XState(double v_plus, double v_minus, double y, complexd u)
    : v_plus_(clamp_weight(v_plus, "v_plus")),
      v_minus_(clamp_weight(v_minus, "v_minus")),
      y_(clamp_weight(y, "y")),
      u_(u) {
    const double trace = v_plus_ + v_minus_ + 2.0 * y_;
    if (std::abs(trace - 1.0) > kStateTol)
        throw std::invalid_argument("XState: trace v+ + v- + 2y must be 1; got " +
                                    std::to_string(trace));
    if (std::norm(u_) > v_plus_ * v_minus_ + kStateTol)
        throw std::invalid_argument(
            "XState: positivity requires |u|^2 <= v+ v-; got |u|^2 = " +
            std::to_string(std::norm(u_)) + ", v+ v- = " +
            std::to_string(v_plus_ * v_minus_));
}

Spectrum xstate_spectrum(const XState& s) {
    const double r = std::hypot(s.v_plus() - s.v_minus(), 2.0 * std::abs(s.u()));
    Spectrum sp;
    sp.lambda0 = 2.0 * s.y();
    sp.lambda_plus = 0.5 * (s.v_plus() + s.v_minus() + r);
    sp.lambda_minus = std::max(0.0, 0.5 * (s.v_plus() + s.v_minus() - r));
    return sp;
}

double joint_entropy(const XState& s) {
    const Spectrum sp = xstate_spectrum(s);
    return shannon_term(sp.lambda0) + shannon_term(sp.lambda_plus) +
           shannon_term(sp.lambda_minus);
}

double reduced_entropy(const XState& s) {
    return binary_entropy(s.v_plus() + s.y());
}

double mutual_information(const XState& s) {
    return std::max(0.0, 2.0 * reduced_entropy(s) - joint_entropy(s));
}

ConditionalOutcome conditional_outcome(const XState& s, MeasurementAngles a,
                                       BranchSign sign) {
    const double sgn = sign == BranchSign::plus ? 1.0 : -1.0;
    const double c = std::cos(a.theta);
    const double st = std::sin(a.theta);
    const double p = 0.5 * (1.0 + sgn * (s.v_plus() - s.v_minus()) * c);
    if (p < kDegenerateBranch)
        return ConditionalOutcome{0.0, {0.5, 0.0, 0.0, 0.5}, 0.0};
    const double m00 = 0.5 * ((s.v_plus() + s.y()) + sgn * (s.v_plus() - s.y()) * c);
    const double m11 = 0.5 * ((s.v_minus() + s.y()) - sgn * (s.v_minus() - s.y()) * c);
    const complexd phase = std::polar(1.0, a.phi);
    const complexd m01 = sgn * 0.5 * st * (s.y() / phase + std::conj(s.u()) * phase);
    const double kappa = std::min(
        1.0, std::hypot(m00 - m11, 2.0 * std::abs(m01)) / p);
    return ConditionalOutcome{
        p, {m00 / p, m01 / p, std::conj(m01) / p, m11 / p}, kappa};
}

namespace detail {

double offdiag_sq(const XState& s, double phi) {
    const complexd phase = std::polar(1.0, phi);
    return std::norm(s.y() / phase + std::conj(s.u()) * phase);
}

double conditional_entropy_ct(const XState& s, double cos_theta,
                              double sin_sq_theta, double offdiag_sq) {
    const double dv = s.v_plus() - s.v_minus();
    const double sum_p = s.v_plus() + s.y();
    const double sum_m = s.v_minus() + s.y();
    const double dif_p = s.v_plus() - s.y();
    const double dif_m = s.v_minus() - s.y();
    const double off4 = sin_sq_theta * offdiag_sq; // (2|m01|)^2
    double total = 0.0;
    for (double sgn : {1.0, -1.0}) {
        const double p = 0.5 * (1.0 + sgn * dv * cos_theta);
        if (p < kDegenerateBranch) continue;
        const double gap = 0.5 * ((sum_p + sgn * dif_p * cos_theta) -
                                  (sum_m - sgn * dif_m * cos_theta));
        const double kappa = std::sqrt(gap * gap + off4) / p;
        total += p * entropy_of_gap(kappa);
    }
    return total;
}

} // namespace detail

double conditional_entropy(const XState& s, MeasurementAngles a) {
    const double c = std::cos(a.theta);
    const double st = std::sin(a.theta);
    return detail::conditional_entropy_ct(s, c, st * st,
                                          detail::offdiag_sq(s, a.phi));
}

double optimal_phi(const XState& s) {
    if (std::abs(s.u()) < 1e-15) return 0.0;
    double arg = std::arg(s.u()); // (-pi, pi]
    if (arg < 0.0) arg += 2.0 * std::numbers::pi;
    return 0.5 * arg;
}

ThetaExtremes s0_s1(const XState& s) {
    ThetaExtremes e{0.0, 0.0};
    for (double v : {s.v_plus(), s.v_minus()}) {
        const double w = v + s.y();
        if (w > 0.0) e.s0 += w * entropy_of_gap(std::abs(v - s.y()) / w);
    }
    const double kappa1 = std::min(
        1.0, std::hypot(s.v_plus() - s.v_minus(), 2.0 * (s.y() + std::abs(s.u()))));
    e.s1 = entropy_of_gap(kappa1);
    return e;
}

CompactDiscord discord_compact(const XState& s) {
    const ThetaExtremes e = s0_s1(s);
    return CompactDiscord{reduced_entropy(s) - joint_entropy(s) + e.s1, e.s0,
                          e.s1};
}

double concurrence_closed(const XState& s) {
    const double root = std::sqrt(std::max(0.0, s.v_plus() * s.v_minus()));
    return 2.0 * std::max({0.0, std::abs(s.u()) - s.y(), s.y() - root});
}

double eof_from_concurrence(double c) {
    if (c < -kDomainSlack || c > 1.0 + kDomainSlack)
        throw std::domain_error(
            "eof_from_concurrence: c must be in [0,1]; got " +
            std::to_string(c));
    c = std::clamp(c, 0.0, 1.0);
    return entropy_of_gap(std::sqrt(std::max(0.0, 1.0 - c * c)));
}

} // namespace pqd
