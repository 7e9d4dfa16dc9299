#include "pqd/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pqd {

namespace {

constexpr double kPi = std::numbers::pi;

// Smallest eta at which the closed-form odd-SCS expectations keep full
// precision; below it the 1 - gamma^N normalization cancels catastrophically
// and the coefficient-vector route is used instead.
constexpr double kScsClosedFormEtaMin = 1e-4;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

// sqrt((n+1)(n+2)(N-n)(N-n-1)), the J+^2 ladder weight connecting |n> to |n+2>.
double ladder_mu_sqrt(int n_qubits, int n) {
    const double a = (n + 1.0) * (n + 2.0);
    const double b = (n_qubits - n) * (n_qubits - n - 1.0);
    return std::sqrt(a * b);
}

} // namespace

SymmetricState::SymmetricState(int n_qubits, std::vector<complexd> coeffs)
    : n_qubits_(n_qubits), coeffs_(std::move(coeffs)) {
    require(n_qubits_ >= 1, "SymmetricState: N must be >= 1; got " +
                                std::to_string(n_qubits_));
    require(coeffs_.size() == static_cast<std::size_t>(n_qubits_) + 1,
            "SymmetricState: need N+1 coefficients; got " +
                std::to_string(coeffs_.size()));
    double norm = 0.0;
    for (const complexd& c : coeffs_) norm += std::norm(c);
    require(std::abs(norm - 1.0) <= 1e-12,
            "SymmetricState: coefficients must be normalized; |c|^2 sums to " +
                std::to_string(norm));
}

XState expectations_to_xstate(const CollectiveExpectations& e) {
    const double n = e.n_qubits;
    require(e.n_qubits >= 2,
            "expectations: N must be >= 2; got " + std::to_string(e.n_qubits));
    const double slack = kStateTol * n * n + kStateTol;
    require(std::abs(e.jz) <= 0.5 * n + slack,
            "expectations: |<Jz>| must be <= N/2; got " + std::to_string(e.jz));
    require(e.jz2 >= e.jz * e.jz - slack && e.jz2 <= 0.25 * n * n + slack,
            "expectations: <Jz^2> must lie in [<Jz>^2, N^2/4]; got " +
                std::to_string(e.jz2));
    const double denom = 4.0 * n * (n - 1.0);
    const double a = n * n - 2.0 * n + 4.0 * e.jz2;
    const double b = 4.0 * e.jz * (n - 1.0);
    return XState((a + b) / denom, (a - b) / denom,
                  (n * n - 4.0 * e.jz2) / denom, e.jplus2 / (n * (n - 1.0)));
}

CollectiveExpectations dicke_expectations(int n_qubits, int n) {
    require(n_qubits >= 1, "dicke: N must be >= 1; got " + std::to_string(n_qubits));
    require(n >= 0 && n <= n_qubits,
            "dicke: n must be in [0, N]; got n=" + std::to_string(n) +
                ", N=" + std::to_string(n_qubits));
    const double m = n - 0.5 * n_qubits;
    return CollectiveExpectations{n_qubits, m, m * m, 0.0};
}

XState dicke_xstate(int n_qubits, int n) {
    require(n_qubits >= 2, "dicke: N must be >= 2; got " + std::to_string(n_qubits));
    require(n >= 0 && n <= n_qubits,
            "dicke: n must be in [0, N]; got n=" + std::to_string(n) +
                ", N=" + std::to_string(n_qubits));
    const double denom = static_cast<double>(n_qubits) * (n_qubits - 1.0);
    return XState(n * (n - 1.0) / denom,
                  (n_qubits - n) * (n_qubits - n - 1.0) / denom,
                  n * (n_qubits - n) / denom, 0.0);
}

CollectiveExpectations superposition_expectations(int n_qubits, int n,
                                                  double alpha, double delta) {
    require(n_qubits >= 2,
            "superposition: N must be >= 2; got " + std::to_string(n_qubits));
    require(n >= 0 && n <= n_qubits - 2,
            "superposition: n must be in [0, N-2]; got n=" + std::to_string(n) +
                ", N=" + std::to_string(n_qubits));
    require(alpha >= 0.0 && alpha < kPi,
            "superposition: alpha must be in [0, pi); got " +
                std::to_string(alpha));
    require(delta >= 0.0 && delta < 2.0 * kPi,
            "superposition: delta must be in [0, 2pi); got " +
                std::to_string(delta));
    const double c2 = std::cos(alpha) * std::cos(alpha);
    const double s2 = 1.0 - c2;
    const double m_lo = n - 0.5 * n_qubits;
    const double m_hi = n + 2.0 - 0.5 * n_qubits;
    // <J+^2> = conj(c_{n+2}) c_n sqrt(mu_n); the phase is e^{-i delta}, the
    // conjugate of the superposition phase on the upper component.
    const complexd jp2 = 0.5 * std::polar(1.0, -delta) * std::sin(2.0 * alpha) *
                         ladder_mu_sqrt(n_qubits, n);
    return CollectiveExpectations{n_qubits, m_lo * c2 + m_hi * s2,
                                  m_lo * m_lo * c2 + m_hi * m_hi * s2, jp2};
}

SymmetricState scs_coefficients(int n_qubits, double eta, Parity parity) {
    require(n_qubits >= 1, "scs: N must be >= 1; got " + std::to_string(n_qubits));
    require(eta >= 0.0 && eta <= 1.0,
            "scs: eta must be in [0, 1]; got " + std::to_string(eta));
    const int n0 = parity == Parity::even ? 0 : 1;
    require(!(parity == Parity::odd && eta == 0.0),
            "scs: the odd state at eta = 0 is defined by its limit, the Dicke "
            "state |1>_N; use that state instead");
    // Unnormalized log weights with the leading eta^{n0} factored out; the
    // largest exponent is subtracted before exponentiating so the weights
    // stay in (0, 1] for any N and eta.
    std::vector<double> log_w;
    std::vector<int> idx;
    const double log_eta = eta > 0.0 ? std::log(eta) : 0.0;
    for (int n = n0; n <= n_qubits; n += 2) {
        if (eta == 0.0 && n != n0) continue;
        log_w.push_back(0.5 * log_binomial(n_qubits, n) + (n - n0) * log_eta);
        idx.push_back(n);
    }
    double peak = log_w[0];
    for (double lw : log_w) peak = std::max(peak, lw);
    std::vector<complexd> coeffs(n_qubits + 1, 0.0);
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < log_w.size(); ++k) {
        const double w = std::exp(log_w[k] - peak);
        coeffs[idx[k]] = w;
        norm_sq += w * w;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (complexd& c : coeffs) c *= inv;
    return SymmetricState(n_qubits, std::move(coeffs));
}

CollectiveExpectations scs_expectations(int n_qubits, double eta,
                                        Parity parity) {
    require(n_qubits >= 2, "scs: N must be >= 2; got " + std::to_string(n_qubits));
    require(eta >= 0.0 && eta <= 1.0,
            "scs: eta must be in [0, 1]; got " + std::to_string(eta));
    if (parity == Parity::odd && eta == 0.0)
        return dicke_expectations(n_qubits, 1); // the documented limit state
    if (parity == Parity::odd && eta < kScsClosedFormEtaMin)
        return expectation_oracle(scs_coefficients(n_qubits, eta, parity));
    const double n = n_qubits;
    const double s = parity == Parity::even ? 1.0 : -1.0;
    const double e2 = eta * eta;
    const double gamma = (1.0 - e2) / (1.0 + e2);
    const double gn = std::pow(gamma, n_qubits);
    const double denom = 1.0 + s * gn;
    const double a = 1.0 / ((1.0 + e2) * (1.0 + e2));
    // gamma^N (1-eta^2)^{-2} written as (1-eta^2)^{N-2} (1+eta^2)^{-N},
    // finite for every eta in [0,1].
    const double g2 = std::pow(1.0 - e2, n_qubits - 2) / std::pow(1.0 + e2, n_qubits);
    const double jz =
        -0.5 * n * (gamma + s * std::pow(gamma, n_qubits - 1)) / denom;
    const double jz2 =
        0.25 * n * n + s * n * (n - 1.0) * e2 * (g2 - s * a) / denom;
    const double jp2 = s * n * (n - 1.0) * e2 * (g2 + s * a) / denom;
    return CollectiveExpectations{n_qubits, jz, jz2, jp2};
}

CollectiveExpectations expectation_oracle(const SymmetricState& s) {
    const int n_qubits = s.n_qubits();
    const auto& c = s.coeffs();
    double jz = 0.0, jz2 = 0.0;
    complexd jp2 = 0.0;
    for (int n = 0; n <= n_qubits; ++n) {
        const double p = std::norm(c[n]);
        const double m = n - 0.5 * n_qubits;
        jz += p * m;
        jz2 += p * m * m;
        if (n + 2 <= n_qubits)
            jp2 += std::conj(c[n + 2]) * c[n] * ladder_mu_sqrt(n_qubits, n);
    }
    return CollectiveExpectations{n_qubits, jz, jz2, jp2};
}

void validate(const FamilyPoint& p) {
    std::visit(
        [](const auto& fp) {
            using T = std::decay_t<decltype(fp)>;
            if constexpr (std::is_same_v<T, DickePoint>) {
                require(fp.n_qubits >= 2, "dicke: N must be >= 2; got " +
                                              std::to_string(fp.n_qubits));
                require(fp.n >= 0 && fp.n <= fp.n_qubits,
                        "dicke: n must be in [0, N]; got n=" +
                            std::to_string(fp.n) + ", N=" +
                            std::to_string(fp.n_qubits));
            } else if constexpr (std::is_same_v<T, SuperpositionPoint>) {
                require(fp.n_qubits >= 2, "superposition: N must be >= 2; got " +
                                              std::to_string(fp.n_qubits));
                require(fp.n >= 0 && fp.n <= fp.n_qubits - 2,
                        "superposition: n must be in [0, N-2]; got n=" +
                            std::to_string(fp.n) + ", N=" +
                            std::to_string(fp.n_qubits));
                require(fp.alpha >= 0.0 && fp.alpha < kPi,
                        "superposition: alpha must be in [0, pi); got " +
                            std::to_string(fp.alpha));
                require(fp.delta >= 0.0 && fp.delta < 2.0 * kPi,
                        "superposition: delta must be in [0, 2pi); got " +
                            std::to_string(fp.delta));
            } else {
                require(fp.n_qubits >= 2, "scs: N must be >= 2; got " +
                                              std::to_string(fp.n_qubits));
                require(fp.eta >= 0.0 && fp.eta <= 1.0,
                        "scs: eta must be in [0, 1]; got " +
                            std::to_string(fp.eta));
            }
        },
        p);
}

XState family_xstate(const FamilyPoint& p) {
    validate(p);
    return std::visit(
        [](const auto& fp) {
            using T = std::decay_t<decltype(fp)>;
            if constexpr (std::is_same_v<T, DickePoint>) {
                return expectations_to_xstate(
                    dicke_expectations(fp.n_qubits, fp.n));
            } else if constexpr (std::is_same_v<T, SuperpositionPoint>) {
                return expectations_to_xstate(superposition_expectations(
                    fp.n_qubits, fp.n, fp.alpha, fp.delta));
            } else {
                return expectations_to_xstate(
                    scs_expectations(fp.n_qubits, fp.eta, fp.parity));
            }
        },
        p);
}

} // namespace pqd
