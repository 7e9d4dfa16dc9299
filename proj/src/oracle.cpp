#include "pqd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pqd/entropy.hpp"
#include "pqd/parallel.hpp"

namespace pqd {

namespace {

constexpr double kPi = std::numbers::pi;

using Mat4 = std::array<complexd, 16>;

Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const complexd aik = a[4 * i + k];
            if (aik == complexd{}) continue;
            for (int j = 0; j < 4; ++j) r[4 * i + j] += aik * b[4 * k + j];
        }
    return r;
}

Mat4 density_matrix(const XState& s) {
    Mat4 m{};
    m[0] = s.v_plus();
    m[3] = std::conj(s.u());
    m[5] = m[6] = m[9] = m[10] = s.y();
    m[12] = s.u();
    m[15] = s.v_minus();
    return m;
}

// Square roots of the eigenvalues of a 2x2 block of R. R is a product of
// two positive matrices, so both eigenvalues are real and nonnegative;
// with t = tr, d = det they satisfy sqrt(l+-) = (sqrt(t+2 sqrt d) +-
// sqrt(t-2 sqrt d))/2, which avoids squaring small gaps.
std::array<double, 2> block_sqrt_eigs(complexd b00, complexd b01, complexd b10,
                                      complexd b11) {
    const double t = std::max(0.0, (b00 + b11).real());
    const double d = std::max(0.0, (b00 * b11 - b01 * b10).real());
    const double root = 2.0 * std::sqrt(d);
    const double hi = std::sqrt(std::max(0.0, t + root));
    const double lo = std::sqrt(std::max(0.0, t - root));
    return {0.5 * (hi + lo), 0.5 * (hi - lo)};
}

struct GridMin {
    double value = std::numeric_limits<double>::infinity();
    int i = 0;
    int j = 0;
};

// Golden-section minimization over [a,b] down to width tol; returns the best
// point ever evaluated, so the result can only improve on its seed.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    std::pair<double, double> best = fc < fd ? std::pair{c, fc} : std::pair{d, fd};
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if (fc < best.second) best = {c, fc};
        if (fd < best.second) best = {d, fd};
    }
    return best;
}

} // namespace

NumericDiscord discord_numeric(const XState& s, GridSpec grid,
                               double refine_tol) {
    if (grid.n_theta < 181 || grid.n_phi < 360)
        throw std::invalid_argument(
            "discord_numeric: grid must be at least 181 x 360; got " +
            std::to_string(grid.n_theta) + " x " + std::to_string(grid.n_phi));
    if (!(refine_tol > 0.0))
        throw std::invalid_argument("discord_numeric: refine_tol must be > 0");

    const double dtheta = kPi / (grid.n_theta - 1);
    const double dphi = 2.0 * kPi / grid.n_phi;

    std::vector<double> cos_t(grid.n_theta), sin_sq(grid.n_theta);
    for (int i = 0; i < grid.n_theta; ++i) {
        const double th = i * dtheta;
        cos_t[i] = std::cos(th);
        const double st = std::sin(th);
        sin_sq[i] = st * st;
    }
    std::vector<double> off(grid.n_phi);
    for (int j = 0; j < grid.n_phi; ++j)
        off[j] = detail::offdiag_sq(s, j * dphi);

    // Row-parallel scan; per-chunk minima merged in index order so the
    // argmin is deterministic.
    const std::size_t rows = static_cast<std::size_t>(grid.n_theta);
    std::vector<GridMin> row_best(rows);
    parallel_for_chunks(rows, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            GridMin best;
            for (int j = 0; j < grid.n_phi; ++j) {
                const double v = detail::conditional_entropy_ct(
                    s, cos_t[i], sin_sq[i], off[j]);
                if (v < best.value) best = {v, static_cast<int>(i), j};
            }
            row_best[i] = best;
        }
    });
    GridMin best;
    for (const GridMin& rb : row_best)
        if (rb.value < best.value) best = rb;

    const auto entropy_at = [&s](double th, double ph) {
        return conditional_entropy(s, MeasurementAngles{th, ph});
    };

    double theta = best.i * dtheta;
    double phi = best.j * dphi;
    double min_value = best.value;
    for (int pass = 0; pass < 2; ++pass) {
        auto [th, fth] = golden_min(
            [&](double t) { return entropy_at(t, phi); },
            std::max(0.0, theta - dtheta), std::min(kPi, theta + dtheta),
            refine_tol);
        if (fth < min_value) {
            min_value = fth;
            theta = th;
        }
        auto [ph, fph] = golden_min(
            [&](double p) { return entropy_at(theta, p); }, phi - dphi,
            phi + dphi, refine_tol);
        if (fph < min_value) {
            min_value = fph;
            phi = ph;
        }
    }
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;

    NumericDiscord result;
    result.discord = reduced_entropy(s) - joint_entropy(s) + min_value;
    result.min_conditional_entropy = min_value;
    result.argmin = MeasurementAngles{theta, phi};
    return result;
}

double concurrence_rmatrix(const XState& s) {
    const Mat4 rho = density_matrix(s);
    Mat4 yy{}; // sigma_y (x) sigma_y
    yy[3] = yy[12] = -1.0;
    yy[6] = yy[9] = 1.0;
    Mat4 rho_conj;
    for (int k = 0; k < 16; ++k) rho_conj[k] = std::conj(rho[k]);
    const Mat4 rho_tilde = matmul(matmul(yy, rho_conj), yy);
    const Mat4 r = matmul(rho, rho_tilde);

    // X structure: the {|00>,|11>} and {|01>,|10>} sectors never mix.
    const auto corner = block_sqrt_eigs(r[0], r[3], r[12], r[15]);
    const auto middle = block_sqrt_eigs(r[5], r[6], r[9], r[10]);
    std::array<double, 4> roots{corner[0], corner[1], middle[0], middle[1]};
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

std::vector<TightnessHit> tightness_scan(std::span<const XState> states,
                                         GridSpec grid, double tol) {
    std::vector<TightnessHit> hits;
    for (std::size_t k = 0; k < states.size(); ++k) {
        const XState& s = states[k];
        const ThetaExtremes e = s0_s1(s);
        const NumericDiscord nd = discord_numeric(s, grid);
        const double gap = std::min(e.s0, e.s1) - nd.min_conditional_entropy;
        if (gap > tol)
            hits.push_back(TightnessHit{k, s, e.s0, e.s1,
                                        nd.min_conditional_entropy, gap,
                                        nd.argmin});
    }
    return hits;
}

} // namespace pqd
