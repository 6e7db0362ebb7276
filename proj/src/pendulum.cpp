#include "vibspec/pendulum.hpp"

#include <cmath>
#include <string>

#include "vibspec/errors.hpp"
#include "vibspec/rng.hpp"

namespace vibspec {

namespace {

// cum_len[j] = l_1 + ... + l_j, cum_len[0] = 0
Eigen::ArrayXd cumulative_lengths(const Eigen::ArrayXd& lengths) {
    const Eigen::Index n = lengths.size();
    Eigen::ArrayXd cum(n + 1);
    cum[0] = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) cum[k + 1] = cum[k] + lengths[k];
    return cum;
}

// tail[i] = m_{i+1} + ... + m_N (0-based i), tail[n] = 0
Eigen::ArrayXd mass_tails(const Eigen::ArrayXd& masses) {
    const Eigen::Index n = masses.size();
    Eigen::ArrayXd tail(n + 1);
    tail[n] = 0.0;
    for (Eigen::Index k = n - 1; k >= 0; --k) tail[k] = tail[k + 1] + masses[k];
    return tail;
}

// corner(a, b) = sum over charge pairs (k-1, l) with k <= a and l >= b of
//   Q_{k-1} Q_l / dist(k-1, l)^3,   1 <= a <= b <= n.
//
// Built in two O(N^2) passes: a reverse cumulative sum over l per row k,
// then a cumulative sum over k down each column. Entries with a > b are
// meaningless and left untouched.
Eigen::MatrixXd charge_corner_sums(const PendulumConfig& config,
                                   const Eigen::ArrayXd& cum_len) {
    const int n = config.n();
    Eigen::MatrixXd corner = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int k = 1; k <= n; ++k) {
        const double qk = config.charges[k - 1];
        if (qk == 0.0) continue;
        double acc = 0.0;
        for (int l = n; l >= k; --l) {
            const double d = cum_len[l] - cum_len[k - 1];
            acc += qk * config.charges[l] / (d * d * d);
            corner(k, l) = acc;
        }
    }
    for (int a = 2; a <= n; ++a)
        for (int b = a; b <= n; ++b) corner(a, b) += corner(a - 1, b);
    return corner;
}

}  // namespace

void PendulumConfig::validate() const {
    const int segments = n();
    if (segments < 1) throw ConfigError("pendulum needs at least one segment");
    if (masses.size() != segments)
        throw ConfigError("masses must have one entry per segment");
    if (charges.size() != segments + 1)
        throw ConfigError("charges must have n+1 entries (wall charge first)");
    if (!(lengths > 0.0).all()) throw ConfigError("all lengths must be positive");
    if (!(masses > 0.0).all()) throw ConfigError("all masses must be positive");
    if (!(charges >= 0.0).all()) throw ConfigError("charges must be non-negative");
    if (!std::isfinite(gravity) || gravity < 0.0)
        throw ConfigError("gravity must be finite and non-negative");
    if (gravity == 0.0 && (charges > 0.0).count() < 2)
        throw ConfigError(
            "no restoring force: need gravity or at least two nonzero charges");
}

PendulumConfig uniform_config(int n, double total_length, double total_mass,
                              double charge_scale, double gravity) {
    if (n < 1) throw ConfigError("segment count must be positive");
    if (!(total_length > 0.0) || !(total_mass > 0.0))
        throw ConfigError("total length and mass must be positive");
    if (charge_scale < 0.0) throw ConfigError("charge scale must be non-negative");
    if (charge_scale > 0.0 && n < 2)
        throw ConfigError("charged pendulum needs n >= 2 (log n must be positive)");

    PendulumConfig config;
    config.lengths = Eigen::ArrayXd::Constant(n, total_length / n);
    config.masses = Eigen::ArrayXd::Constant(n, total_mass / n);
    const double q =
        charge_scale > 0.0 ? charge_scale / (n * std::sqrt(std::log(double(n)))) : 0.0;
    config.charges = Eigen::ArrayXd::Constant(n + 1, q);
    config.gravity = gravity;
    config.validate();
    return config;
}

PendulumConfig disordered_config(const PendulumConfig& base,
                                 double relative_spread, std::uint64_t seed) {
    base.validate();
    const double kMaxSpread = 1.0 / std::sqrt(3.0);
    if (!(relative_spread >= 0.0) || relative_spread >= kMaxSpread)
        throw ConfigError("relative spread must lie in [0, 1/sqrt(3))");

    // Uniform factor on [1 - sqrt(3) s, 1 + sqrt(3) s]: mean 1, std dev s.
    const double half_width = std::sqrt(3.0) * relative_spread;
    RngStream rng(seed, 0, stream_role::disorder);
    auto perturb = [&](double value) {
        return value * (1.0 + half_width * (2.0 * rng.uniform01() - 1.0));
    };

    PendulumConfig out = base;
    for (Eigen::Index k = 0; k < out.lengths.size(); ++k)
        out.lengths[k] = perturb(base.lengths[k]);
    for (Eigen::Index k = 0; k < out.masses.size(); ++k)
        out.masses[k] = perturb(base.masses[k]);
    for (Eigen::Index k = 0; k < out.charges.size(); ++k)
        out.charges[k] = perturb(base.charges[k]);
    out.validate();
    return out;
}

Eigen::MatrixXd coulomb_matrix(const PendulumConfig& config) {
    config.validate();
    const int n = config.n();
    if ((config.charges > 0.0).count() < 2) return Eigen::MatrixXd::Zero(n, n);

    const Eigen::ArrayXd cum_len = cumulative_lengths(config.lengths);
    const Eigen::MatrixXd corner = charge_corner_sums(config, cum_len);

    // pair_energy(i, j) = l_i l_j * corner(min, max): the coupling between
    // angles i and j from every charge pair whose span covers both segments.
    Eigen::MatrixXd u(n, n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i) {
            const double t = config.lengths[i - 1] * config.lengths[j - 1] *
                             corner(i, j);
            u(i - 1, j - 1) = t;
            u(j - 1, i - 1) = t;
        }

    // U = diag(row sums of pair energies, self term excluded) - pair energies.
    const Eigen::VectorXd row_sums = u.rowwise().sum();
    const Eigen::VectorXd diag = row_sums - u.diagonal();
    u = -u;
    u.diagonal() = diag;
    return u;
}

MatrixPair<double> assemble(const PendulumConfig& config) {
    config.validate();
    const int n = config.n();
    const Eigen::ArrayXd tail = mass_tails(config.masses);

    MatrixPair<double> pair;
    pair.mass.resize(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) {
            const double m = config.lengths[i] * config.lengths[j] * tail[j];
            pair.mass(i, j) = m;
            pair.mass(j, i) = m;
        }

    pair.stiffness = coulomb_matrix(config);
    pair.stiffness.diagonal() +=
        (config.lengths * config.gravity * tail.head(n)).matrix();
    return pair;
}

}  // namespace vibspec
