// SPDX-License-Identifier: Apache-2.0
#include "jamsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "jamsim/harness.hpp"

namespace jamsim {

double alpha_bar_persistent(const DirsProfile& profile) {
    profile.validate();
    double alpha = 0.0;
    const Eigen::Index count = profile.theta.size();
    for (Eigen::Index i = 0; i < count; ++i)
        for (Eigen::Index j = 0; j < count; ++j) {
            const double mu_i = profile.gains(i), mu_j = profile.gains(j);
            alpha += profile.probs[i] * profile.probs[j] *
                     (mu_i * mu_i + mu_j * mu_j -
                      2.0 * mu_i * mu_j * std::cos(profile.theta(i) - profile.theta(j)));
        }
    return alpha;
}

double alpha_bar_temporal(const DirsProfile& profile) {
    profile.validate();
    double alpha = 0.0;
    for (Eigen::Index i = 0; i < profile.theta.size(); ++i)
        alpha += profile.probs[i] * profile.gains(i) * profile.gains(i);
    return alpha;
}

AcaStatistics aca_variances(const ScenarioConfig& config, const DirsProfile& profile,
                            const LargeScale& large_scale) {
    AcaStatistics stats;
    if (profile.mode == JammerMode::Persistent) {
        stats.alpha_bar = alpha_bar_persistent(profile);
        stats.source = StatSource::ClosedFormPersistent;
    } else {
        stats.alpha_bar = alpha_bar_temporal(profile);
        stats.source = StatSource::ClosedFormTemporal;
    }
    stats.per_lu_variance =
        large_scale.ap_irs * config.irs_elements * stats.alpha_bar * large_scale.irs_lu.array();
    return stats;
}

MomentReport empirical_aca_moments(const ScenarioConfig& config, const DirsProfile& profile,
                                   int trials, std::uint64_t seed, int threads) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    config.validate();
    profile.validate();
    if (profile.elements != config.irs_elements)
        throw std::invalid_argument("profile and scenario element counts differ");

    Rng placement_rng(seed);
    const Placement placement = build_scenario(config, placement_rng);
    const LargeScale large_scale = compute_large_scale(config, placement);
    const ChannelSampler sampler(config, placement, large_scale);
    const AcaStatistics closed = aca_variances(config, profile, large_scale);

    const int n_a = config.ap_antennas;
    const int k_users = config.users;
    const int c_slots = config.frame_ratio;

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    // Per-trial accumulators reduced in trial order keep the result exact
    // regardless of the thread count.
    std::vector<Eigen::MatrixXcd> trial_sum(trials);
    std::vector<Eigen::MatrixXd> trial_sum_sq(trials);

    MomentReport report;
    report.ks_samples.resize(trials, k_users);

    parallel_for_indexed(trials, threads, [&](int t) {
        Rng rng(seed + 1 + static_cast<std::uint64_t>(t));
        const ChannelSet channels = sampler.sample(rng);
        const CoherenceFrame frame = sample_frame(profile, c_slots, rng);
        trial_sum[t] = Eigen::MatrixXcd::Zero(n_a, k_users);
        trial_sum_sq[t] = Eigen::MatrixXd::Zero(n_a, k_users);
        for (int c = 0; c < c_slots; ++c) {
            const Eigen::MatrixXcd aca = aca_channel(channels, frame.dt[c], frame.rpt);
            trial_sum[t] += aca;
            trial_sum_sq[t] += aca.cwiseAbs2();
            if (c == 0) report.ks_samples.row(t) = aca.row(0);
        }
    });

    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n_a, k_users);
    Eigen::MatrixXd sum_sq = Eigen::MatrixXd::Zero(n_a, k_users);
    const std::int64_t count = static_cast<std::int64_t>(trials) * c_slots;
    for (int t = 0; t < trials; ++t) {
        sum += trial_sum[t];
        sum_sq += trial_sum_sq[t];
    }

    report.mean = sum / static_cast<double>(count);
    report.variance = sum_sq / static_cast<double>(count) - report.mean.cwiseAbs2();
    report.closed_form = closed.per_lu_variance;
    report.samples_per_entry = count;
    return report;
}

double ks_statistic_normal(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic_normal: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = 0.5 * (1.0 + std::erf(samples[i] / std::sqrt(2.0)));
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - cdf);
        d = std::max(d, cdf - static_cast<double>(i) / n);
    }
    return d;
}

double ks_critical_1pct(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

void write_moment_report(const MomentReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "k,n,mean_re,mean_im,var_emp,var_closed,ratio\n";
    char line[160];
    for (Eigen::Index k = 0; k < report.mean.cols(); ++k)
        for (Eigen::Index n = 0; n < report.mean.rows(); ++n) {
            const double closed = report.closed_form(k);
            std::snprintf(line, sizeof(line), "%ld,%ld,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                          static_cast<long>(k), static_cast<long>(n), report.mean(n, k).real(),
                          report.mean(n, k).imag(), report.variance(n, k), closed,
                          report.variance(n, k) / closed);
            out << line;
        }
}

} // namespace jamsim
