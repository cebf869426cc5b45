// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "jamsim/dirs.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

enum class StatSource { ClosedFormPersistent, ClosedFormTemporal, Estimated };

// Aging statistics: the dimensionless variance factor and the per-LU
// aged-channel entry variance v_k = L_G * L_I,k * N_D * alpha_bar.
struct AcaStatistics {
    double alpha_bar = 0.0;
    Eigen::VectorXd per_lu_variance;
    StatSource source = StatSource::ClosedFormPersistent;
    int feedback_count = 0; // s, only meaningful for Estimated
};

// Persistent mode: sum_{i1,i2} P_i1 P_i2 (mu_i1^2 + mu_i2^2
//                  - 2 mu_i1 mu_i2 cos(theta_i1 - theta_i2)).
double alpha_bar_persistent(const DirsProfile& profile);

// Temporal mode: sum_i P_i mu_i^2.
double alpha_bar_temporal(const DirsProfile& profile);

// Closed form for the profile's mode.
AcaStatistics aca_variances(const ScenarioConfig& config, const DirsProfile& profile,
                            const LargeScale& large_scale);

// Brute-force verification of the closed forms: fresh channels and frame per
// trial, aged channel formed for every (pilot, data sub-slot) pair.
struct MomentReport {
    Eigen::MatrixXcd mean;         // N_A x K empirical complex mean
    Eigen::MatrixXd variance;      // N_A x K empirical variance E|e - mean|^2
    Eigen::VectorXd closed_form;   // v_k
    Eigen::MatrixXcd ks_samples;   // trials x K, first antenna entry of sub-slot 0
    std::int64_t samples_per_entry = 0;
};

MomentReport empirical_aca_moments(const ScenarioConfig& config, const DirsProfile& profile,
                                   int trials, std::uint64_t seed, int threads = 0);

// Kolmogorov-Smirnov distance of samples against the standard normal CDF.
double ks_statistic_normal(std::vector<double> samples);

// Asymptotic critical value at significance level 1% for n samples.
double ks_critical_1pct(std::size_t n);

// Moment report CSV, columns: k,n,mean_re,mean_im,var_emp,var_closed,ratio.
void write_moment_report(const MomentReport& report, const std::string& path);

} // namespace jamsim
