// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "jamsim/precode.hpp"
#include "jamsim/rng.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

struct RateReport {
    Eigen::VectorXd sjnr;   // eta_k, linear
    double sum_rate = 0.0;  // bit/s/Hz
    double rate_per_lu = 0.0;
    std::string benchmark;
};

// eta_k = w_k^H (h_k h_k^H + v_k I) w_k
//         / (sigma^2 + extra_k + sum_{u != k} w_k^H (h_u h_u^H + v_u I) w_k).
// The extra term carries benchmark-specific interference (active jammer).
double sjnr_statistical(int k, const Eigen::MatrixXcd& h_rpt, const PrecodingMatrix& precoder,
                        const Eigen::VectorXd& aca_variance, double sigma2,
                        const Eigen::VectorXd& extra_interference = Eigen::VectorXd());

Eigen::VectorXd sjnr_statistical_all(const Eigen::MatrixXcd& h_rpt,
                                     const PrecodingMatrix& precoder,
                                     const Eigen::VectorXd& aca_variance, double sigma2,
                                     const Eigen::VectorXd& extra_interference = Eigen::VectorXd());

// Realized SJNR over data sub-slot channels: ratio of the sub-slot-averaged
// signal power to sigma^2 plus the sub-slot-averaged leakage power.
double sjnr_realized(int k, const std::vector<Eigen::MatrixXcd>& h_dt_subslots,
                     const PrecodingMatrix& precoder, double sigma2);

Eigen::VectorXd sjnr_realized_all(const std::vector<Eigen::MatrixXcd>& h_dt_subslots,
                                  const PrecodingMatrix& precoder, double sigma2);

// (1/K) sum log2(1 + eta_k).
double rate_per_lu(const Eigen::VectorXd& sjnr);

RateReport make_rate_report(const Eigen::VectorXd& sjnr, const std::string& benchmark);

// Active-jammer interference power per LU: P_J * L_NLOS(d_k) * |g_k|^2 with
// g_k i.i.d. CN(0,1). Single-antenna NLOS Rayleigh jammer model.
Eigen::VectorXd active_jammer_penalty(const Eigen::Vector3d& jammer_position, double jammer_power_w,
                                      const Placement& placement, Rng& rng);

} // namespace jamsim
