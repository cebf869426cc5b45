// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <fstream>
#include <string>
#include <vector>

#include "jamsim/precode.hpp"

namespace jamsim {

// Per-LU received-power feedback collected over the data sub-slots of one
// coherence frame; at most C entries per LU.
struct FeedbackLog {
    explicit FeedbackLog(int users, int frame_ratio);
    void append(int k, double power_w); // throws when a log exceeds C entries
    int count(int k) const;             // m for LU k

    std::vector<std::vector<double>> powers; // powers[k][s-1] = p_k^s
    int frame_ratio = 0;                     // C
};

// p_k = (P0/K) ||h_DT,k||^2. The fed-back quantity is defined so the running
// estimator below is consistent with the closed-form aging variance.
double feedback_power(const Eigen::VectorXcd& h_dt_k, double total_power, int users);

// s-th running estimate of the aging characteristic for LU k:
// |K * sum_{i<=s} p_k^i - s * P0 * ||h_RPT,k||^2| / (P0 * N_A * s).
double estimate_characteristic(const FeedbackLog& log, int k, const Eigen::VectorXcd& h_rpt_k,
                               double total_power, int ap_antennas, int s);

Eigen::VectorXd estimate_characteristic_all(const FeedbackLog& log,
                                            const Eigen::MatrixXcd& h_rpt, double total_power,
                                            int s);

// Anti-jamming precoder with v_k replaced by the estimates.
PrecodingMatrix refresh_precoder(const Eigen::VectorXd& estimates, const Eigen::MatrixXcd& h_rpt,
                                 double sigma2, double total_power);

// Feedback trace CSV, columns: frame,s,k,power_w,estimate.
class FeedbackTraceWriter {
  public:
    explicit FeedbackTraceWriter(const std::string& path);
    void row(int frame, int s, int k, double power_w, double estimate);

  private:
    std::ofstream out_;
};

} // namespace jamsim
