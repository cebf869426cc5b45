// SPDX-License-Identifier: Apache-2.0
#include "jamsim/estimate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace jamsim {

FeedbackLog::FeedbackLog(int users, int frame_ratio_in) : frame_ratio(frame_ratio_in) {
    if (users < 1) throw std::invalid_argument("FeedbackLog: users must be >= 1");
    if (frame_ratio < 1) throw std::invalid_argument("FeedbackLog: frame_ratio must be >= 1");
    powers.resize(users);
}

void FeedbackLog::append(int k, double power_w) {
    if (k < 0 || k >= static_cast<int>(powers.size()))
        throw std::out_of_range("FeedbackLog: user index");
    if (power_w < 0.0) throw std::invalid_argument("FeedbackLog: negative power");
    if (static_cast<int>(powers[k].size()) >= frame_ratio)
        throw std::invalid_argument("FeedbackLog: more feedbacks than data sub-slots");
    powers[k].push_back(power_w);
}

int FeedbackLog::count(int k) const {
    if (k < 0 || k >= static_cast<int>(powers.size()))
        throw std::out_of_range("FeedbackLog: user index");
    return static_cast<int>(powers[k].size());
}

double feedback_power(const Eigen::VectorXcd& h_dt_k, double total_power, int users) {
    if (total_power <= 0.0) throw std::invalid_argument("feedback_power: total power must be > 0");
    if (users < 1) throw std::invalid_argument("feedback_power: users must be >= 1");
    return total_power / static_cast<double>(users) * h_dt_k.squaredNorm();
}

double estimate_characteristic(const FeedbackLog& log, int k, const Eigen::VectorXcd& h_rpt_k,
                               double total_power, int ap_antennas, int s) {
    if (s < 1 || s > log.count(k))
        throw std::out_of_range("estimate_characteristic: s outside the logged range");
    if (ap_antennas < 1) throw std::invalid_argument("estimate_characteristic: ap_antennas");
    if (total_power <= 0.0) throw std::invalid_argument("estimate_characteristic: total power");

    const double users = static_cast<double>(log.powers.size());
    double power_sum = 0.0;
    for (int i = 0; i < s; ++i) power_sum += log.powers[k][i];
    const double trained = static_cast<double>(s) * total_power * h_rpt_k.squaredNorm();
    return std::abs(users * power_sum - trained) /
           (total_power * static_cast<double>(ap_antennas) * static_cast<double>(s));
}

Eigen::VectorXd estimate_characteristic_all(const FeedbackLog& log, const Eigen::MatrixXcd& h_rpt,
                                            double total_power, int s) {
    if (h_rpt.cols() != static_cast<Eigen::Index>(log.powers.size()))
        throw std::invalid_argument("estimate_characteristic_all: user count mismatch");
    Eigen::VectorXd estimates(h_rpt.cols());
    for (Eigen::Index k = 0; k < h_rpt.cols(); ++k)
        estimates(k) = estimate_characteristic(log, static_cast<int>(k), h_rpt.col(k), total_power,
                                               static_cast<int>(h_rpt.rows()), s);
    return estimates;
}

PrecodingMatrix refresh_precoder(const Eigen::VectorXd& estimates, const Eigen::MatrixXcd& h_rpt,
                                 double sigma2, double total_power) {
    if (estimates.size() != h_rpt.cols())
        throw std::invalid_argument("refresh_precoder: estimate count mismatch");
    if (estimates.minCoeff() < 0.0)
        throw std::invalid_argument("refresh_precoder: negative estimate");
    AcaStatistics stats;
    stats.source = StatSource::Estimated;
    stats.per_lu_variance = estimates;
    return anti_jamming_precoder(h_rpt, stats, sigma2, total_power);
}

FeedbackTraceWriter::FeedbackTraceWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path);
    out_ << "frame,s,k,power_w,estimate\n";
}

void FeedbackTraceWriter::row(int frame, int s, int k, double power_w, double estimate) {
    char line[128];
    std::snprintf(line, sizeof(line), "%d,%d,%d,%.12g,%.12g\n", frame, s, k, power_w, estimate);
    out_ << line;
}

} // namespace jamsim
