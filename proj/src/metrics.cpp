// SPDX-License-Identifier: Apache-2.0
#include "jamsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace jamsim {

namespace {

void check_dims(const Eigen::MatrixXcd& h_rpt, const PrecodingMatrix& precoder,
                const Eigen::VectorXd& aca_variance, const Eigen::VectorXd& extra) {
    if (precoder.W.rows() != h_rpt.rows() || precoder.W.cols() != h_rpt.cols())
        throw std::invalid_argument("sjnr: precoder/channel dimension mismatch");
    if (aca_variance.size() != h_rpt.cols())
        throw std::invalid_argument("sjnr: variance vector size mismatch");
    if (extra.size() != 0 && extra.size() != h_rpt.cols())
        throw std::invalid_argument("sjnr: extra interference size mismatch");
}

} // namespace

double sjnr_statistical(int k, const Eigen::MatrixXcd& h_rpt, const PrecodingMatrix& precoder,
                        const Eigen::VectorXd& aca_variance, double sigma2,
                        const Eigen::VectorXd& extra_interference) {
    check_dims(h_rpt, precoder, aca_variance, extra_interference);
    if (k < 0 || k >= h_rpt.cols()) throw std::out_of_range("sjnr: user index");

    const Eigen::VectorXcd w = precoder.W.col(k);
    const double w2 = w.squaredNorm();
    const double signal = std::norm(h_rpt.col(k).dot(w)) + aca_variance(k) * w2;
    double denom = sigma2;
    if (extra_interference.size() > 0) denom += extra_interference(k);
    for (Eigen::Index u = 0; u < h_rpt.cols(); ++u) {
        if (u == k) continue;
        denom += std::norm(h_rpt.col(u).dot(w)) + aca_variance(u) * w2;
    }
    return signal / denom;
}

Eigen::VectorXd sjnr_statistical_all(const Eigen::MatrixXcd& h_rpt,
                                     const PrecodingMatrix& precoder,
                                     const Eigen::VectorXd& aca_variance, double sigma2,
                                     const Eigen::VectorXd& extra_interference) {
    Eigen::VectorXd eta(h_rpt.cols());
    for (Eigen::Index k = 0; k < h_rpt.cols(); ++k)
        eta(k) = sjnr_statistical(static_cast<int>(k), h_rpt, precoder, aca_variance, sigma2,
                                  extra_interference);
    return eta;
}

double sjnr_realized(int k, const std::vector<Eigen::MatrixXcd>& h_dt_subslots,
                     const PrecodingMatrix& precoder, double sigma2) {
    if (h_dt_subslots.empty()) throw std::invalid_argument("sjnr_realized: no sub-slots");
    if (k < 0 || k >= h_dt_subslots.front().cols())
        throw std::out_of_range("sjnr_realized: user index");

    const Eigen::VectorXcd w = precoder.W.col(k);
    double signal = 0.0, leak = 0.0;
    for (const auto& h_dt : h_dt_subslots) {
        if (h_dt.rows() != precoder.W.rows() || h_dt.cols() != precoder.W.cols())
            throw std::invalid_argument("sjnr_realized: dimension mismatch");
        signal += std::norm(h_dt.col(k).dot(w));
        for (Eigen::Index u = 0; u < h_dt.cols(); ++u)
            if (u != k) leak += std::norm(h_dt.col(u).dot(w));
    }
    const double slots = static_cast<double>(h_dt_subslots.size());
    return (signal / slots) / (sigma2 + leak / slots);
}

Eigen::VectorXd sjnr_realized_all(const std::vector<Eigen::MatrixXcd>& h_dt_subslots,
                                  const PrecodingMatrix& precoder, double sigma2) {
    Eigen::VectorXd eta(precoder.W.cols());
    for (Eigen::Index k = 0; k < precoder.W.cols(); ++k)
        eta(k) = sjnr_realized(static_cast<int>(k), h_dt_subslots, precoder, sigma2);
    return eta;
}

double rate_per_lu(const Eigen::VectorXd& sjnr) {
    if (sjnr.size() == 0) throw std::invalid_argument("rate_per_lu: empty SJNR vector");
    if (sjnr.minCoeff() < 0.0) throw std::invalid_argument("rate_per_lu: negative SJNR");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < sjnr.size(); ++k) sum += std::log2(1.0 + sjnr(k));
    return sum / static_cast<double>(sjnr.size());
}

RateReport make_rate_report(const Eigen::VectorXd& sjnr, const std::string& benchmark) {
    RateReport report;
    report.sjnr = sjnr;
    report.rate_per_lu = rate_per_lu(sjnr);
    report.sum_rate = report.rate_per_lu * static_cast<double>(sjnr.size());
    report.benchmark = benchmark;
    return report;
}

Eigen::VectorXd active_jammer_penalty(const Eigen::Vector3d& jammer_position, double jammer_power_w,
                                      const Placement& placement, Rng& rng) {
    if (jammer_power_w < 0.0)
        throw std::invalid_argument("active_jammer_penalty: power must be nonnegative");
    const Eigen::Index k_users = placement.lu_positions.rows();
    Eigen::VectorXd penalty(k_users);
    for (Eigen::Index k = 0; k < k_users; ++k) {
        const double dist = (Eigen::Vector3d(placement.lu_positions.row(k)) - jammer_position).norm();
        penalty(k) = jammer_power_w * pathloss_nlos(dist) * std::norm(rng.cnormal());
    }
    return penalty;
}

} // namespace jamsim
