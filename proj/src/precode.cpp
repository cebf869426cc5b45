// SPDX-License-Identifier: Apache-2.0
#include "jamsim/precode.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace jamsim {

PrecodingMatrix zf_precoder(const Eigen::MatrixXcd& h_rpt, const Eigen::VectorXd& powers) {
    const Eigen::Index k_users = h_rpt.cols();
    if (powers.size() != k_users) throw std::invalid_argument("zf_precoder: powers size mismatch");
    if (h_rpt.rows() < k_users)
        throw std::invalid_argument("zf_precoder: needs at least as many antennas as users");

    const Eigen::MatrixXcd gram = h_rpt.adjoint() * h_rpt;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
    if (!lu.isInvertible()) throw std::runtime_error("zf_precoder: rank-deficient channel");

    PrecodingMatrix precoder;
    precoder.W = h_rpt * lu.inverse();
    precoder.powers = powers;
    for (Eigen::Index k = 0; k < k_users; ++k) {
        const double norm = precoder.W.col(k).norm();
        if (!(norm > 0.0)) throw std::runtime_error("zf_precoder: zero column");
        precoder.W.col(k) *= std::sqrt(powers(k)) / norm;
    }
    return precoder;
}

GeneralizedEig max_generalized_eigvec(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw std::invalid_argument("max_generalized_eigvec: square same-size matrices required");

    const Eigen::LLT<Eigen::MatrixXcd> llt(B);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("max_generalized_eigvec: B is not positive definite");

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        A, B, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("max_generalized_eigvec: eigensolver failed");

    GeneralizedEig result;
    const Eigen::Index last = solver.eigenvalues().size() - 1;
    result.lambda = solver.eigenvalues()(last);
    result.v = solver.eigenvectors().col(last);
    result.v.normalize();

    Eigen::Index pivot = 0;
    result.v.cwiseAbs().maxCoeff(&pivot);
    const std::complex<double> phase = result.v(pivot) / std::abs(result.v(pivot));
    result.v /= phase;

    const double residual = (A * result.v - result.lambda * (B * result.v)).norm();
    const double scale = A.norm() + std::abs(result.lambda) * B.norm();
    if (!(residual <= 1e-8 * scale))
        throw std::runtime_error("max_generalized_eigvec: residual contract violated");
    return result;
}

std::vector<SjnrOperands> build_sjnr_operands(const Eigen::MatrixXcd& h_rpt,
                                              const AcaStatistics& stats, double sigma2,
                                              double total_power) {
    const Eigen::Index n_a = h_rpt.rows();
    const Eigen::Index k_users = h_rpt.cols();
    if (stats.per_lu_variance.size() != k_users)
        throw std::invalid_argument("build_sjnr_operands: variance size mismatch");
    if (sigma2 <= 0.0) throw std::invalid_argument("build_sjnr_operands: sigma2 must be positive");
    if (total_power <= 0.0)
        throw std::invalid_argument("build_sjnr_operands: total power must be positive");

    const double variance_sum = stats.per_lu_variance.sum();
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n_a, n_a);

    std::vector<SjnrOperands> operands;
    operands.reserve(k_users);
    for (Eigen::Index k = 0; k < k_users; ++k) {
        SjnrOperands op;
        op.A = h_rpt.col(k) * h_rpt.col(k).adjoint() + stats.per_lu_variance(k) * eye;
        Eigen::MatrixXcd leak = Eigen::MatrixXcd::Zero(n_a, n_a);
        for (Eigen::Index u = 0; u < k_users; ++u)
            if (u != k) leak += h_rpt.col(u) * h_rpt.col(u).adjoint();
        const double shift = sigma2 * static_cast<double>(k_users) / total_power +
                             (variance_sum - stats.per_lu_variance(k));
        op.B = leak + shift * eye;
        operands.push_back(std::move(op));
    }
    return operands;
}

PrecodingMatrix anti_jamming_precoder(const Eigen::MatrixXcd& h_rpt, const AcaStatistics& stats,
                                      double sigma2, double total_power) {
    const Eigen::Index k_users = h_rpt.cols();
    const auto operands = build_sjnr_operands(h_rpt, stats, sigma2, total_power);

    PrecodingMatrix precoder;
    precoder.W.resize(h_rpt.rows(), k_users);
    precoder.powers = Eigen::VectorXd::Constant(k_users, total_power / static_cast<double>(k_users));
    for (Eigen::Index k = 0; k < k_users; ++k) {
        const GeneralizedEig eig = max_generalized_eigvec(operands[k].A, operands[k].B);
        precoder.W.col(k) = std::sqrt(precoder.powers(k)) * eig.v;
    }
    return precoder;
}

} // namespace jamsim
