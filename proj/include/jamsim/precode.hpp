// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "jamsim/stats.hpp"

namespace jamsim {

// Beamforming matrix with its per-LU power budget; column k carries power
// p_k = ||w_k||^2.
struct PrecodingMatrix {
    Eigen::MatrixXcd W;      // N_A x K
    Eigen::VectorXd powers;  // p_k, W
};

// Per-LU quadratic forms of the statistical SJNR: numerator A_k, denominator
// B_k. B_k is positive definite whenever sigma^2 > 0.
struct SjnrOperands {
    Eigen::MatrixXcd A;
    Eigen::MatrixXcd B;
};

// Zero-forcing on the trained channel: raw pseudo-inverse H (H^H H)^-1 with
// every column rescaled to norm sqrt(p_k). Throws on rank deficiency.
PrecodingMatrix zf_precoder(const Eigen::MatrixXcd& h_rpt, const Eigen::VectorXd& powers);

struct GeneralizedEig {
    double lambda = 0.0;
    Eigen::VectorXcd v; // unit norm, largest-magnitude component real positive
};

// Top generalized eigenpair of (A, B), A Hermitian PSD, B Hermitian PD,
// via Cholesky reduction to a standard Hermitian problem. Throws if B is not
// positive definite or the residual contract ||Av - lambda Bv|| fails.
GeneralizedEig max_generalized_eigvec(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

// A_k = h_k h_k^H + v_k I; B_k = Htilde_k Htilde_k^H
//       + (sigma^2 K / P0 + sum_{u != k} v_u) I, Htilde_k = H without column k.
std::vector<SjnrOperands> build_sjnr_operands(const Eigen::MatrixXcd& h_rpt,
                                              const AcaStatistics& stats, double sigma2,
                                              double total_power);

// Max-SJNR precoder: w_k = sqrt(p_k) times the top generalized eigvec of
// (A_k, B_k), p_k = P0/K. The statistical SJNR at w_k equals lambda_max.
PrecodingMatrix anti_jamming_precoder(const Eigen::MatrixXcd& h_rpt, const AcaStatistics& stats,
                                      double sigma2, double total_power);

} // namespace jamsim
