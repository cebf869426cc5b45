// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "jamsim/precode.hpp"

using namespace jamsim;

namespace {

Eigen::MatrixXcd random_matrix(int rows, int cols, Rng& rng) {
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = rng.cnormal();
    return m;
}

} // namespace

TEST_CASE("zero-forcing nulls cross-user channels and meets power budgets") {
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd h = random_matrix(16, 12, rng);
        Eigen::VectorXd powers(12);
        for (int k = 0; k < 12; ++k) powers(k) = 0.1 + rng.uniform();

        const PrecodingMatrix w = zf_precoder(h, powers);
        REQUIRE(w.W.rows() == 16);
        REQUIRE(w.W.cols() == 12);
        for (int k = 0; k < 12; ++k) {
            CHECK(w.W.col(k).norm() == doctest::Approx(std::sqrt(powers(k))).epsilon(1e-12));
            for (int u = 0; u < 12; ++u) {
                if (u == k) continue;
                const double leak = std::abs(h.col(u).dot(w.W.col(k)));
                CHECK(leak <= 1e-9 * h.col(u).norm() * w.W.col(k).norm());
            }
        }
    }
}

TEST_CASE("zero-forcing rejects rank-deficient channels") {
    Rng rng(52);
    Eigen::MatrixXcd h = random_matrix(8, 4, rng);
    h.col(3) = h.col(0);
    CHECK_THROWS_AS(zf_precoder(h, Eigen::VectorXd::Constant(4, 1.0)), std::runtime_error);
}

TEST_CASE("generalized eigensolve matches a dense inverse-based solver") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + trial % 6;
        const Eigen::MatrixXcd m = random_matrix(n, n, rng);
        const Eigen::MatrixXcd q = random_matrix(n, n, rng);
        const Eigen::MatrixXcd A = m * m.adjoint();
        const Eigen::MatrixXcd B =
            q * q.adjoint() + (0.1 + rng.uniform()) * Eigen::MatrixXcd::Identity(n, n);

        const GeneralizedEig eig = max_generalized_eigvec(A, B);

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> dense(B.inverse() * A);
        double lambda_ref = -1.0;
        for (int i = 0; i < n; ++i)
            lambda_ref = std::max(lambda_ref, dense.eigenvalues()(i).real());

        CHECK(eig.lambda == doctest::Approx(lambda_ref).epsilon(1e-9));
        CHECK(eig.v.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((A * eig.v - eig.lambda * B * eig.v).norm() <=
              1e-8 * (A.norm() + std::abs(eig.lambda) * B.norm()));
    }
}

TEST_CASE("generalized eigensolve scale behavior") {
    Rng rng(54);
    const Eigen::MatrixXcd m = random_matrix(5, 5, rng);
    const Eigen::MatrixXcd q = random_matrix(5, 5, rng);
    const Eigen::MatrixXcd A = m * m.adjoint();
    const Eigen::MatrixXcd B = q * q.adjoint() + Eigen::MatrixXcd::Identity(5, 5);

    const GeneralizedEig base = max_generalized_eigvec(A, B);
    const GeneralizedEig scaled_a = max_generalized_eigvec(3.0 * A, B);
    const GeneralizedEig scaled_b = max_generalized_eigvec(A, 2.0 * B);

    CHECK(scaled_a.lambda == doctest::Approx(3.0 * base.lambda).epsilon(1e-10));
    CHECK(scaled_b.lambda == doctest::Approx(0.5 * base.lambda).epsilon(1e-10));
    CHECK(std::abs(base.v.dot(scaled_a.v)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(base.v.dot(scaled_b.v)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("generalized eigensolve demands a positive definite denominator") {
    Rng rng(55);
    const Eigen::MatrixXcd m = random_matrix(4, 4, rng);
    const Eigen::MatrixXcd A = m * m.adjoint();
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Identity(4, 4);
    B(2, 2) = -1.0;
    CHECK_THROWS_AS(max_generalized_eigvec(A, B), std::runtime_error);

    const Eigen::MatrixXcd rank1 = m.col(0) * m.col(0).adjoint();
    CHECK_THROWS_AS(max_generalized_eigvec(A, rank1), std::runtime_error);
}

TEST_CASE("quadratic-form operands carry the jamming statistics") {
    Rng rng(56);
    const int n_a = 6, users = 4;
    const Eigen::MatrixXcd h = random_matrix(n_a, users, rng);
    AcaStatistics stats;
    stats.per_lu_variance.resize(users);
    stats.per_lu_variance << 0.1, 0.2, 0.3, 0.4;
    const double sigma2 = 0.05, p0 = 2.0;

    const auto operands = build_sjnr_operands(h, stats, sigma2, p0);
    REQUIRE(operands.size() == static_cast<std::size_t>(users));

    for (int k = 0; k < users; ++k) {
        const Eigen::MatrixXcd expected_a =
            h.col(k) * h.col(k).adjoint() +
            stats.per_lu_variance(k) * Eigen::MatrixXcd::Identity(n_a, n_a);
        CHECK((operands[k].A - expected_a).norm() <= 1e-14 * expected_a.norm());

        Eigen::MatrixXcd leak = Eigen::MatrixXcd::Zero(n_a, n_a);
        double others = 0.0;
        for (int u = 0; u < users; ++u) {
            if (u == k) continue;
            leak += h.col(u) * h.col(u).adjoint();
            others += stats.per_lu_variance(u);
        }
        const Eigen::MatrixXcd expected_b =
            leak + (sigma2 * users / p0 + others) * Eigen::MatrixXcd::Identity(n_a, n_a);
        CHECK((operands[k].B - expected_b).norm() <= 1e-14 * expected_b.norm());
    }
}

TEST_CASE("anti-jamming precoder spends the per-user budget") {
    Rng rng(57);
    const Eigen::MatrixXcd h = random_matrix(8, 5, rng);
    AcaStatistics stats;
    stats.per_lu_variance = Eigen::VectorXd::Constant(5, 0.2);
    const double p0 = 3.0;

    const PrecodingMatrix w = anti_jamming_precoder(h, stats, 0.01, p0);
    REQUIRE(w.W.cols() == 5);
    for (int k = 0; k < 5; ++k) {
        CHECK(w.powers(k) == doctest::Approx(p0 / 5.0).epsilon(1e-12));
        CHECK(w.W.col(k).norm() == doctest::Approx(std::sqrt(p0 / 5.0)).epsilon(1e-12));
    }
}

TEST_CASE("without aging and noise the precoder approaches zero forcing") {
    Rng rng(58);
    const Eigen::MatrixXcd h = random_matrix(8, 4, rng);
    AcaStatistics stats;
    stats.per_lu_variance = Eigen::VectorXd::Zero(4);
    const double p0 = 1.0;

    const PrecodingMatrix ajp = anti_jamming_precoder(h, stats, 1e-12, p0);
    const PrecodingMatrix zf = zf_precoder(h, Eigen::VectorXd::Constant(4, p0 / 4.0));
    for (int k = 0; k < 4; ++k) {
        const double align =
            std::abs(ajp.W.col(k).dot(zf.W.col(k))) / (ajp.W.col(k).norm() * zf.W.col(k).norm());
        CHECK(align == doctest::Approx(1.0).epsilon(1e-6));
    }
}
