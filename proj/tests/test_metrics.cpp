// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "jamsim/metrics.hpp"

using namespace jamsim;

namespace {

Eigen::MatrixXcd random_matrix(int rows, int cols, Rng& rng) {
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = rng.cnormal();
    return m;
}

} // namespace

TEST_CASE("statistical SJNR on an orthogonal toy system") {
    // h = I, w = I: beam k serves user k exactly, no cross terms
    PrecodingMatrix w;
    w.W = Eigen::MatrixXcd::Identity(2, 2);
    w.powers = Eigen::VectorXd::Constant(2, 1.0);
    const Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(2, 2);

    SUBCASE("no aging") {
        const Eigen::VectorXd v = Eigen::VectorXd::Zero(2);
        CHECK(sjnr_statistical(0, h, w, v, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sjnr_statistical(0, h, w, v, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("aging adds signal and leakage floors") {
        Eigen::VectorXd v(2);
        v << 0.5, 0.25;
        // eta_0 = (1 + 0.5) / (1 + 0.25) with unit-norm beams
        CHECK(sjnr_statistical(0, h, w, v, 1.0) == doctest::Approx(1.2).epsilon(1e-14));
        // eta_1 = (1 + 0.25) / (1 + 0.5)
        CHECK(sjnr_statistical(1, h, w, v, 1.0) ==
              doctest::Approx(1.25 / 1.5).epsilon(1e-14));
    }
    SUBCASE("extra interference enters the denominator only") {
        Eigen::VectorXd v(2);
        v << 0.5, 0.25;
        Eigen::VectorXd extra(2);
        extra << 2.0, 0.0;
        CHECK(sjnr_statistical(0, h, w, v, 1.0, extra) ==
              doctest::Approx(1.5 / 3.25).epsilon(1e-14));
        CHECK(sjnr_statistical(1, h, w, v, 1.0, extra) ==
              doctest::Approx(1.25 / 1.5).epsilon(1e-14));
    }
}

TEST_CASE("statistical SJNR at the anti-jamming precoder equals its eigenvalue") {
    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd h = random_matrix(8, 5, rng);
        AcaStatistics stats;
        stats.per_lu_variance.resize(5);
        for (int k = 0; k < 5; ++k) stats.per_lu_variance(k) = 0.05 + 0.2 * rng.uniform();
        const double sigma2 = 0.3, p0 = 2.0;

        const auto operands = build_sjnr_operands(h, stats, sigma2, p0);
        const PrecodingMatrix w = anti_jamming_precoder(h, stats, sigma2, p0);
        const Eigen::VectorXd eta =
            sjnr_statistical_all(h, w, stats.per_lu_variance, sigma2);
        for (int k = 0; k < 5; ++k) {
            const double lambda = max_generalized_eigvec(operands[k].A, operands[k].B).lambda;
            CHECK(eta(k) == doctest::Approx(lambda).epsilon(1e-8));
        }
    }
}

TEST_CASE("realized SJNR with one un-aged sub-slot matches the statistical form") {
    Rng rng(62);
    const Eigen::MatrixXcd h = random_matrix(6, 4, rng);
    PrecodingMatrix w;
    w.W = random_matrix(6, 4, rng);
    w.powers = Eigen::VectorXd::Constant(4, 1.0);
    const double sigma2 = 0.7;

    const std::vector<Eigen::MatrixXcd> slots = {h};
    for (int k = 0; k < 4; ++k) {
        const double realized = sjnr_realized(k, slots, w, sigma2);
        const double statistical =
            sjnr_statistical(k, h, w, Eigen::VectorXd::Zero(4), sigma2);
        CHECK(realized == doctest::Approx(statistical).epsilon(1e-12));
    }
}

TEST_CASE("realized SJNR converges to the statistical form under synthetic aging") {
    Rng rng(63);
    const int n_a = 6, users = 4, slots = 4000;
    const Eigen::MatrixXcd h = random_matrix(n_a, users, rng);
    PrecodingMatrix w;
    w.W = random_matrix(n_a, users, rng);
    for (int k = 0; k < users; ++k) w.W.col(k) /= w.W.col(k).norm();
    w.powers = Eigen::VectorXd::Constant(users, 1.0);

    Eigen::VectorXd v(users);
    v << 0.2, 0.4, 0.6, 0.8;
    std::vector<Eigen::MatrixXcd> aged(slots);
    for (int c = 0; c < slots; ++c) {
        aged[c] = h;
        for (int u = 0; u < users; ++u)
            for (int n = 0; n < n_a; ++n) aged[c](n, u) += std::sqrt(v(u)) * rng.cnormal();
    }

    const double sigma2 = 0.5;
    for (int k = 0; k < users; ++k) {
        const double realized = sjnr_realized(k, aged, w, sigma2);
        const double statistical = sjnr_statistical(k, h, w, v, sigma2);
        CHECK(realized == doctest::Approx(statistical).epsilon(0.1));
    }
}

TEST_CASE("per-user rate") {
    Eigen::VectorXd one(1);
    one << 1.0;
    CHECK(rate_per_lu(one) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(rate_per_lu(Eigen::VectorXd::Zero(4)) == doctest::Approx(0.0).epsilon(1e-15));

    Eigen::VectorXd two(2);
    two << 1.0, 3.0;
    CHECK(rate_per_lu(two) == doctest::Approx(1.5).epsilon(1e-15));

    Eigen::VectorXd bad(1);
    bad << -0.5;
    CHECK_THROWS_AS(rate_per_lu(bad), std::invalid_argument);
    CHECK_THROWS_AS(rate_per_lu(Eigen::VectorXd()), std::invalid_argument);
}

TEST_CASE("rate report aggregates") {
    Eigen::VectorXd sjnr(2);
    sjnr << 1.0, 3.0;
    const RateReport report = make_rate_report(sjnr, "test");
    CHECK(report.rate_per_lu == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(report.sum_rate == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(report.benchmark == "test");
}

TEST_CASE("active jammer penalty has the right mean power") {
    Placement placement;
    placement.ap_antennas.setZero(1, 3);
    placement.irs_elements.setZero(1, 3);
    placement.lu_positions.setZero(1, 3);
    placement.lu_positions(0, 1) = 180.0;

    const Eigen::Vector3d jammer(-2.0, 0.0, 5.0);
    const double power = dbm_to_w(-4.0);
    // |LU - jammer| = sqrt(4 + 180^2 + 25), frozen expected mean
    const double expected = 1.1546142772835682e-15;

    Rng rng(64);
    double mean = 0.0;
    const int reps = 40000;
    for (int i = 0; i < reps; ++i) mean += active_jammer_penalty(jammer, power, placement, rng)(0);
    mean /= reps;
    CHECK(mean == doctest::Approx(expected).epsilon(0.03));
}
