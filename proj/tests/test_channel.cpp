// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "jamsim/channel.hpp"

using namespace jamsim;

namespace {

ScenarioConfig channel_config(int users, int antennas, int elements) {
    ScenarioConfig config;
    config.users = users;
    config.ap_antennas = antennas;
    config.irs_elements = elements;
    config.rician_factors = Eigen::VectorXd::Constant(antennas, 10.0);
    return config;
}

} // namespace

TEST_CASE("direct channel rows carry the per-user large-scale gain") {
    Rng rng(21);
    const ScenarioConfig config = channel_config(6, 8, 8);
    const Placement placement = build_scenario(config, rng);
    LargeScale ls = compute_large_scale(config, placement);
    ls.ap_lu << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0;

    const int reps = 20000;
    Eigen::VectorXd power = Eigen::VectorXd::Zero(config.users);
    for (int i = 0; i < reps; ++i) {
        const Eigen::MatrixXcd h = sample_direct_channel(placement, ls, rng);
        REQUIRE(h.rows() == config.users);
        REQUIRE(h.cols() == config.ap_antennas);
        for (int k = 0; k < config.users; ++k) power(k) += h.row(k).squaredNorm();
    }
    for (int k = 0; k < config.users; ++k) {
        const double per_entry = power(k) / reps / config.ap_antennas;
        CHECK(per_entry == doctest::Approx(ls.ap_lu(k)).epsilon(0.03));
    }
}

TEST_CASE("reflector-to-user channel rows carry their own gain") {
    Rng rng(22);
    const ScenarioConfig config = channel_config(3, 4, 16);
    const Placement placement = build_scenario(config, rng);
    LargeScale ls = compute_large_scale(config, placement);
    ls.irs_lu << 0.5, 1.5, 2.5;

    const int reps = 20000;
    Eigen::VectorXd power = Eigen::VectorXd::Zero(config.users);
    for (int i = 0; i < reps; ++i) {
        const Eigen::MatrixXcd h = sample_dirs_lu_channel(placement, ls, rng);
        REQUIRE(h.rows() == config.users);
        REQUIRE(h.cols() == config.irs_elements);
        for (int k = 0; k < config.users; ++k) power(k) += h.row(k).squaredNorm();
    }
    for (int k = 0; k < config.users; ++k) {
        const double per_entry = power(k) / reps / config.irs_elements;
        CHECK(per_entry == doctest::Approx(ls.irs_lu(k)).epsilon(0.03));
    }
}

TEST_CASE("line-of-sight entries are unit modulus with exact geometry phase") {
    Rng rng(23);
    const ScenarioConfig config = channel_config(2, 4, 8);
    const Placement placement = build_scenario(config, rng);
    const Eigen::MatrixXcd los = los_matrix(placement, config.wavelength);
    REQUIRE(los.rows() == config.irs_elements);
    REQUIRE(los.cols() == config.ap_antennas);

    for (int r = 0; r < config.irs_elements; ++r)
        for (int n = 0; n < config.ap_antennas; ++n) {
            CHECK(std::abs(los(r, n)) == doctest::Approx(1.0).epsilon(1e-12));
            const Eigen::Vector3d ant = placement.ap_antennas.row(n);
            const double d_r = (ant - Eigen::Vector3d(placement.irs_elements.row(r))).norm();
            const double d_0 = (ant - Eigen::Vector3d(placement.irs_elements.row(0))).norm();
            const std::complex<double> expected =
                std::polar(1.0, -2.0 * std::numbers::pi / config.wavelength * (d_r - d_0));
            CHECK(std::abs(los(r, n) - expected) < 1e-12);
        }
    CHECK(los.row(0).isOnes());
}

TEST_CASE("half-wavelength path difference flips the phase") {
    // Two elements whose distances to the antenna differ by lambda/2
    Placement placement;
    placement.ap_antennas.setZero(1, 3);
    placement.irs_elements.setZero(2, 3);
    placement.irs_elements(0, 0) = 1.0;
    placement.irs_elements(1, 0) = 1.025;
    placement.lu_positions.setZero(1, 3);

    const std::complex<double> e = los_element(placement, 1, 0, 0.05);
    CHECK(std::abs(e - std::complex<double>(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("reflect-link columns obey the Rician split") {
    Rng rng(24);
    ScenarioConfig config = channel_config(2, 3, 32);
    config.rician_factors << 10.0, 10.0, 10.0;
    const Placement placement = build_scenario(config, rng);
    LargeScale ls = compute_large_scale(config, placement);
    ls.ap_irs = 2.0;
    const Eigen::MatrixXcd los = los_matrix(placement, config.wavelength);

    const int reps = 30000;
    Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(config.irs_elements, config.ap_antennas);
    double power = 0.0;
    for (int i = 0; i < reps; ++i) {
        const Eigen::MatrixXcd g =
            sample_ap_dirs_channel(placement, ls, config.rician_factors, config.wavelength, rng);
        mean += g;
        power += g.squaredNorm();
    }
    mean /= static_cast<double>(reps);
    power /= static_cast<double>(reps) * config.irs_elements * config.ap_antennas;

    const double eps = 10.0;
    const Eigen::MatrixXcd expected_mean = std::sqrt(ls.ap_irs * eps / (eps + 1.0)) * los;
    CHECK((mean - expected_mean).norm() / expected_mean.norm() < 0.02);
    CHECK(power == doctest::Approx(ls.ap_irs).epsilon(0.02));
}

TEST_CASE("channel sampler matches the standalone samplers draw for draw") {
    const ScenarioConfig config = channel_config(3, 4, 8);
    Rng rng_place(25);
    const Placement placement = build_scenario(config, rng_place);
    const LargeScale ls = compute_large_scale(config, placement);

    const ChannelSampler sampler(config, placement, ls);
    Rng a(99);
    Rng b(99);
    const ChannelSet set = sampler.sample(a);
    const Eigen::MatrixXcd h_d = sample_direct_channel(placement, ls, b);
    const Eigen::MatrixXcd h_i = sample_dirs_lu_channel(placement, ls, b);
    const Eigen::MatrixXcd g =
        sample_ap_dirs_channel(placement, ls, config.rician_factors, config.wavelength, b);

    CHECK((set.H_d - h_d).norm() == 0.0);
    CHECK((set.H_I - h_i).norm() == 0.0);
    CHECK((set.G - g).norm() == 0.0);
}
