// SPDX-License-Identifier: Apache-2.0
#include "jamsim/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jamsim {

void ScenarioConfig::validate() const {
    if (users < 1) throw std::invalid_argument("users must be >= 1");
    if (ap_antennas < users)
        throw std::invalid_argument("ap_antennas must be >= users for zero forcing");
    if (irs_elements < 1) throw std::invalid_argument("irs_elements must be >= 1");
    if (ap_irs_distance <= 0.0) throw std::invalid_argument("ap_irs_distance must be positive");
    if (wavelength <= 0.0) throw std::invalid_argument("wavelength must be positive");
    if (spacing <= 0.0) throw std::invalid_argument("spacing must be positive");
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth_hz must be positive");
    if (total_power_w <= 0.0) throw std::invalid_argument("total_power_w must be positive");
    if (frame_ratio < 1) throw std::invalid_argument("frame_ratio must be >= 1");
    if (noise_w <= 0.0) throw std::invalid_argument("noise_w must be positive");
    if (lu_radius <= 0.0) throw std::invalid_argument("lu_radius must be positive");
    if (rician_factors.size() != 0 && rician_factors.size() != ap_antennas)
        throw std::invalid_argument("rician_factors length must match ap_antennas");
    if (rician_factors.size() > 0 && rician_factors.minCoeff() < 0.0)
        throw std::invalid_argument("rician_factors must be nonnegative");
}

Placement build_scenario(const ScenarioConfig& config, Rng& rng) {
    config.validate();

    Placement placement;
    placement.ap_antennas.resize(config.ap_antennas, 3);
    for (int n = 0; n < config.ap_antennas; ++n)
        placement.ap_antennas.row(n) << n * config.spacing, 0.0, 5.0;

    placement.irs_elements.resize(config.irs_elements, 3);
    for (int r = 0; r < config.irs_elements; ++r)
        placement.irs_elements.row(r) << -config.ap_irs_distance - r * config.spacing, 0.0, 5.0;

    placement.lu_positions.resize(config.users, 3);
    for (int k = 0; k < config.users; ++k) {
        const double radius = config.lu_radius * std::sqrt(rng.uniform());
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        placement.lu_positions.row(k) << config.lu_center.x() + radius * std::cos(angle),
            config.lu_center.y() + radius * std::sin(angle), 0.0;
    }
    return placement;
}

double pathloss_los(double distance_m) {
    if (distance_m <= 0.0) throw std::invalid_argument("pathloss distance must be positive");
    return std::pow(10.0, -(35.6 + 22.0 * std::log10(distance_m)) / 10.0);
}

double pathloss_nlos(double distance_m) {
    if (distance_m <= 0.0) throw std::invalid_argument("pathloss distance must be positive");
    return std::pow(10.0, -(32.6 + 36.7 * std::log10(distance_m)) / 10.0);
}

double noise_variance_dbm(double bandwidth_hz) {
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth must be positive");
    return -170.0 + 10.0 * std::log10(bandwidth_hz);
}

double noise_variance_w(double bandwidth_hz) {
    return dbm_to_w(noise_variance_dbm(bandwidth_hz));
}

LargeScale compute_large_scale(const ScenarioConfig& config, const Placement& placement) {
    LargeScale ls;
    const Eigen::Vector3d ap = placement.ap_antennas.row(0);
    const Eigen::Vector3d irs = placement.irs_elements.row(0);
    ls.ap_irs = pathloss_los((ap - irs).norm());
    ls.irs_lu.resize(config.users);
    ls.ap_lu.resize(config.users);
    for (int k = 0; k < config.users; ++k) {
        const Eigen::Vector3d lu = placement.lu_positions.row(k);
        ls.irs_lu(k) = pathloss_nlos((irs - lu).norm());
        ls.ap_lu(k) = pathloss_nlos((ap - lu).norm());
    }
    return ls;
}

double dbm_to_w(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double w_to_dbm(double w) { return 10.0 * std::log10(w * 1e3); }

} // namespace jamsim
