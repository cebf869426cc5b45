// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "jamsim/rng.hpp"

namespace jamsim {

// System geometry, physical constants and power budget. Single source of
// truth for a simulation run; everything downstream is derived from it.
struct ScenarioConfig {
    int users = 12;            // K
    int ap_antennas = 16;      // N_A
    int irs_elements = 2048;   // N_D
    double ap_irs_distance = 2.0;   // m
    double wavelength = 0.05;       // m
    double spacing = 0.025;         // antenna/element spacing, m (half wavelength)
    double bandwidth_hz = 180e3;
    double total_power_w = 12.0 * 6.30957344480193e-4; // P0; default -2 dBm per LU
    int frame_ratio = 6;            // C, data phase lasts C pilot phases
    Eigen::VectorXd rician_factors; // per AP antenna, linear
    double noise_w = 1.8e-15;       // sigma^2
    Eigen::Vector3d lu_center{0.0, 180.0, 0.0};
    double lu_radius = 20.0;
    std::uint64_t seed = 1;

    void validate() const; // throws std::invalid_argument
};

struct Placement {
    Eigen::Matrix<double, Eigen::Dynamic, 3> ap_antennas;   // N_A x 3
    Eigen::Matrix<double, Eigen::Dynamic, 3> irs_elements;  // N_D x 3
    Eigen::Matrix<double, Eigen::Dynamic, 3> lu_positions;  // K x 3
};

struct LargeScale {
    double ap_irs = 0.0;     // L_G
    Eigen::VectorXd irs_lu;  // L_I,k
    Eigen::VectorXd ap_lu;   // L_d,k
};

// AP antennas on a ULA from (0,0,5) along +x; IRS elements on a ULA from
// (-d_AD,0,5) along -x; LUs uniform over the configured disk at height 0.
Placement build_scenario(const ScenarioConfig& config, Rng& rng);

// Table pathloss models, linear gain.
double pathloss_los(double distance_m);
double pathloss_nlos(double distance_m);

// Thermal noise floor for a given bandwidth.
double noise_variance_dbm(double bandwidth_hz);
double noise_variance_w(double bandwidth_hz);

// LOS pathloss on the AP-IRS link, NLOS on AP-LU and IRS-LU links,
// distances taken between the anchor points (first antenna / first element).
LargeScale compute_large_scale(const ScenarioConfig& config, const Placement& placement);

double dbm_to_w(double dbm);
double w_to_dbm(double w);

} // namespace jamsim
