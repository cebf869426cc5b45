// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "jamsim/rng.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

// One small-scale realization of the three links.
struct ChannelSet {
    Eigen::MatrixXcd G;    // N_D x N_A, AP to IRS, Rician
    Eigen::MatrixXcd H_I;  // K x N_D, IRS to LU rows, Rayleigh
    Eigen::MatrixXcd H_d;  // K x N_A, AP to LU rows, Rayleigh
    LargeScale large_scale;
};

// Row k = sqrt(L_d,k) * hat h, hat h entries i.i.d. CN(0,1).
Eigen::MatrixXcd sample_direct_channel(const Placement& placement,
                                       const LargeScale& large_scale, Rng& rng);

// Same structure with L_I,k.
Eigen::MatrixXcd sample_dirs_lu_channel(const Placement& placement,
                                        const LargeScale& large_scale, Rng& rng);

// Deterministic LOS phase exp(-j 2 pi / lambda * (D_n^r - D_n)) where D_n^r is
// the element-r to antenna-n distance and D_n anchors at the first element.
std::complex<double> los_element(const Placement& placement, int element, int antenna,
                                 double wavelength);

// Full LOS matrix, N_D x N_A.
Eigen::MatrixXcd los_matrix(const Placement& placement, double wavelength);

// Column n mixes the LOS column and an i.i.d. CN(0,1) column with Rician
// weights sqrt(eps/(eps+1)) and sqrt(1/(eps+1)), scaled by sqrt(L_G).
Eigen::MatrixXcd sample_ap_dirs_channel(const Placement& placement,
                                        const LargeScale& large_scale,
                                        const Eigen::VectorXd& rician_factors, double wavelength,
                                        Rng& rng);

// Bundles the three samplers; the LOS matrix is computed once at construction
// so repeated draws over the same placement avoid redundant geometry work.
class ChannelSampler {
  public:
    ChannelSampler(const ScenarioConfig& config, const Placement& placement,
                   const LargeScale& large_scale);
    ChannelSet sample(Rng& rng) const;

  private:
    const Placement& placement_;
    LargeScale large_scale_;
    Eigen::VectorXd rician_factors_;
    Eigen::MatrixXcd los_;
    Eigen::VectorXd los_weight_;   // sqrt(L_G eps/(eps+1)) per antenna
    Eigen::VectorXd nlos_weight_;  // sqrt(L_G/(eps+1)) per antenna
};

// Debug dump, columns: matrix,row,col,re,im.
void dump_channels(const ChannelSet& channels, const std::string& path);

} // namespace jamsim
