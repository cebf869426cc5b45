// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jamsim/channel.hpp"
#include "jamsim/rng.hpp"

namespace jamsim {

enum class JammerMode { Persistent, Temporal };

// Discrete reflection alphabet of the randomized IRS. Gains are tied to
// phases one-to-one (amplitude = F(phase)); probabilities are shared by all
// elements.
struct DirsProfile {
    int bits = 1;
    Eigen::VectorXd theta;  // 2^bits phase values, rad
    Eigen::VectorXd gains;  // 2^bits amplitudes in (0, 1]
    std::vector<double> probs;
    JammerMode mode = JammerMode::Persistent;
    int elements = 2048;    // N_D

    void validate() const; // throws std::invalid_argument
};

// One reflection vector; silent (all zero) states carry index -1 per element.
struct ReflectionState {
    Eigen::VectorXcd phi;
    std::vector<int> indices;
};

// One coherence frame: pilot-phase state plus C data sub-slot states.
struct CoherenceFrame {
    ReflectionState rpt;
    std::vector<ReflectionState> dt;
};

ReflectionState silent_state(int elements);

// Each element's phase index i.i.d. from the profile distribution.
ReflectionState sample_reflection(const DirsProfile& profile, Rng& rng);

// Persistent: random pilot state; Temporal: silent pilot state. Either way C
// independent data states.
CoherenceFrame sample_frame(const DirsProfile& profile, int frame_ratio, Rng& rng);

// Column k = (h_I,k diag(phi) G + h_d,k)^H, that is (H_I diag(phi) G + H_d)^H.
Eigen::MatrixXcd combined_channel(const ChannelSet& channels, const ReflectionState& state);

// Elementwise H_DT - H_RPT.
Eigen::MatrixXcd aca_channel(const Eigen::MatrixXcd& h_dt, const Eigen::MatrixXcd& h_rpt);

// (H_I (diag(phi_dt) - diag(phi_rpt)) G)^H, the direct-channel-free form.
Eigen::MatrixXcd aca_channel(const ChannelSet& channels, const ReflectionState& dt,
                             const ReflectionState& rpt);

// Table profiles: one-bit alphabet, theta = {pi/9, 7pi/6}, gains = {0.8, 1}.
// Case 1 probabilities (0.25, 0.75), case 2 (0.5, 0.5).
DirsProfile table_profile(int case_id, JammerMode mode, int elements);

} // namespace jamsim
