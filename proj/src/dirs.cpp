// SPDX-License-Identifier: Apache-2.0
#include "jamsim/dirs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jamsim {

void DirsProfile::validate() const {
    const int count = 1 << bits;
    if (bits < 0) throw std::invalid_argument("bits must be nonnegative");
    if (theta.size() != count || gains.size() != count ||
        static_cast<int>(probs.size()) != count)
        throw std::invalid_argument("theta, gains, probs must all have 2^bits entries");
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw std::invalid_argument("probabilities must be nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1");
    for (Eigen::Index i = 0; i < gains.size(); ++i)
        if (gains(i) <= 0.0 || gains(i) > 1.0)
            throw std::invalid_argument("gains must lie in (0, 1]");
    if (elements < 1) throw std::invalid_argument("elements must be >= 1");
}

ReflectionState silent_state(int elements) {
    ReflectionState state;
    state.phi = Eigen::VectorXcd::Zero(elements);
    state.indices.assign(elements, -1);
    return state;
}

ReflectionState sample_reflection(const DirsProfile& profile, Rng& rng) {
    profile.validate();
    ReflectionState state;
    state.phi.resize(profile.elements);
    state.indices.resize(profile.elements);
    for (int r = 0; r < profile.elements; ++r) {
        const int idx = static_cast<int>(rng.categorical(profile.probs));
        state.indices[r] = idx;
        state.phi(r) = std::polar(profile.gains(idx), profile.theta(idx));
    }
    return state;
}

CoherenceFrame sample_frame(const DirsProfile& profile, int frame_ratio, Rng& rng) {
    if (frame_ratio < 1) throw std::invalid_argument("frame_ratio must be >= 1");
    CoherenceFrame frame;
    frame.rpt = profile.mode == JammerMode::Persistent ? sample_reflection(profile, rng)
                                                       : silent_state(profile.elements);
    frame.dt.reserve(frame_ratio);
    for (int c = 0; c < frame_ratio; ++c) frame.dt.push_back(sample_reflection(profile, rng));
    return frame;
}

Eigen::MatrixXcd combined_channel(const ChannelSet& channels, const ReflectionState& state) {
    if (state.phi.size() != channels.H_I.cols() || channels.G.rows() != channels.H_I.cols() ||
        channels.G.cols() != channels.H_d.cols() || channels.H_I.rows() != channels.H_d.rows())
        throw std::invalid_argument("combined_channel: dimension mismatch");
    return ((channels.H_I * state.phi.asDiagonal()) * channels.G + channels.H_d).adjoint();
}

Eigen::MatrixXcd aca_channel(const Eigen::MatrixXcd& h_dt, const Eigen::MatrixXcd& h_rpt) {
    if (h_dt.rows() != h_rpt.rows() || h_dt.cols() != h_rpt.cols())
        throw std::invalid_argument("aca_channel: shape mismatch");
    return h_dt - h_rpt;
}

Eigen::MatrixXcd aca_channel(const ChannelSet& channels, const ReflectionState& dt,
                             const ReflectionState& rpt) {
    if (dt.phi.size() != rpt.phi.size() || dt.phi.size() != channels.H_I.cols())
        throw std::invalid_argument("aca_channel: shape mismatch");
    const Eigen::VectorXcd diff = dt.phi - rpt.phi;
    return ((channels.H_I * diff.asDiagonal()) * channels.G).adjoint();
}

DirsProfile table_profile(int case_id, JammerMode mode, int elements) {
    if (case_id != 1 && case_id != 2) throw std::invalid_argument("case_id must be 1 or 2");
    DirsProfile profile;
    profile.bits = 1;
    profile.theta.resize(2);
    profile.theta << std::numbers::pi / 9.0, 7.0 * std::numbers::pi / 6.0;
    profile.gains.resize(2);
    profile.gains << 0.8, 1.0;
    profile.probs = case_id == 1 ? std::vector<double>{0.25, 0.75}
                                 : std::vector<double>{0.5, 0.5};
    profile.mode = mode;
    profile.elements = elements;
    return profile;
}

} // namespace jamsim
