// SPDX-License-Identifier: Apache-2.0
#include "jamsim/channel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace jamsim {

namespace {

Eigen::MatrixXcd scaled_rayleigh(const Eigen::VectorXd& gains, Eigen::Index cols, Rng& rng) {
    Eigen::MatrixXcd h(gains.size(), cols);
    for (Eigen::Index k = 0; k < gains.size(); ++k) {
        const double scale = std::sqrt(gains(k));
        for (Eigen::Index c = 0; c < cols; ++c) h(k, c) = scale * rng.cnormal();
    }
    return h;
}

} // namespace

Eigen::MatrixXcd sample_direct_channel(const Placement& placement, const LargeScale& large_scale,
                                       Rng& rng) {
    return scaled_rayleigh(large_scale.ap_lu, placement.ap_antennas.rows(), rng);
}

Eigen::MatrixXcd sample_dirs_lu_channel(const Placement& placement, const LargeScale& large_scale,
                                        Rng& rng) {
    return scaled_rayleigh(large_scale.irs_lu, placement.irs_elements.rows(), rng);
}

std::complex<double> los_element(const Placement& placement, int element, int antenna,
                                 double wavelength) {
    if (element < 0 || element >= placement.irs_elements.rows())
        throw std::out_of_range("los_element: element index");
    if (antenna < 0 || antenna >= placement.ap_antennas.rows())
        throw std::out_of_range("los_element: antenna index");
    const Eigen::Vector3d ant = placement.ap_antennas.row(antenna);
    const double d_rn = (ant - Eigen::Vector3d(placement.irs_elements.row(element))).norm();
    const double d_n = (ant - Eigen::Vector3d(placement.irs_elements.row(0))).norm();
    const double phase = -2.0 * std::numbers::pi / wavelength * (d_rn - d_n);
    return {std::cos(phase), std::sin(phase)};
}

Eigen::MatrixXcd los_matrix(const Placement& placement, double wavelength) {
    Eigen::MatrixXcd los(placement.irs_elements.rows(), placement.ap_antennas.rows());
    for (Eigen::Index n = 0; n < los.cols(); ++n)
        for (Eigen::Index r = 0; r < los.rows(); ++r)
            los(r, n) = los_element(placement, static_cast<int>(r), static_cast<int>(n), wavelength);
    return los;
}

Eigen::MatrixXcd sample_ap_dirs_channel(const Placement& placement, const LargeScale& large_scale,
                                        const Eigen::VectorXd& rician_factors, double wavelength,
                                        Rng& rng) {
    const Eigen::Index n_d = placement.irs_elements.rows();
    const Eigen::Index n_a = placement.ap_antennas.rows();
    if (rician_factors.size() != n_a)
        throw std::invalid_argument("rician factor count must match antenna count");
    if (rician_factors.minCoeff() < 0.0)
        throw std::invalid_argument("rician factors must be nonnegative");

    const Eigen::MatrixXcd los = los_matrix(placement, wavelength);
    Eigen::MatrixXcd g(n_d, n_a);
    for (Eigen::Index n = 0; n < n_a; ++n) {
        const double eps = rician_factors(n);
        const double w_los = std::sqrt(large_scale.ap_irs * eps / (eps + 1.0));
        const double w_nlos = std::sqrt(large_scale.ap_irs / (eps + 1.0));
        for (Eigen::Index r = 0; r < n_d; ++r)
            g(r, n) = w_los * los(r, n) + w_nlos * rng.cnormal();
    }
    return g;
}

ChannelSampler::ChannelSampler(const ScenarioConfig& config, const Placement& placement,
                               const LargeScale& large_scale)
    : placement_(placement), large_scale_(large_scale) {
    rician_factors_ = config.rician_factors.size() > 0
                          ? config.rician_factors
                          : Eigen::VectorXd::Constant(config.ap_antennas, 10.0);
    if (rician_factors_.minCoeff() < 0.0)
        throw std::invalid_argument("rician factors must be nonnegative");
    los_ = los_matrix(placement, config.wavelength);
    los_weight_.resize(rician_factors_.size());
    nlos_weight_.resize(rician_factors_.size());
    for (Eigen::Index n = 0; n < rician_factors_.size(); ++n) {
        const double eps = rician_factors_(n);
        los_weight_(n) = std::sqrt(large_scale_.ap_irs * eps / (eps + 1.0));
        nlos_weight_(n) = std::sqrt(large_scale_.ap_irs / (eps + 1.0));
    }
}

ChannelSet ChannelSampler::sample(Rng& rng) const {
    ChannelSet set;
    set.large_scale = large_scale_;
    set.H_d = sample_direct_channel(placement_, large_scale_, rng);
    set.H_I = sample_dirs_lu_channel(placement_, large_scale_, rng);
    set.G.resize(los_.rows(), los_.cols());
    for (Eigen::Index n = 0; n < los_.cols(); ++n)
        for (Eigen::Index r = 0; r < los_.rows(); ++r)
            set.G(r, n) = los_weight_(n) * los_(r, n) + nlos_weight_(n) * rng.cnormal();
    return set;
}

void dump_channels(const ChannelSet& channels, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "matrix,row,col,re,im\n";
    const auto dump = [&out](const char* name, const Eigen::MatrixXcd& m) {
        char line[128];
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                std::snprintf(line, sizeof(line), "%s,%ld,%ld,%.17g,%.17g\n", name,
                              static_cast<long>(r), static_cast<long>(c), m(r, c).real(),
                              m(r, c).imag());
                out << line;
            }
    };
    dump("G", channels.G);
    dump("H_I", channels.H_I);
    dump("H_d", channels.H_d);
}

} // namespace jamsim
