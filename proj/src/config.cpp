// SPDX-License-Identifier: Apache-2.0
#include "jamsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace jamsim {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

std::string BenchmarkSpec::tag() const {
    switch (kind) {
        case BenchmarkKind::NoJammingZf: return "NoJamming_ZF";
        case BenchmarkKind::JammedZf: return "Jammed_ZF";
        case BenchmarkKind::AjpClosedForm: return "AJP_ClosedForm";
        case BenchmarkKind::AjpEstimated:
            return "AJP_Estimated(" + std::to_string(feedback_count) + ")";
        case BenchmarkKind::ActiveJammer: {
            std::ostringstream os;
            os << "ActiveJammer(" << jammer_power_dbm << "dBm)";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

BenchmarkSpec parse_benchmark(const std::string& token) {
    BenchmarkSpec spec;
    std::string name = lower(token);
    std::string param;
    if (const auto colon = name.find(':'); colon != std::string::npos) {
        param = name.substr(colon + 1);
        name = name.substr(0, colon);
    }
    if (name == "nojamming_zf" || name == "nojam") {
        spec.kind = BenchmarkKind::NoJammingZf;
    } else if (name == "jammed_zf" || name == "zf") {
        spec.kind = BenchmarkKind::JammedZf;
    } else if (name == "ajp_closedform" || name == "ajp") {
        spec.kind = BenchmarkKind::AjpClosedForm;
    } else if (name == "ajp_estimated" || name == "est") {
        spec.kind = BenchmarkKind::AjpEstimated;
        spec.feedback_count = param.empty() ? 1 : std::stoi(param);
        if (spec.feedback_count < 1)
            throw std::invalid_argument("benchmark " + token + ": feedback count must be >= 1");
    } else if (name == "activejammer" || name == "aj") {
        spec.kind = BenchmarkKind::ActiveJammer;
        if (!param.empty()) spec.jammer_power_dbm = std::stod(param);
    } else {
        throw std::invalid_argument("unknown benchmark: " + token);
    }
    return spec;
}

std::string sweep_name(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::TxPowerPerLu: return "tx_power_per_lu";
        case SweepVariable::FeedbackCount: return "feedback_count";
        case SweepVariable::ElementCount: return "N_D";
        case SweepVariable::UserCount: return "K";
        case SweepVariable::ApIrsDistance: return "d_AD";
    }
    throw std::logic_error("unreachable");
}

SweepVariable parse_sweep_variable(const std::string& name) {
    const std::string n = lower(name);
    if (n == "tx_power_per_lu" || n == "power") return SweepVariable::TxPowerPerLu;
    if (n == "feedback_count" || n == "s") return SweepVariable::FeedbackCount;
    if (n == "n_d" || n == "elements") return SweepVariable::ElementCount;
    if (n == "k" || n == "users") return SweepVariable::UserCount;
    if (n == "d_ad" || n == "distance") return SweepVariable::ApIrsDistance;
    throw std::invalid_argument("unknown sweep variable: " + name);
}

void ExperimentSpec::validate() const {
    scenario.validate();
    profile.validate();
    if (profile.elements != scenario.irs_elements)
        throw std::invalid_argument("profile/scenario element counts differ");
    if (benchmarks.empty()) throw std::invalid_argument("benchmark set must be non-empty");
    if (sweep.values.empty()) throw std::invalid_argument("sweep grid must be non-empty");
    if (drops < 1 || realizations < 1) throw std::invalid_argument("trials must be >= 1");
    for (const auto& b : benchmarks)
        if (b.kind == BenchmarkKind::AjpEstimated && b.feedback_count > scenario.frame_ratio)
            throw std::invalid_argument("feedback count cannot exceed frame_ratio");
}

std::string mode_name(JammerMode mode) {
    return mode == JammerMode::Persistent ? "persistent" : "temporal";
}

JammerMode parse_mode(const std::string& name) {
    const std::string n = lower(name);
    if (n == "persistent") return JammerMode::Persistent;
    if (n == "temporal") return JammerMode::Temporal;
    throw std::invalid_argument("unknown mode: " + name);
}

std::string case_label(const DirsProfile& profile) {
    const DirsProfile c1 = table_profile(1, profile.mode, profile.elements);
    const DirsProfile c2 = table_profile(2, profile.mode, profile.elements);
    const auto matches = [&profile](const DirsProfile& ref) {
        if (profile.theta.size() != ref.theta.size()) return false;
        return (profile.theta - ref.theta).cwiseAbs().maxCoeff() < 1e-12 &&
               (profile.gains - ref.gains).cwiseAbs().maxCoeff() < 1e-12 &&
               std::equal(profile.probs.begin(), profile.probs.end(), ref.probs.begin(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; });
    };
    if (matches(c1)) return "c1";
    if (matches(c2)) return "c2";
    return "custom";
}

ExperimentSpec default_spec() {
    ExperimentSpec spec;
    spec.scenario = ScenarioConfig{};
    spec.scenario.rician_factors = Eigen::VectorXd::Constant(spec.scenario.ap_antennas, 10.0);
    spec.scenario.noise_w = noise_variance_w(spec.scenario.bandwidth_hz);
    spec.scenario.total_power_w = spec.scenario.users * dbm_to_w(-2.0);
    spec.profile = table_profile(2, JammerMode::Temporal, spec.scenario.irs_elements);
    spec.benchmarks = {parse_benchmark("nojam"), parse_benchmark("zf"), parse_benchmark("ajp")};
    spec.sweep.variable = SweepVariable::TxPowerPerLu;
    spec.sweep.values = {-2.0};
    return spec;
}

ExperimentSpec parse_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }

    ExperimentSpec spec = default_spec();
    double power_dbm = -2.0;
    bool noise_override = false;
    double noise_dbm = 0.0;

    if (doc.contains("scenario")) {
        const auto& s = doc["scenario"];
        auto& c = spec.scenario;
        if (s.contains("users")) c.users = s["users"].get<int>();
        if (s.contains("ap_antennas")) c.ap_antennas = s["ap_antennas"].get<int>();
        if (s.contains("irs_elements")) c.irs_elements = s["irs_elements"].get<int>();
        if (s.contains("ap_irs_distance_m")) c.ap_irs_distance = s["ap_irs_distance_m"].get<double>();
        if (s.contains("wavelength_m")) {
            c.wavelength = s["wavelength_m"].get<double>();
            c.spacing = c.wavelength / 2.0;
        }
        if (s.contains("spacing_m")) c.spacing = s["spacing_m"].get<double>();
        if (s.contains("bandwidth_hz")) c.bandwidth_hz = s["bandwidth_hz"].get<double>();
        if (s.contains("tx_power_per_lu_dbm")) power_dbm = s["tx_power_per_lu_dbm"].get<double>();
        if (s.contains("frame_ratio")) c.frame_ratio = s["frame_ratio"].get<int>();
        if (s.contains("rician_factor"))
            c.rician_factors = Eigen::VectorXd::Constant(c.ap_antennas, s["rician_factor"].get<double>());
        if (s.contains("rician_factors")) {
            const auto vals = s["rician_factors"].get<std::vector<double>>();
            c.rician_factors = Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
        }
        if (s.contains("noise_dbm")) {
            noise_override = true;
            noise_dbm = s["noise_dbm"].get<double>();
        }
        if (s.contains("lu_disk")) {
            const auto& disk = s["lu_disk"];
            if (disk.contains("center")) {
                const auto ctr = disk["center"].get<std::vector<double>>();
                if (ctr.size() != 3)
                    throw std::invalid_argument("lu_disk.center must have 3 coordinates");
                spec.scenario.lu_center = Eigen::Vector3d(ctr[0], ctr[1], ctr[2]);
            }
            if (disk.contains("radius_m")) spec.scenario.lu_radius = disk["radius_m"].get<double>();
        }
        if (s.contains("seed")) c.seed = s["seed"].get<std::uint64_t>();
        if (c.rician_factors.size() != c.ap_antennas)
            c.rician_factors = Eigen::VectorXd::Constant(
                c.ap_antennas, c.rician_factors.size() > 0 ? c.rician_factors(0) : 10.0);
    }
    spec.scenario.noise_w = noise_override ? dbm_to_w(noise_dbm)
                                           : noise_variance_w(spec.scenario.bandwidth_hz);
    spec.scenario.total_power_w = spec.scenario.users * dbm_to_w(power_dbm);

    if (doc.contains("dirs")) {
        const auto& d = doc["dirs"];
        auto& p = spec.profile;
        if (d.contains("case")) {
            const std::string label = lower(d["case"].get<std::string>());
            if (label != "c1" && label != "c2")
                throw std::invalid_argument("dirs.case must be c1 or c2");
            p = table_profile(label == "c1" ? 1 : 2, p.mode, spec.scenario.irs_elements);
        }
        if (d.contains("bits")) p.bits = d["bits"].get<int>();
        if (d.contains("theta_rad")) {
            const auto vals = d["theta_rad"].get<std::vector<double>>();
            p.theta = Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
        }
        if (d.contains("gains")) {
            const auto vals = d["gains"].get<std::vector<double>>();
            p.gains = Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size());
        }
        if (d.contains("probs")) p.probs = d["probs"].get<std::vector<double>>();
        if (d.contains("mode")) p.mode = parse_mode(d["mode"].get<std::string>());
    }
    spec.profile.elements = spec.scenario.irs_elements;

    bool sweep_given = false;
    if (doc.contains("experiment")) {
        const auto& e = doc["experiment"];
        if (e.contains("benchmarks")) {
            spec.benchmarks.clear();
            for (const auto& token : e["benchmarks"])
                spec.benchmarks.push_back(parse_benchmark(token.get<std::string>()));
        }
        if (e.contains("drops")) spec.drops = e["drops"].get<int>();
        if (e.contains("realizations")) spec.realizations = e["realizations"].get<int>();
        if (e.contains("seed")) spec.seed = e["seed"].get<std::uint64_t>();
        if (e.contains("realized_sjnr")) spec.realized_sjnr = e["realized_sjnr"].get<bool>();
        if (e.contains("out")) spec.out_path = e["out"].get<std::string>();
        if (e.contains("jammer_position")) {
            const auto pos = e["jammer_position"].get<std::vector<double>>();
            if (pos.size() != 3) throw std::invalid_argument("jammer_position must have 3 coordinates");
            spec.jammer_position = Eigen::Vector3d(pos[0], pos[1], pos[2]);
        }
        if (e.contains("sweep")) {
            sweep_given = true;
            const auto& sw = e["sweep"];
            spec.sweep.variable = parse_sweep_variable(sw["name"].get<std::string>());
            spec.sweep.values.clear();
            if (sw.contains("values")) {
                spec.sweep.values = sw["values"].get<std::vector<double>>();
            } else {
                const double start = sw["start"].get<double>();
                const double stop = sw["stop"].get<double>();
                const double step = sw.contains("step") ? sw["step"].get<double>() : 1.0;
                if (step <= 0.0) throw std::invalid_argument("sweep step must be positive");
                for (double v = start; v <= stop + 1e-9 * std::abs(step); v += step)
                    spec.sweep.values.push_back(v);
            }
        }
    }
    if (!sweep_given) {
        spec.sweep.variable = SweepVariable::TxPowerPerLu;
        spec.sweep.values = {power_dbm};
    }

    spec.validate();
    return spec;
}

ExperimentSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

} // namespace jamsim
