// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jamsim/dirs.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

enum class BenchmarkKind { NoJammingZf, JammedZf, AjpClosedForm, AjpEstimated, ActiveJammer };

struct BenchmarkSpec {
    BenchmarkKind kind = BenchmarkKind::AjpClosedForm;
    int feedback_count = 1;          // s, AjpEstimated only
    double jammer_power_dbm = -4.0;  // ActiveJammer only
    std::string tag() const;
};

BenchmarkSpec parse_benchmark(const std::string& token); // throws on unknown token

enum class SweepVariable { TxPowerPerLu, FeedbackCount, ElementCount, UserCount, ApIrsDistance };

struct SweepSpec {
    SweepVariable variable = SweepVariable::TxPowerPerLu;
    std::vector<double> values;
};

std::string sweep_name(SweepVariable variable);
SweepVariable parse_sweep_variable(const std::string& name);

struct ExperimentSpec {
    ScenarioConfig scenario;
    DirsProfile profile;
    std::vector<BenchmarkSpec> benchmarks;
    SweepSpec sweep;
    int drops = 100;
    int realizations = 20;
    std::uint64_t seed = 1;
    bool realized_sjnr = false;
    Eigen::Vector3d jammer_position{-2.0, 0.0, 5.0};
    std::string out_path = "results.csv";

    void validate() const;
};

// JSON document with sections "scenario", "dirs", "experiment"; all powers in
// dBm, all distances in m. Missing keys keep defaults.
ExperimentSpec load_spec(const std::string& path);
ExperimentSpec parse_spec(const std::string& json_text);
ExperimentSpec default_spec();

std::string mode_name(JammerMode mode);
JammerMode parse_mode(const std::string& name);
std::string case_label(const DirsProfile& profile); // "c1", "c2" or "custom"

} // namespace jamsim
