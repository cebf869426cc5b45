// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jamsim/config.hpp"

namespace jamsim {

struct ResultRow {
    double sweep_value = 0.0;
    std::string benchmark;
    std::string mode;
    std::string dirs_case;
    double rate_per_lu = 0.0;
    double stderr_rate = 0.0;
    long trials = 0;
};

// Ergodic-rate experiment over the sweep grid. Per grid point, `drops` LU
// placements with `realizations` channel draws each; every benchmark is
// evaluated on the same draws. One RNG stream per drop (seed + drop index),
// merged in index order, so output is independent of the thread count.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, int threads = 0);

// CSV with header sweep,benchmark,mode,case,rate_per_lu,stderr,trials.
std::string rows_to_csv(const std::vector<ResultRow>& rows);
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);

// Minimal line plot of rate vs sweep value, one polyline per benchmark.
void write_svg(const std::vector<ResultRow>& rows, const std::string& path);

// Deterministic index-striped parallel loop; thread t handles indices
// t, t+T, t+2T, ... Results must be written to per-index slots by fn.
void parallel_for_indexed(int count, int threads, const std::function<void(int)>& fn);

// Entry point behind the `jamsim` binary. Subcommands: run, stats, verify.
// Exit codes: 0 ok, 1 runtime/check failure, 2 usage error.
int cli(const std::vector<std::string>& args);

} // namespace jamsim
