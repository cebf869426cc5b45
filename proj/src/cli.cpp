// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdio>
#include <numbers>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jamsim/estimate.hpp"
#include "jamsim/harness.hpp"
#include "jamsim/metrics.hpp"
#include "jamsim/stats.hpp"

namespace jamsim {

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
    std::optional<std::string> dirs_case;
    std::optional<int> trials;
};

ExperimentSpec resolve_spec(const CommonOpts& opts) {
    ExperimentSpec spec = opts.config_path.empty() ? default_spec() : load_spec(opts.config_path);
    if (opts.mode) spec.profile.mode = parse_mode(*opts.mode);
    if (opts.dirs_case) {
        if (*opts.dirs_case != "c1" && *opts.dirs_case != "c2")
            throw CLI::ValidationError("--case", "must be c1 or c2");
        spec.profile = table_profile(*opts.dirs_case == "c1" ? 1 : 2, spec.profile.mode,
                                     spec.scenario.irs_elements);
    }
    if (opts.seed) spec.seed = *opts.seed;
    if (opts.trials) spec.drops = *opts.trials;
    return spec;
}

std::vector<double> parse_grid(const std::string& text) {
    // start:stop:step, stop inclusive
    std::vector<double> values;
    double start = 0.0, stop = 0.0, step = 1.0;
    const int got = std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step);
    if (got < 2) {
        values.push_back(std::stod(text));
        return values;
    }
    if (got == 2) step = 1.0;
    if (step <= 0.0) throw CLI::ValidationError("--sweep", "step must be positive");
    for (double v = start; v <= stop + 1e-9 * step; v += step) values.push_back(v);
    return values;
}

int run_command(const CommonOpts& opts, const std::string& sweep_arg,
                const std::string& benchmarks_arg, const std::string& out_override,
                const std::string& svg_path, const std::string& dump_path,
                const std::string& trace_path, bool realized) {
    ExperimentSpec spec = resolve_spec(opts);
    if (!sweep_arg.empty()) {
        const auto eq = sweep_arg.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--sweep", "expected NAME=start:stop:step");
        spec.sweep.variable = parse_sweep_variable(sweep_arg.substr(0, eq));
        spec.sweep.values = parse_grid(sweep_arg.substr(eq + 1));
    }
    if (!benchmarks_arg.empty()) {
        spec.benchmarks.clear();
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            const auto comma = benchmarks_arg.find(',', pos);
            const std::string token = benchmarks_arg.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!token.empty()) spec.benchmarks.push_back(parse_benchmark(token));
            pos = comma == std::string::npos ? std::string::npos : comma + 1;
        }
    }
    if (!out_override.empty()) spec.out_path = out_override;
    if (realized) spec.realized_sjnr = true;
    spec.validate();

    if (!dump_path.empty()) {
        Rng rng(spec.seed);
        const Placement placement = build_scenario(spec.scenario, rng);
        const LargeScale ls = compute_large_scale(spec.scenario, placement);
        dump_channels(ChannelSampler(spec.scenario, placement, ls).sample(rng), dump_path);
    }
    if (!trace_path.empty()) {
        FeedbackTraceWriter trace(trace_path);
        Rng rng(spec.seed);
        const Placement placement = build_scenario(spec.scenario, rng);
        const LargeScale ls = compute_large_scale(spec.scenario, placement);
        const ChannelSampler sampler(spec.scenario, placement, ls);
        const double p0 = spec.scenario.total_power_w;
        for (int frame_idx = 0; frame_idx < spec.realizations; ++frame_idx) {
            const ChannelSet channels = sampler.sample(rng);
            const CoherenceFrame frame = sample_frame(spec.profile, spec.scenario.frame_ratio, rng);
            const Eigen::MatrixXcd h_rpt = combined_channel(channels, frame.rpt);
            FeedbackLog log(spec.scenario.users, spec.scenario.frame_ratio);
            for (int s = 1; s <= spec.scenario.frame_ratio; ++s) {
                const Eigen::MatrixXcd h_dt = combined_channel(channels, frame.dt[s - 1]);
                for (int k = 0; k < spec.scenario.users; ++k) {
                    const double p = feedback_power(h_dt.col(k), p0, spec.scenario.users);
                    log.append(k, p);
                    trace.row(frame_idx, s, k,
                              p, estimate_characteristic(log, k, h_rpt.col(k), p0,
                                                         spec.scenario.ap_antennas, s));
                }
            }
        }
    }

    const auto rows = run_experiment(spec);
    write_csv(rows, spec.out_path);
    if (!svg_path.empty()) write_svg(rows, svg_path);
    std::cout << rows_to_csv(rows);
    return 0;
}

int stats_command(const CommonOpts& opts, const std::string& report_path) {
    ExperimentSpec spec = resolve_spec(opts);
    const DirsProfile& profile = spec.profile;
    const double alpha = profile.mode == JammerMode::Persistent ? alpha_bar_persistent(profile)
                                                                : alpha_bar_temporal(profile);
    std::printf("mode=%s case=%s alpha_bar=%.6f\n", mode_name(profile.mode).c_str(),
                case_label(profile).c_str(), alpha);

    Rng rng(spec.seed);
    const Placement placement = build_scenario(spec.scenario, rng);
    const LargeScale ls = compute_large_scale(spec.scenario, placement);
    const AcaStatistics closed = aca_variances(spec.scenario, profile, ls);
    for (Eigen::Index k = 0; k < closed.per_lu_variance.size(); ++k)
        std::printf("v[%ld]=%.6e\n", static_cast<long>(k), closed.per_lu_variance(k));

    if (opts.trials) {
        const MomentReport report =
            empirical_aca_moments(spec.scenario, profile, *opts.trials, spec.seed);
        if (!report_path.empty()) write_moment_report(report, report_path);
        bool ok = true;
        for (Eigen::Index k = 0; k < report.mean.cols(); ++k) {
            double worst = 0.0;
            for (Eigen::Index n = 0; n < report.mean.rows(); ++n)
                worst = std::max(worst,
                                 std::abs(report.variance(n, k) / report.closed_form(k) - 1.0));
            std::printf("k=%ld max |var_emp/var_closed - 1| = %.4f\n", static_cast<long>(k), worst);
            ok = ok && worst < 0.05;
        }
        std::printf("moment check %s\n", ok ? "ok" : "FAILED");
        return ok ? 0 : 1;
    }
    return 0;
}

int verify_command() {
    int failures = 0;
    const auto check = [&failures](const char* name, bool pass) {
        std::printf("[%s] %s\n", pass ? "ok" : "FAIL", name);
        if (!pass) ++failures;
    };

    {
        Rng rng(11);
        bool pass = true;
        for (int trial = 0; trial < 200 && pass; ++trial) {
            DirsProfile profile;
            profile.bits = 1 + (trial % 2);
            const int count = 1 << profile.bits;
            profile.theta.resize(count);
            profile.gains.resize(count);
            profile.probs.resize(count);
            double total = 0.0;
            for (int i = 0; i < count; ++i) {
                profile.theta(i) = 2.0 * std::numbers::pi * rng.uniform();
                profile.gains(i) = 0.2 + 0.8 * rng.uniform();
                profile.probs[i] = 0.1 + rng.uniform();
                total += profile.probs[i];
            }
            for (int i = 0; i < count; ++i) profile.probs[i] /= total;
            std::complex<double> mean(0.0, 0.0);
            for (int i = 0; i < count; ++i)
                mean += profile.probs[i] * std::polar(profile.gains(i), profile.theta(i));
            const double lhs = alpha_bar_persistent(profile);
            const double rhs = 2.0 * (alpha_bar_temporal(profile) - std::norm(mean));
            pass = std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs));
        }
        check("alpha identity: persistent = 2(temporal - |mean|^2)", pass);
    }
    {
        // The two exponents cross near 1.6 m; LOS dominates past that point
        bool pass = true;
        double prev_los = 1e9, prev_nlos = 1e9;
        for (double d = 1.0; d <= 300.0; d += 7.3) {
            const double los = pathloss_los(d), nlos = pathloss_nlos(d);
            pass = pass && los < prev_los && nlos < prev_nlos && (d < 2.0 || los >= nlos);
            prev_los = los;
            prev_nlos = nlos;
        }
        check("pathloss monotone, LOS >= NLOS beyond the crossover", pass);
    }
    {
        Rng rng(12);
        const DirsProfile profile = table_profile(1, JammerMode::Persistent, 64);
        const ReflectionState state = sample_reflection(profile, rng);
        bool pass = true;
        for (int r = 0; r < profile.elements; ++r) {
            const int idx = state.indices[r];
            pass = pass && idx >= 0 && idx < 2 &&
                   std::abs(state.phi(r) - std::polar(profile.gains(idx), profile.theta(idx))) == 0.0;
        }
        const DirsProfile temporal = table_profile(1, JammerMode::Temporal, 64);
        const CoherenceFrame frame = sample_frame(temporal, 6, rng);
        pass = pass && frame.rpt.phi.isZero(0.0) && frame.dt.size() == 6;
        check("reflection alphabet membership and temporal silence", pass);
    }
    {
        Rng rng(13);
        bool pass = true;
        for (int trial = 0; trial < 20 && pass; ++trial) {
            ScenarioConfig config;
            config.users = 3;
            config.ap_antennas = 4;
            config.irs_elements = 16;
            config.rician_factors = Eigen::VectorXd::Constant(4, 10.0);
            const Placement placement = build_scenario(config, rng);
            const LargeScale ls = compute_large_scale(config, placement);
            const ChannelSampler sampler(config, placement, ls);
            const ChannelSet channels = sampler.sample(rng);
            const DirsProfile profile = table_profile(2, JammerMode::Persistent, 16);
            const ReflectionState a = sample_reflection(profile, rng);
            const ReflectionState b = sample_reflection(profile, rng);
            const Eigen::MatrixXcd direct =
                aca_channel(combined_channel(channels, a), combined_channel(channels, b));
            const Eigen::MatrixXcd algebraic = aca_channel(channels, a, b);
            pass = (direct - algebraic).norm() <= 1e-12 * std::max(1.0, algebraic.norm());
        }
        check("aging channel identity: combined difference = reflection difference", pass);
    }
    {
        Rng rng(14);
        bool pass = true;
        for (int trial = 0; trial < 20 && pass; ++trial) {
            Eigen::MatrixXcd h(16, 12);
            for (int r = 0; r < 16; ++r)
                for (int c = 0; c < 12; ++c) h(r, c) = rng.cnormal();
            const Eigen::VectorXd powers = Eigen::VectorXd::Constant(12, 0.5);
            const PrecodingMatrix w = zf_precoder(h, powers);
            for (int k = 0; k < 12 && pass; ++k) {
                pass = std::abs(w.W.col(k).norm() - std::sqrt(0.5)) <= 1e-10;
                for (int u = 0; u < 12 && pass; ++u) {
                    if (u == k) continue;
                    pass = std::abs(h.col(u).dot(w.W.col(k))) / (h.col(u).norm() * w.W.col(k).norm()) <=
                           1e-10;
                }
            }
        }
        check("zero-forcing contract: power norms and null off-diagonals", pass);
    }
    {
        Rng rng(15);
        bool pass = true;
        for (int trial = 0; trial < 20 && pass; ++trial) {
            Eigen::MatrixXcd m(4, 4), n(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) {
                    m(r, c) = rng.cnormal();
                    n(r, c) = rng.cnormal();
                }
            const Eigen::MatrixXcd A = m * m.adjoint();
            const Eigen::MatrixXcd B =
                n * n.adjoint() + 0.5 * Eigen::MatrixXcd::Identity(4, 4);
            const GeneralizedEig eig = max_generalized_eigvec(A, B);
            const auto quotient = [&](const Eigen::VectorXcd& x) {
                return (x.dot(A * x) / x.dot(B * x)).real();
            };
            for (int i = 0; i < 200 && pass; ++i) {
                Eigen::VectorXcd x(4);
                for (int r = 0; r < 4; ++r) x(r) = rng.cnormal();
                pass = quotient(eig.v) >= quotient(x) - 1e-9;
            }
        }
        check("generalized eigensolve dominates random Rayleigh quotients", pass);
    }
    {
        Rng rng(16);
        bool pass = true;
        for (int trial = 0; trial < 20 && pass; ++trial) {
            Eigen::MatrixXcd h(8, 4);
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 4; ++c) h(r, c) = rng.cnormal();
            AcaStatistics stats;
            stats.per_lu_variance = Eigen::VectorXd::Constant(4, 0.3);
            const double sigma2 = 0.7, p0 = 2.0;
            const PrecodingMatrix w = anti_jamming_precoder(h, stats, sigma2, p0);
            const auto operands = build_sjnr_operands(h, stats, sigma2, p0);
            for (int k = 0; k < 4 && pass; ++k) {
                const double lambda = max_generalized_eigvec(operands[k].A, operands[k].B).lambda;
                const double eta = sjnr_statistical(k, h, w, stats.per_lu_variance, sigma2);
                pass = std::abs(eta - lambda) <= 1e-8 * std::max(1.0, lambda);
            }
        }
        check("statistical SJNR at the precoder equals lambda_max", pass);
    }
    {
        ExperimentSpec spec = default_spec();
        spec.scenario.irs_elements = 64;
        spec.profile.elements = 64;
        spec.drops = 2;
        spec.realizations = 2;
        spec.seed = 5;
        const auto rows_a = run_experiment(spec);
        const auto rows_b = run_experiment(spec);
        check("experiment determinism under a fixed seed",
              rows_to_csv(rows_a) == rows_to_csv(rows_b));
    }

    std::printf("verify: %d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}

} // namespace

int cli(const std::vector<std::string>& args) {
    CLI::App app{"Link-level simulator for randomized-IRS jamming and anti-jamming precoding"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string sweep_arg, benchmarks_arg, out_override, svg_path, dump_path, trace_path;
    std::string report_path;
    bool realized = false;

    const auto add_common = [&opts](CLI::App* cmd) {
        cmd->add_option("--config", opts.config_path, "JSON config path");
        cmd->add_option("--seed", opts.seed, "base RNG seed");
        cmd->add_option("--mode", opts.mode, "persistent or temporal");
        cmd->add_option("--case", opts.dirs_case, "table profile: c1 or c2");
        cmd->add_option("--trials", opts.trials, "LU drops (run) or frames (stats)");
    };

    CLI::App* run = app.add_subcommand("run", "run an ergodic-rate experiment");
    add_common(run);
    run->add_option("--sweep", sweep_arg, "NAME=start:stop:step");
    run->add_option("--benchmarks", benchmarks_arg, "comma list: nojam,zf,ajp,est:S,aj[:dBm]");
    run->add_option("--out", out_override, "CSV output path");
    run->add_option("--svg", svg_path, "line-plot output path");
    run->add_option("--dump-channels", dump_path, "debug channel dump CSV");
    run->add_option("--feedback-trace", trace_path, "feedback trace CSV");
    run->add_flag("--realized", realized, "evaluate realized instead of statistical SJNR");

    CLI::App* stats = app.add_subcommand("stats", "closed-form and empirical aging statistics");
    add_common(stats);
    stats->add_option("--report", report_path, "moment report CSV path");

    app.add_subcommand("verify", "run the library property suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("run"))
            return run_command(opts, sweep_arg, benchmarks_arg, out_override, svg_path, dump_path,
                               trace_path, realized);
        if (app.got_subcommand("stats")) return stats_command(opts, report_path);
        return verify_command();
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

} // namespace jamsim
