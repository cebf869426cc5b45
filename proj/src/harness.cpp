// SPDX-License-Identifier: Apache-2.0
#include "jamsim/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "jamsim/estimate.hpp"
#include "jamsim/metrics.hpp"
#include "jamsim/stats.hpp"

namespace jamsim {

void parallel_for_indexed(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&fn, t, threads, count] {
            for (int i = t; i < count; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

struct GridPoint {
    ScenarioConfig scenario;
    DirsProfile profile;
    std::vector<BenchmarkSpec> benchmarks;
};

GridPoint apply_sweep(const ExperimentSpec& spec, double value) {
    GridPoint point{spec.scenario, spec.profile, spec.benchmarks};
    switch (spec.sweep.variable) {
        case SweepVariable::TxPowerPerLu:
            point.scenario.total_power_w = point.scenario.users * dbm_to_w(value);
            break;
        case SweepVariable::FeedbackCount:
            for (auto& b : point.benchmarks)
                if (b.kind == BenchmarkKind::AjpEstimated)
                    b.feedback_count = static_cast<int>(std::lround(value));
            break;
        case SweepVariable::ElementCount:
            point.scenario.irs_elements = static_cast<int>(std::lround(value));
            point.profile.elements = point.scenario.irs_elements;
            break;
        case SweepVariable::UserCount: {
            const double per_lu = point.scenario.total_power_w / point.scenario.users;
            point.scenario.users = static_cast<int>(std::lround(value));
            point.scenario.total_power_w = per_lu * point.scenario.users;
            break;
        }
        case SweepVariable::ApIrsDistance:
            point.scenario.ap_irs_distance = value;
            break;
    }
    point.scenario.validate();
    point.profile.validate();
    return point;
}

// All requested benchmarks evaluated on one channel realization. The RNG
// consumption order (channels, frame, jammer fades) is fixed so results pair
// across benchmark subsets and sweep points.
std::vector<double> evaluate_realization(const GridPoint& point, const Placement& placement,
                                         const ChannelSampler& sampler,
                                         const AcaStatistics& closed_stats, Rng& rng,
                                         bool realized_sjnr,
                                         const Eigen::Vector3d& jammer_position) {
    const auto& scenario = point.scenario;
    const int k_users = scenario.users;
    const double p0 = scenario.total_power_w;
    const double sigma2 = scenario.noise_w;
    const Eigen::VectorXd powers = Eigen::VectorXd::Constant(k_users, p0 / k_users);
    const Eigen::VectorXd zero_var = Eigen::VectorXd::Zero(k_users);

    const ChannelSet channels = sampler.sample(rng);
    const CoherenceFrame frame = sample_frame(point.profile, scenario.frame_ratio, rng);

    const Eigen::MatrixXcd h_rpt = combined_channel(channels, frame.rpt);
    const Eigen::MatrixXcd h_direct = combined_channel(channels, silent_state(scenario.irs_elements));

    std::vector<Eigen::MatrixXcd> dt_channels;
    dt_channels.reserve(frame.dt.size());
    for (const auto& state : frame.dt) dt_channels.push_back(combined_channel(channels, state));

    const Eigen::VectorXd aj_penalty_unit = active_jammer_penalty(
        jammer_position, 1.0, placement, rng);

    FeedbackLog log(k_users, scenario.frame_ratio);
    for (const auto& h_dt : dt_channels)
        for (int k = 0; k < k_users; ++k) log.append(k, feedback_power(h_dt.col(k), p0, k_users));

    std::vector<double> rates;
    rates.reserve(point.benchmarks.size());
    for (const auto& bench : point.benchmarks) {
        switch (bench.kind) {
            case BenchmarkKind::NoJammingZf: {
                const PrecodingMatrix w = zf_precoder(h_direct, powers);
                rates.push_back(rate_per_lu(sjnr_statistical_all(h_direct, w, zero_var, sigma2)));
                break;
            }
            case BenchmarkKind::JammedZf: {
                const PrecodingMatrix w = zf_precoder(h_rpt, powers);
                rates.push_back(realized_sjnr
                                    ? rate_per_lu(sjnr_realized_all(dt_channels, w, sigma2))
                                    : rate_per_lu(sjnr_statistical_all(
                                          h_rpt, w, closed_stats.per_lu_variance, sigma2)));
                break;
            }
            case BenchmarkKind::AjpClosedForm: {
                const PrecodingMatrix w = anti_jamming_precoder(h_rpt, closed_stats, sigma2, p0);
                rates.push_back(realized_sjnr
                                    ? rate_per_lu(sjnr_realized_all(dt_channels, w, sigma2))
                                    : rate_per_lu(sjnr_statistical_all(
                                          h_rpt, w, closed_stats.per_lu_variance, sigma2)));
                break;
            }
            case BenchmarkKind::AjpEstimated: {
                const Eigen::VectorXd estimates =
                    estimate_characteristic_all(log, h_rpt, p0, bench.feedback_count);
                const PrecodingMatrix w = refresh_precoder(estimates, h_rpt, sigma2, p0);
                rates.push_back(realized_sjnr
                                    ? rate_per_lu(sjnr_realized_all(dt_channels, w, sigma2))
                                    : rate_per_lu(sjnr_statistical_all(
                                          h_rpt, w, closed_stats.per_lu_variance, sigma2)));
                break;
            }
            case BenchmarkKind::ActiveJammer: {
                const PrecodingMatrix w = zf_precoder(h_direct, powers);
                const Eigen::VectorXd penalty =
                    dbm_to_w(bench.jammer_power_dbm) * aj_penalty_unit;
                rates.push_back(
                    rate_per_lu(sjnr_statistical_all(h_direct, w, zero_var, sigma2, penalty)));
                break;
            }
        }
    }
    return rates;
}

} // namespace

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, int threads) {
    spec.validate();
    std::vector<ResultRow> rows;

    for (const double value : spec.sweep.values) {
        const GridPoint point = apply_sweep(spec, value);
        const int n_bench = static_cast<int>(point.benchmarks.size());
        const long trials = static_cast<long>(spec.drops) * spec.realizations;

        // rates[drop] holds realizations-per-benchmark blocks in a fixed order
        std::vector<std::vector<double>> rates(spec.drops);

        parallel_for_indexed(spec.drops, threads, [&](int drop) {
            Rng rng(spec.seed + static_cast<std::uint64_t>(drop));
            const Placement placement = build_scenario(point.scenario, rng);
            const LargeScale large_scale = compute_large_scale(point.scenario, placement);
            const ChannelSampler sampler(point.scenario, placement, large_scale);
            const AcaStatistics closed = aca_variances(point.scenario, point.profile, large_scale);

            auto& out = rates[drop];
            out.reserve(static_cast<std::size_t>(spec.realizations) * n_bench);
            for (int real = 0; real < spec.realizations; ++real) {
                const auto r = evaluate_realization(point, placement, sampler, closed, rng,
                                                    spec.realized_sjnr, spec.jammer_position);
                out.insert(out.end(), r.begin(), r.end());
            }
        });

        for (int b = 0; b < n_bench; ++b) {
            double sum = 0.0, sum_sq = 0.0;
            for (int drop = 0; drop < spec.drops; ++drop)
                for (int real = 0; real < spec.realizations; ++real) {
                    const double r = rates[drop][static_cast<std::size_t>(real) * n_bench + b];
                    sum += r;
                    sum_sq += r * r;
                }
            const double mean = sum / static_cast<double>(trials);
            const double var = std::max(0.0, sum_sq / static_cast<double>(trials) - mean * mean);

            ResultRow row;
            row.sweep_value = value;
            row.benchmark = point.benchmarks[b].tag();
            row.mode = mode_name(point.profile.mode);
            row.dirs_case = case_label(point.profile);
            row.rate_per_lu = mean;
            row.stderr_rate = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1)) : 0.0;
            row.trials = trials;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::string csv = "sweep,benchmark,mode,case,rate_per_lu,stderr,trials\n";
    char line[256];
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%.12g,%s,%s,%s,%.12g,%.12g,%ld\n", row.sweep_value,
                      row.benchmark.c_str(), row.mode.c_str(), row.dirs_case.c_str(),
                      row.rate_per_lu, row.stderr_rate, row.trials);
        csv += line;
    }
    return csv;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << rows_to_csv(rows);
}

void write_svg(const std::vector<ResultRow>& rows, const std::string& path) {
    if (rows.empty()) throw std::invalid_argument("write_svg: no rows");
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double x_min = 1e300, x_max = -1e300, y_min = 0.0, y_max = -1e300;
    for (const auto& row : rows) {
        series[row.benchmark].emplace_back(row.sweep_value, row.rate_per_lu);
        x_min = std::min(x_min, row.sweep_value);
        x_max = std::max(x_max, row.sweep_value);
        y_max = std::max(y_max, row.rate_per_lu);
    }
    if (x_max <= x_min) x_max = x_min + 1.0;
    if (y_max <= y_min) y_max = y_min + 1.0;

    const double w = 640.0, h = 420.0, ml = 60.0, mr = 20.0, mt = 20.0, mb = 40.0;
    const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (w - ml - mr); };
    const auto py = [&](double y) { return h - mb - (y - y_min) / (y_max - y_min) * (h - mt - mb); };
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
        << "' stroke='black'/>\n";
    out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb
        << "' stroke='black'/>\n";
    int idx = 0;
    double legend_y = mt + 10.0;
    for (auto& [name, pts] : series) {
        const char* color = colors[idx % 6];
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (const auto& [x, y] : pts) out << px(x) << "," << py(y) << " ";
        out << "'/>\n";
        out << "<text x='" << ml + 8.0 << "' y='" << legend_y << "' fill='" << color
            << "' font-size='12'>" << name << "</text>\n";
        legend_y += 14.0;
        ++idx;
    }
    char label[64];
    std::snprintf(label, sizeof(label), "%.4g", y_max);
    out << "<text x='4' y='" << py(y_max) + 4.0 << "' font-size='11'>" << label << "</text>\n";
    std::snprintf(label, sizeof(label), "%.4g", x_min);
    out << "<text x='" << px(x_min) << "' y='" << h - mb + 16.0 << "' font-size='11'>" << label
        << "</text>\n";
    std::snprintf(label, sizeof(label), "%.4g", x_max);
    out << "<text x='" << px(x_max) - 20.0 << "' y='" << h - mb + 16.0 << "' font-size='11'>"
        << label << "</text>\n";
    out << "</svg>\n";
}

} // namespace jamsim
