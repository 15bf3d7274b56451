// SPDX-License-Identifier: Apache-2.0
//
// iapart - overhead-aware user partitioning for MIMO interference channels
// Copyright 2026 the iapart authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "experiments.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

#include "channels.hpp"
#include "exhaustive.hpp"
#include "greedy.hpp"
#include "partition.hpp"
#include "rate_engine.hpp"
#include "rng.hpp"
#include "streams.hpp"
#include "training_optimizer.hpp"

namespace iapart {
namespace {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

struct Row {
    std::string experiment;
    std::string scenario_id;
    std::uint64_t seed = 0;
    int trials = 0;
    double alpha_bar = 0.0;
    std::string strategy;
    int group_count = 0;
    std::string partition;
    double tau = 0.0;
    double mean_rate = 0.0;
    double stderr_of_mean = 0.0;
};

std::string render_csv(const std::vector<Row>& rows) {
    std::string out =
        "experiment,scenario_id,seed,trials,alpha_bar,strategy,P,partition,tau,"
        "mean_rate,stderr\n";
    for (const Row& row : rows) {
        out += csv_field(row.experiment);
        out += ',';
        out += csv_field(row.scenario_id);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += std::to_string(row.trials);
        out += ',';
        out += format_double(row.alpha_bar);
        out += ',';
        out += csv_field(row.strategy);
        out += ',';
        out += std::to_string(row.group_count);
        out += ',';
        out += csv_field(row.partition);
        out += ',';
        out += format_double(row.tau);
        out += ',';
        out += format_double(row.mean_rate);
        out += ',';
        out += format_double(row.stderr_of_mean);
        out += '\n';
    }
    return out;
}

// Running mean/spread plus a tally of which partition each trial picked.
struct Accum {
    double sum = 0.0;
    double sum_sq = 0.0;
    int n = 0;
    std::map<std::string, int> partitions;

    void add(double value, const std::string& partition) {
        sum += value;
        sum_sq += value * value;
        ++n;
        ++partitions[partition];
    }
    double mean() const { return n > 0 ? sum / n : 0.0; }
    double stderr_of_mean() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
        return std::sqrt(var / n);
    }
    // Most frequent partition; ties go to the lexicographically first.
    std::string modal_partition() const {
        std::string best;
        int count = -1;
        for (const auto& [text, c] : partitions) {
            if (c > count) {
                count = c;
                best = text;
            }
        }
        return best;
    }
};

int groups_in(const std::string& partition_text) {
    if (partition_text.empty()) return 0;
    return 1 + static_cast<int>(std::count(partition_text.begin(), partition_text.end(), '|'));
}

std::uint64_t parse_env_u64(const char* name, const char* text) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (end == text || *end != '\0' || errno != 0) {
        throw std::invalid_argument(std::string(name) + ": expected an unsigned integer, got '" +
                                    text + "'");
    }
    return static_cast<std::uint64_t>(value);
}

struct Resolved {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<double> grid;
};

Resolved resolve_options(ExperimentKind kind, const Scenario& scenario,
                         const RunOptions& options) {
    Resolved r;
    if (options.seed_set) {
        r.seed = options.seed;
    } else if (const char* env = std::getenv("IAPART_SEED")) {
        r.seed = parse_env_u64("IAPART_SEED", env);
    } else {
        r.seed = scenario.seed;
    }

    if (options.trials_set) {
        r.trials = options.trials;
    } else if (const char* env = std::getenv("IAPART_TRIALS")) {
        const std::uint64_t t = parse_env_u64("IAPART_TRIALS", env);
        if (t == 0 || t > 1000000) {
            throw std::invalid_argument("IAPART_TRIALS: must be in [1, 1000000]");
        }
        r.trials = static_cast<int>(t);
    } else {
        r.trials = 500;
    }
    if (r.trials < 1) throw std::invalid_argument("trials must be >= 1");

    SweepGrid grid = options.grid_set
                         ? options.grid
                         : (kind == ExperimentKind::train_opt ? SweepGrid{2.0, 78.0, 2.0}
                                                              : SweepGrid{0.05, 0.95, 0.1});
    r.grid = grid_points(grid);
    if (kind == ExperimentKind::train_opt) {
        for (double tau : r.grid) {
            if (tau < 0.0) throw std::invalid_argument("training grid values must be >= 0");
        }
    } else {
        for (double a : r.grid) {
            if (a <= 0.0 || a > 1.0) {
                throw std::invalid_argument(
                    "data-fraction grid values must lie in (0, 1]; 1 means no overhead");
            }
        }
    }
    return r;
}

// Frame length at which a whole-network aligned transmission keeps exactly
// the given data fraction; 1 maps to an unbounded frame.
double frame_for(const Scenario& scenario, double alpha_bar) {
    if (alpha_bar >= 1.0) return std::numeric_limits<double>::infinity();
    return scenario.overhead_ia.symbols(scenario.users) / (1.0 - alpha_bar);
}

// One sweep strategy: a label plus how it picks a partition for the current
// realization at the current evaluation scenario.
struct Strategy {
    std::string label;
    std::function<Partition(GroupRateCache& cache, const Scenario& eval,
                            const arma::vec& qualities)>
        build;
};

// Shared engine for the data-fraction sweeps: per trial, one channel
// realization and one design cache serve every grid point and strategy
// (cached raw rates are frame-length independent).
std::vector<std::vector<Accum>> sweep_accumulate(const Scenario& scenario,
                                                 const Resolved& resolved,
                                                 const std::vector<Strategy>& strategies) {
    std::vector<std::vector<Accum>> acc(resolved.grid.size(),
                                        std::vector<Accum>(strategies.size()));
    const bool drops =
        scenario.placement.present() && scenario.placement.drop_radius > 0.0;
    for (int trial = 0; trial < resolved.trials; ++trial) {
        const std::uint64_t trial_seed =
            mix_seed(resolved.seed, kSeedTrial, static_cast<std::uint64_t>(trial), 0);
        const Scenario scen_t =
            drops ? with_dropped_receivers(scenario, trial_seed) : scenario;
        const ChannelRealization realization = generate_channels(scen_t, trial_seed);
        GroupRateCache cache(realization, IaOptions{}, trial_seed);
        const arma::vec qualities =
            scen_t.quality_source == QualitySource::previous_frame
                ? channel_qualities(generate_channels(
                      scen_t,
                      mix_seed(resolved.seed, kSeedTrial, static_cast<std::uint64_t>(trial), 1)))
                : channel_qualities(realization);
        for (std::size_t ai = 0; ai < resolved.grid.size(); ++ai) {
            const Scenario eval = with_frame_len(scen_t, frame_for(scen_t, resolved.grid[ai]));
            for (std::size_t si = 0; si < strategies.size(); ++si) {
                const Partition part = strategies[si].build(cache, eval, qualities);
                acc[ai][si].add(cached_partition_rate(cache, part, eval), part.to_string());
            }
        }
    }
    return acc;
}

std::vector<Row> rows_from_accum(ExperimentKind kind, const Scenario& scenario,
                                 const Resolved& resolved,
                                 const std::vector<Strategy>& strategies,
                                 const std::vector<std::vector<Accum>>& acc) {
    std::vector<Row> rows;
    for (std::size_t ai = 0; ai < resolved.grid.size(); ++ai) {
        for (std::size_t si = 0; si < strategies.size(); ++si) {
            Row row;
            row.experiment = experiment_name(kind);
            row.scenario_id = scenario.id;
            row.seed = resolved.seed;
            row.trials = resolved.trials;
            row.alpha_bar = resolved.grid[ai];
            row.strategy = strategies[si].label;
            row.partition = acc[ai][si].modal_partition();
            row.group_count = groups_in(row.partition);
            row.mean_rate = acc[ai][si].mean();
            row.stderr_of_mean = acc[ai][si].stderr_of_mean();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

Strategy fixed_strategy(std::string label, Partition part) {
    return Strategy{std::move(label),
                    [part = std::move(part)](GroupRateCache&, const Scenario&,
                                             const arma::vec&) { return part; }};
}

Strategy greedy_strategy() {
    return Strategy{"greedy", [](GroupRateCache&, const Scenario& eval,
                                 const arma::vec& qualities) {
                        return greedy_balanced(eval, qualities);
                    }};
}

Strategy exhaustive_strategy() {
    return Strategy{"exhaustive", [](GroupRateCache& cache, const Scenario& eval,
                                     const arma::vec&) {
                        return exhaustive_best(cache, eval).partition;
                    }};
}

std::vector<Row> run_sweep_alpha(const Scenario& scenario, const Resolved& resolved) {
    std::vector<Strategy> strategies;
    strategies.push_back(fixed_strategy("ia", Partition::whole_network(scenario.users)));
    strategies.push_back(fixed_strategy("tdma", Partition::singletons(scenario.users)));
    strategies.push_back(greedy_strategy());
    if (scenario.users <= 8) strategies.push_back(exhaustive_strategy());
    const auto acc = sweep_accumulate(scenario, resolved, strategies);
    return rows_from_accum(ExperimentKind::sweep_alpha, scenario, resolved, strategies, acc);
}

std::vector<Row> run_sweep_groups(const Scenario& scenario, const Resolved& resolved) {
    std::vector<Strategy> strategies;
    for (int p = 1; p <= scenario.users; ++p) {
        strategies.push_back(Strategy{
            "greedy", [p](GroupRateCache&, const Scenario& eval, const arma::vec& qualities) {
                GreedyOptions options;
                options.forced_groups = p;
                return greedy_balanced(eval, qualities, options);
            }});
    }
    const auto acc = sweep_accumulate(scenario, resolved, strategies);
    return rows_from_accum(ExperimentKind::sweep_groups, scenario, resolved, strategies, acc);
}

std::vector<Row> run_greedy_compare(const Scenario& scenario, const Resolved& resolved) {
    std::vector<Strategy> strategies;
    strategies.push_back(greedy_strategy());
    strategies.push_back(Strategy{"rate_fair", [](GroupRateCache&, const Scenario& eval,
                                                  const arma::vec& qualities) {
                                      return greedy_rate_fair(eval, qualities);
                                  }});
    if (scenario.placement.present()) {
        strategies.push_back(
            Strategy{"geo_separate", [](GroupRateCache&, const Scenario& eval,
                                        const arma::vec&) {
                         return greedy_geographic(eval, GeoVariant::separate);
                     }});
        strategies.push_back(
            Strategy{"geo_cluster", [](GroupRateCache&, const Scenario& eval,
                                       const arma::vec&) {
                         return greedy_geographic(eval, GeoVariant::cluster);
                     }});
    }
    const auto acc = sweep_accumulate(scenario, resolved, strategies);
    return rows_from_accum(ExperimentKind::greedy_compare, scenario, resolved, strategies, acc);
}

std::vector<Row> run_geo(const Scenario& scenario, const Resolved& resolved) {
    if (!scenario.placement.present()) {
        throw std::invalid_argument(
            "geo experiment requires transmitter/receiver positions in the scenario");
    }
    std::vector<Strategy> strategies;
    strategies.push_back(Strategy{"geo_separate", [](GroupRateCache&, const Scenario& eval,
                                                     const arma::vec&) {
                                      return greedy_geographic(eval, GeoVariant::separate);
                                  }});
    strategies.push_back(greedy_strategy());
    strategies.push_back(fixed_strategy("ia", Partition::whole_network(scenario.users)));
    strategies.push_back(fixed_strategy("tdma", Partition::singletons(scenario.users)));
    const auto acc = sweep_accumulate(scenario, resolved, strategies);
    return rows_from_accum(ExperimentKind::geo, scenario, resolved, strategies, acc);
}

std::vector<Row> run_oracle(const Scenario& scenario, const Resolved& resolved) {
    if (scenario.users > 8) {
        throw std::invalid_argument("oracle experiment enumerates partitions exhaustively; "
                                    "limited to 8 users");
    }
    std::vector<Strategy> strategies;
    strategies.push_back(exhaustive_strategy());
    strategies.push_back(greedy_strategy());
    const auto acc = sweep_accumulate(scenario, resolved, strategies);
    std::vector<Row> rows =
        rows_from_accum(ExperimentKind::oracle, scenario, resolved, strategies, acc);

    // Interleave a greedy/exhaustive mean-rate ratio row after each grid
    // point's pair, so plots of optimality gap read straight off the file.
    std::vector<Row> with_ratio;
    for (std::size_t ai = 0; ai < resolved.grid.size(); ++ai) {
        const Row& exhaustive_row = rows[2 * ai];
        const Row& greedy_row = rows[2 * ai + 1];
        with_ratio.push_back(exhaustive_row);
        with_ratio.push_back(greedy_row);
        Row ratio;
        ratio.experiment = exhaustive_row.experiment;
        ratio.scenario_id = exhaustive_row.scenario_id;
        ratio.seed = resolved.seed;
        ratio.trials = resolved.trials;
        ratio.alpha_bar = resolved.grid[ai];
        ratio.strategy = "ratio";
        ratio.mean_rate = exhaustive_row.mean_rate > 0.0
                              ? greedy_row.mean_rate / exhaustive_row.mean_rate
                              : 0.0;
        with_ratio.push_back(std::move(ratio));
    }
    return with_ratio;
}

std::string group_text(const std::vector<int>& group) {
    std::string out;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(group[i] + 1);
    }
    return out;
}

std::vector<Row> run_train_opt(const Scenario& scenario, const Resolved& resolved) {
    if (!std::isfinite(scenario.frame_len)) {
        throw std::invalid_argument(
            "train-opt requires a finite frame length (training competes for it)");
    }
    const Partition part = Partition::whole_network(scenario.users);
    const StreamAllocation alloc = allocate_streams(scenario.users, scenario.tx_antennas,
                                                    scenario.rx_antennas, resolved.seed);
    std::vector<std::vector<int>> group_streams;
    for (const auto& group : part.groups) {
        std::vector<int> streams;
        for (int user : group) streams.push_back(alloc.counts[static_cast<std::size_t>(user)]);
        group_streams.push_back(std::move(streams));
    }
    if (resolved.grid.empty()) throw std::invalid_argument("train-opt: empty grid");
    const double tau_min = resolved.grid.front();
    const double tau_max = resolved.grid.back();
    const double tau_step =
        resolved.grid.size() > 1 ? resolved.grid[1] - resolved.grid[0] : 1.0;
    const TrainingOptResult result =
        optimize_training(scenario, part, group_streams, tau_min, tau_max, tau_step,
                          resolved.trials, resolved.seed);

    std::vector<Row> rows;
    for (std::size_t p = 0; p < result.per_group.size(); ++p) {
        const TrainingSweep& sweep = result.per_group[p];
        const double residual =
            scenario.overhead_residual.symbols(static_cast<int>(part.groups[p].size()));
        Row base;
        base.experiment = experiment_name(ExperimentKind::train_opt);
        base.scenario_id = scenario.id;
        base.seed = resolved.seed;
        base.trials = resolved.trials;
        base.group_count = part.group_count();
        base.partition = group_text(part.groups[p]);
        for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
            Row row = base;
            row.strategy = "train_bound";
            row.tau = sweep.grid[i];
            row.alpha_bar = std::max(
                0.0, part.time_shares[p] - (sweep.grid[i] + residual) / scenario.frame_len);
            row.mean_rate = sweep.means[i];
            row.stderr_of_mean = sweep.stderrs[i];
            rows.push_back(std::move(row));
        }
        Row best = base;
        best.strategy = "train_bound_best";
        best.tau = sweep.best_tau;
        best.alpha_bar = std::max(
            0.0, part.time_shares[p] - (sweep.best_tau + residual) / scenario.frame_len);
        best.mean_rate = sweep.best_value;
        for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
            if (sweep.grid[i] == sweep.best_tau) {
                best.stderr_of_mean = sweep.stderrs[i];
                break;
            }
        }
        rows.push_back(std::move(best));
    }
    return rows;
}

} // namespace

ExperimentKind parse_experiment_kind(const std::string& name) {
    if (name == "sweep-alpha") return ExperimentKind::sweep_alpha;
    if (name == "sweep-groups") return ExperimentKind::sweep_groups;
    if (name == "greedy-compare") return ExperimentKind::greedy_compare;
    if (name == "geo") return ExperimentKind::geo;
    if (name == "train-opt") return ExperimentKind::train_opt;
    if (name == "oracle") return ExperimentKind::oracle;
    throw std::invalid_argument("unknown experiment kind: " + name);
}

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::sweep_alpha: return "sweep-alpha";
    case ExperimentKind::sweep_groups: return "sweep-groups";
    case ExperimentKind::greedy_compare: return "greedy-compare";
    case ExperimentKind::geo: return "geo";
    case ExperimentKind::train_opt: return "train-opt";
    case ExperimentKind::oracle: return "oracle";
    }
    throw std::invalid_argument("unknown experiment kind");
}

SweepGrid parse_grid(const std::string& text) {
    SweepGrid grid;
    char trailing = '\0';
    const int got = std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &grid.start, &grid.stop,
                                &grid.step, &trailing);
    if (got != 3) {
        throw std::invalid_argument("grid must be start:stop:step, got '" + text + "'");
    }
    return grid;
}

std::vector<double> grid_points(const SweepGrid& grid) {
    if (!(grid.step > 0.0) || grid.stop < grid.start) {
        throw std::invalid_argument("grid needs start <= stop and step > 0");
    }
    std::vector<double> points;
    // Half-step slack so the stop value survives accumulated rounding.
    for (double v = grid.start; v <= grid.stop + 0.5 * grid.step; v += grid.step) {
        points.push_back(v);
    }
    return points;
}

ExperimentResult run_experiment(ExperimentKind kind, const Scenario& scenario,
                                const RunOptions& options) {
    scenario.validate();
    const Resolved resolved = resolve_options(kind, scenario, options);

    std::vector<Row> rows;
    switch (kind) {
    case ExperimentKind::sweep_alpha: rows = run_sweep_alpha(scenario, resolved); break;
    case ExperimentKind::sweep_groups: rows = run_sweep_groups(scenario, resolved); break;
    case ExperimentKind::greedy_compare:
        rows = run_greedy_compare(scenario, resolved);
        break;
    case ExperimentKind::geo: rows = run_geo(scenario, resolved); break;
    case ExperimentKind::train_opt: rows = run_train_opt(scenario, resolved); break;
    case ExperimentKind::oracle: rows = run_oracle(scenario, resolved); break;
    }

    ExperimentResult result;
    result.csv = render_csv(rows);
    result.rows = static_cast<int>(rows.size());
    if (!options.out_path.empty()) {
        std::ofstream file(options.out_path, std::ios::binary);
        if (!file) {
            throw std::ios_base::failure("cannot open output file: " + options.out_path);
        }
        file.exceptions(std::ios::failbit | std::ios::badbit);
        file << result.csv;
        file.flush();
    }
    return result;
}

} // namespace iapart
