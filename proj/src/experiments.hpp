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

#ifndef IAPART_EXPERIMENTS_HPP
#define IAPART_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace iapart {

// The batch experiments the harness can run. Sweeps vary the frame length
// so the x-axis is the data fraction a full-network aligned transmission
// would keep; a grid value of 1 means an unbounded frame (no overhead).
enum class ExperimentKind {
    sweep_alpha,    // ia / tdma / greedy / exhaustive (K <= 8) vs data fraction
    sweep_groups,   // greedy at every forced group count vs data fraction
    greedy_compare, // greedy variants (and geographic ones when positioned)
    geo,            // geographic grouping vs greedy / ia / tdma (needs positions)
    train_opt,      // training-length sweep of the estimated-CSI bound
    oracle          // exhaustive vs greedy with their rate ratio
};

// Maps "sweep-alpha", "sweep-groups", "greedy-compare", "geo", "train-opt",
// "oracle" to the kind (and back). Unknown names are invalid_argument.
ExperimentKind parse_experiment_kind(const std::string& name);
std::string experiment_name(ExperimentKind kind);

// Arithmetic sweep grid, parsed from "start:stop:step".
struct SweepGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};
SweepGrid parse_grid(const std::string& text);
std::vector<double> grid_points(const SweepGrid& grid);

// Run-time knobs. Unset fields fall back to the IAPART_SEED / IAPART_TRIALS
// environment variables, then to the scenario seed / 500 trials / the
// kind's default grid (data fractions 0.05:0.95:0.1, training 2:78:2).
struct RunOptions {
    bool seed_set = false;
    std::uint64_t seed = 0;
    bool trials_set = false;
    int trials = 0;
    bool grid_set = false;
    SweepGrid grid;
    std::string out_path; // empty = do not write a file
};

struct ExperimentResult {
    std::string csv; // header + rows, LF line ends
    int rows = 0;
};

// Runs one experiment over `trials` seeded channel realizations and returns
// (and optionally writes) a CSV table with the fixed column set
// experiment,scenario_id,seed,trials,alpha_bar,strategy,P,partition,tau,
// mean_rate,stderr. Output is deterministic: the same scenario, options,
// and environment reproduce the bytes exactly.
ExperimentResult run_experiment(ExperimentKind kind, const Scenario& scenario,
                                const RunOptions& options);

} // namespace iapart

#endif
