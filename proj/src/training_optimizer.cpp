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

#include "training_optimizer.hpp"

#include <stdexcept>

#include "training_bound.hpp"

namespace iapart {

TrainingOptResult optimize_training(const Scenario& scenario, const Partition& partition,
                                    const std::vector<std::vector<int>>& group_streams,
                                    double tau_min, double tau_max, double tau_step,
                                    int trials, std::uint64_t seed) {
    scenario.validate();
    partition.validate(scenario.users);
    if (group_streams.size() != partition.groups.size()) {
        throw std::invalid_argument(
            "optimize_training: per-group stream lists must match the partition");
    }
    if (!(tau_min >= 0.0) || !(tau_step > 0.0) || tau_max < tau_min) {
        throw std::invalid_argument("optimize_training: need 0 <= tau_min <= tau_max and "
                                    "tau_step > 0");
    }
    if (trials < 1) throw std::invalid_argument("optimize_training: trials must be >= 1");

    std::vector<double> grid;
    // Half-step slack so tau_max itself survives accumulated rounding.
    for (double tau = tau_min; tau <= tau_max + 0.5 * tau_step; tau += tau_step) {
        grid.push_back(tau);
    }

    TrainingOptResult out;
    out.trials = trials;
    out.seed = seed;
    for (std::size_t p = 0; p < partition.groups.size(); ++p) {
        const double residual =
            scenario.overhead_residual.symbols(static_cast<int>(partition.groups[p].size()));
        bool any_feasible = false;
        TrainingSweep sweep;
        sweep.grid = grid;
        sweep.best_value = -1.0;
        for (double tau : grid) {
            if (partition.time_shares[p] - (tau + residual) / scenario.frame_len > 0.0) {
                any_feasible = true;
            }
            GroupTrainingBound gb =
                group_training_bound(scenario, partition.groups[p], group_streams[p],
                                     partition.time_shares[p], tau, trials, seed);
            sweep.means.push_back(gb.rate.rate);
            sweep.stderrs.push_back(gb.stderr_of_rate);
            if (gb.rate.rate > sweep.best_value) {
                sweep.best_value = gb.rate.rate;
                sweep.best_tau = tau;
            }
        }
        if (!any_feasible) {
            throw std::domain_error(
                "optimize_training: every grid point's training plus residual overhead "
                "exceeds the group's time slot");
        }
        out.total_best += sweep.best_value;
        out.per_group.push_back(std::move(sweep));
    }
    return out;
}

} // namespace iapart
