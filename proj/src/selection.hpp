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

#ifndef IAPART_SELECTION_HPP
#define IAPART_SELECTION_HPP

#include <vector>

#include "scenario.hpp"

namespace iapart {

// Value of placing user `user` into group `group_index`, estimated without
// any cross-link knowledge:
//   max(0, 1/P - L(size + 1) / T) * S * log2(1 + quality / (N_t N_r)),
// where quality = rho_kk * ||H_kk||_F^2 and L follows the strategy the
// enlarged group would use (uncoordinated for a lone user, aligned
// otherwise).
struct SelectionScore {
    int user = -1;
    int group = -1;
    double score = 0.0;
};
SelectionScore approx_rate(int user, int group_index, int group_size, int group_count,
                           const Scenario& scenario, double quality, int streams);

// Streams per member a group of `size` would carry (even split of the
// group's total, rounded down) — what the selection function assumes before
// the real allocation happens.
int selection_streams(int size, int tx_antennas, int rx_antennas);

// Spectral efficiency probe for choosing the group size: the total streams
// a k-user group sustains, scaled by the share of the frame left after
// overhead when the network is cut into ceil(K/k) slots:
//   (1 / ceil(K/k) - L(k) / T) * d(k).
// Negative budgets are NOT clamped; callers only compare values.
double dof_with_overhead(int group_size, const Scenario& scenario);

// Group size maximizing dof_with_overhead (ties toward larger size) and the
// resulting group count ceil(K / size).
struct GroupCount {
    int users_per_group = 1;
    int groups = 1;
};
GroupCount choose_group_count(const Scenario& scenario);

// Max minus min of the per-group estimated sum rates; 0 for fewer than two
// groups.
double disparity(const std::vector<double>& group_scores);

} // namespace iapart

#endif
