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

#include "selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "streams.hpp"

namespace iapart {

int selection_streams(int size, int tx_antennas, int rx_antennas) {
    return std::max(1, dof(size, tx_antennas, rx_antennas) / size);
}

SelectionScore approx_rate(int user, int group_index, int group_size, int group_count,
                           const Scenario& scenario, double quality, int streams) {
    if (quality < 0.0) throw std::invalid_argument("approx_rate: quality must be nonnegative");
    if (streams < 1) throw std::invalid_argument("approx_rate: streams must be >= 1");
    if (group_count < 1 || group_size < 0) {
        throw std::invalid_argument("approx_rate: malformed group description");
    }
    const int enlarged = group_size + 1;
    const OverheadModel& model =
        enlarged == 1 ? scenario.overhead_tdma : scenario.overhead_ia;
    const double prefactor = 1.0 / static_cast<double>(group_count) -
                             model.symbols(enlarged) / scenario.frame_len;
    const double spectral =
        std::log2(1.0 + quality / (static_cast<double>(scenario.tx_antennas) *
                                   static_cast<double>(scenario.rx_antennas)));
    SelectionScore s;
    s.user = user;
    s.group = group_index;
    s.score = std::max(0.0, prefactor) * static_cast<double>(streams) * spectral;
    return s;
}

double dof_with_overhead(int group_size, const Scenario& scenario) {
    if (group_size < 1 || group_size > scenario.users) {
        throw std::invalid_argument("dof_with_overhead: group size out of range");
    }
    const int slots = (scenario.users + group_size - 1) / group_size; // ceil(K / k)
    const OverheadModel& model =
        group_size == 1 ? scenario.overhead_tdma : scenario.overhead_ia;
    const double prefactor = 1.0 / static_cast<double>(slots) -
                             model.symbols(group_size) / scenario.frame_len;
    return prefactor *
           dof_continuous(group_size, scenario.tx_antennas, scenario.rx_antennas);
}

GroupCount choose_group_count(const Scenario& scenario) {
    GroupCount result;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= scenario.users; ++k) {
        const double value = dof_with_overhead(k, scenario);
        if (value >= best) { // ties toward larger k: fewer, bigger groups
            best = value;
            result.users_per_group = k;
        }
    }
    result.groups = (scenario.users + result.users_per_group - 1) / result.users_per_group;
    return result;
}

double disparity(const std::vector<double>& group_scores) {
    if (group_scores.size() < 2) return 0.0;
    const auto [lo, hi] = std::minmax_element(group_scores.begin(), group_scores.end());
    return *hi - *lo;
}

} // namespace iapart
