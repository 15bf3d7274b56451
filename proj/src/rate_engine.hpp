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

#ifndef IAPART_RATE_ENGINE_HPP
#define IAPART_RATE_ENGINE_HPP

#include <vector>

#include "channels.hpp"
#include "partition.hpp"
#include "precoders.hpp"

namespace iapart {

// Rates for one group in one frame. `rate` and `user_rates` already include
// the group's data fraction; `raw_rate` is the same sum at data fraction 1,
// which lets callers rescale cached results to any overhead level.
struct GroupRate {
    std::vector<int> group;
    std::vector<double> user_rates; // bits/transmission, net of overhead
    double rate = 0.0;              // sum over the group, net of overhead
    double raw_rate = 0.0;          // sum at data fraction 1
    double alpha_bar = 1.0;         // data fraction applied
    double leakage = 0.0;           // diagnostic from the precoder design
};

// Frame-level rate summary across all groups of a partition.
struct RateReport {
    std::vector<GroupRate> groups;
    double total = 0.0;                       // sum of group net rates
    std::vector<double> effective_snrs;       // diagnostics (training bound only)
    std::vector<std::string> warnings;
};

// Per-user log-det rate of one group under maximum-likelihood reception:
// interference from the other members enters the noise-plus-interference
// covariance, transmit power is split evenly across each member's streams,
// and everything is scaled by the data fraction alpha_bar.
GroupRate sum_rate_perfect(const ChannelRealization& realization, const PrecoderSet& set,
                           double alpha_bar);

// Data fraction left for a group occupying a mu * T slot: mu - L(size) / T,
// with L chosen by the group's tag. Clamped at 0 when negative unless the
// caller asks for the raw value.
double group_alpha_bar(const Scenario& scenario, int group_size, GroupTag tag,
                       double time_share);

// Sums per-group rates with each group's own data fraction. Precoders must
// align with the partition's groups.
RateReport partitioned_sum_rate(const ChannelRealization& realization,
                                const Partition& partition,
                                const std::vector<PrecoderSet>& per_group);

} // namespace iapart

#endif
