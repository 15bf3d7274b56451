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

#ifndef IAPART_EXHAUSTIVE_HPP
#define IAPART_EXHAUSTIVE_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "channels.hpp"
#include "enumeration.hpp"
#include "precoders.hpp"
#include "rate_engine.hpp"

namespace iapart {

// Memoizes, per channel realization, the designed precoders and the
// full-data-fraction rate of every (member set, tag) group encountered.
// Rates at any overhead level are the cached raw rate times the group's
// data fraction, so one realization's designs serve every partition,
// strategy, and sweep point that shares it.
class GroupRateCache {
  public:
    GroupRateCache(const ChannelRealization& realization, const IaOptions& options,
                   std::uint64_t design_seed);

    struct Entry {
        PrecoderSet precoders;
        GroupRate at_full_budget; // evaluated with data fraction 1
    };

    const Entry& get(const std::vector<int>& members, GroupTag tag);

    const ChannelRealization& realization() const { return *realization_; }

  private:
    const ChannelRealization* realization_;
    IaOptions options_;
    std::uint64_t design_seed_;
    std::map<std::pair<std::vector<int>, int>, Entry> entries_;
};

// Net sum rate of a partition using cached group designs. The overload
// taking an evaluation scenario applies that scenario's frame length and
// overhead models instead of the realization's own — sweeps reuse one
// cache across every frame length because the cached raw rates do not
// depend on it. The evaluation scenario must describe the same network.
double cached_partition_rate(GroupRateCache& cache, const Partition& partition);
double cached_partition_rate(GroupRateCache& cache, const Partition& partition,
                             const Scenario& eval_scenario);

// Brute-force argmax of the net sum rate over every set partition of the
// users (singletons uncoordinated, larger groups aligned, equal time
// shares). Ties keep the earlier partition in enumeration order.
struct ExhaustiveResult {
    Partition partition;
    RateReport report;
};
ExhaustiveResult exhaustive_best(GroupRateCache& cache);
ExhaustiveResult exhaustive_best(GroupRateCache& cache, const Scenario& eval_scenario);
ExhaustiveResult exhaustive_best(const ChannelRealization& realization,
                                 const IaOptions& options, std::uint64_t design_seed);

} // namespace iapart

#endif
