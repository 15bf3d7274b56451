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

#include "exhaustive.hpp"

#include <stdexcept>

namespace iapart {

GroupRateCache::GroupRateCache(const ChannelRealization& realization,
                               const IaOptions& options, std::uint64_t design_seed)
    : realization_(&realization), options_(options), design_seed_(design_seed) {}

const GroupRateCache::Entry& GroupRateCache::get(const std::vector<int>& members,
                                                 GroupTag tag) {
    const auto key = std::make_pair(members, static_cast<int>(tag));
    const auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;

    Entry entry;
    entry.precoders =
        design_group_precoders(*realization_, members, tag, options_, design_seed_);
    entry.at_full_budget = sum_rate_perfect(*realization_, entry.precoders, 1.0);
    return entries_.emplace(key, std::move(entry)).first->second;
}

double cached_partition_rate(GroupRateCache& cache, const Partition& partition,
                             const Scenario& eval_scenario) {
    if (eval_scenario.users != cache.realization().scenario.users) {
        throw std::invalid_argument(
            "cached_partition_rate: evaluation scenario has a different user count");
    }
    double total = 0.0;
    for (std::size_t p = 0; p < partition.groups.size(); ++p) {
        const double ab =
            group_alpha_bar(eval_scenario, static_cast<int>(partition.groups[p].size()),
                            partition.tags[p], partition.time_shares[p]);
        if (ab <= 0.0) continue;
        total += ab * cache.get(partition.groups[p], partition.tags[p]).at_full_budget.raw_rate;
    }
    return total;
}

double cached_partition_rate(GroupRateCache& cache, const Partition& partition) {
    return cached_partition_rate(cache, partition, cache.realization().scenario);
}

ExhaustiveResult exhaustive_best(GroupRateCache& cache, const Scenario& eval_scenario) {
    const int users = cache.realization().scenario.users;
    Partition best;
    double best_rate = -1.0;
    for_each_partition(users, [&](const std::vector<std::vector<int>>& groups) {
        Partition candidate = Partition::of_groups(groups);
        const double rate = cached_partition_rate(cache, candidate, eval_scenario);
        if (rate > best_rate) {
            best_rate = rate;
            best = std::move(candidate);
        }
    });

    ExhaustiveResult result;
    result.partition = std::move(best);
    std::vector<PrecoderSet> designs;
    designs.reserve(result.partition.groups.size());
    for (std::size_t p = 0; p < result.partition.groups.size(); ++p) {
        designs.push_back(
            cache.get(result.partition.groups[p], result.partition.tags[p]).precoders);
    }
    ChannelRealization eval_realization = cache.realization();
    eval_realization.scenario = eval_scenario;
    result.report = partitioned_sum_rate(eval_realization, result.partition, designs);
    return result;
}

ExhaustiveResult exhaustive_best(GroupRateCache& cache) {
    return exhaustive_best(cache, cache.realization().scenario);
}

ExhaustiveResult exhaustive_best(const ChannelRealization& realization,
                                 const IaOptions& options, std::uint64_t design_seed) {
    GroupRateCache cache(realization, options, design_seed);
    return exhaustive_best(cache);
}

} // namespace iapart
