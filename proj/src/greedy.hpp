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

#ifndef IAPART_GREEDY_HPP
#define IAPART_GREEDY_HPP

#include <cstdint>
#include <vector>

#include <armadillo>

#include "partition.hpp"
#include "scenario.hpp"

namespace iapart {

struct GreedyOptions {
    // 0 = derive the group count from the overhead-aware stream probe;
    // otherwise force this many groups.
    int forced_groups = 0;
    // When set, incremented once per selection-function evaluation.
    long long* eval_counter = nullptr;
};

// One user at a time, assign the (user, group) pair with the highest
// approximate rate. Ties go to the lowest user index, then the lowest group
// index. When no candidate has positive value (every group's slot is out of
// budget), remaining users are spread round-robin onto the smallest groups.
// Every group gets an equal time share.
Partition greedy_balanced(const Scenario& scenario, const arma::vec& qualities,
                          const GreedyOptions& options = {});

// Same skeleton, but each step assigns the pair minimizing the resulting
// spread (max minus min) of estimated per-group sum rates. Time shares are
// left equal here; callers wanting equal realized rates refine them with
// allocate_time.
Partition greedy_rate_fair(const Scenario& scenario, const arma::vec& qualities,
                           const GreedyOptions& options = {});

// Distance from user k's receiver to the nearest transmitter already in the
// group; an empty group counts as placement.empty_group_distance away.
double geo_distance(int user, const std::vector<int>& group_members,
                    const Scenario& scenario);

enum class GeoVariant {
    separate, // group far-apart users; members ignore each other's signals
    cluster   // group near users; members align within the group
};

// Position-driven grouping: `separate` repeatedly assigns the pair with the
// largest receiver-to-group distance (groups of mutually distant users,
// tagged single-user with linear overhead); `cluster` swaps min and max to
// pull neighbors together for alignment. Groups are hard-capped at the
// chosen per-group user count.
Partition greedy_geographic(const Scenario& scenario, GeoVariant variant,
                            const GreedyOptions& options = {});

} // namespace iapart

#endif
