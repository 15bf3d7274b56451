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

#ifndef IAPART_PARTITION_HPP
#define IAPART_PARTITION_HPP

#include <string>
#include <vector>

namespace iapart {

// How a group transmits in its slot: aligned precoding designed jointly
// across the group, or uncoordinated per-link beamforming (every member
// treats other members' signals as noise). The tag also selects the
// overhead model: quadratic-in-size for aligned groups, linear for
// uncoordinated ones.
enum class GroupTag { ia, single_user };

// Assignment of users {0, .., K-1} to ordered disjoint groups, with a time
// share, strategy tag, and optional training length per group. Canonical
// form keeps members ascending and groups ordered by least member.
struct Partition {
    std::vector<std::vector<int>> groups;
    std::vector<double> time_shares;    // mu_p, sums to 1
    std::vector<GroupTag> tags;         // one per group
    std::vector<double> training_lens;  // tau_p; empty when not set

    int group_count() const { return static_cast<int>(groups.size()); }
    int user_count() const;

    // Canonical text form, 1-based, e.g. "1,3|2,4".
    std::string to_string() const;

    void validate(int users) const;

    // Builds the canonical form with equal time shares. Multi-user groups
    // are tagged aligned; singletons are tagged single-user.
    static Partition of_groups(std::vector<std::vector<int>> groups);

    // All users in one aligned group.
    static Partition whole_network(int users);
    // One singleton group per user (time division).
    static Partition singletons(int users);
};

} // namespace iapart

#endif
