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

#ifndef IAPART_ENUMERATION_HPP
#define IAPART_ENUMERATION_HPP

#include <functional>
#include <vector>

namespace iapart {

// Largest user count exhaustive enumeration accepts (set-partition counts
// grow super-exponentially; past this point use the greedy methods).
inline constexpr int kMaxEnumerationUsers = 12;

// Visits every set partition of {0, .., users-1} exactly once, in restricted
// growth string order. Group members are ascending and groups are ordered by
// least member. Throws std::length_error above kMaxEnumerationUsers.
void for_each_partition(int users,
                        const std::function<void(const std::vector<std::vector<int>>&)>& visit);

// Visits only partitions into `groups` groups whose sizes are as equal as
// possible (sizes floor(K/P) and ceil(K/P)).
void for_each_balanced_partition(
    int users, int groups,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit);

// Bell number: how many partitions for_each_partition visits.
unsigned long long count_partitions(int users);

// Closed-form count of the near-equal-size partitions into `groups` groups:
//   K! / ((q+1)!^r * q!^(P-r) * r! * (P-r)!),  q = K / P, r = K mod P.
unsigned long long count_balanced(int users, int groups);

} // namespace iapart

#endif
