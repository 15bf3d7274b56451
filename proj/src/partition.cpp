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

#include "partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace iapart {

int Partition::user_count() const {
    int n = 0;
    for (const auto& g : groups) n += static_cast<int>(g.size());
    return n;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t p = 0; p < groups.size(); ++p) {
        if (p > 0) out << '|';
        for (std::size_t i = 0; i < groups[p].size(); ++i) {
            if (i > 0) out << ',';
            out << groups[p][i] + 1;
        }
    }
    return out.str();
}

void Partition::validate(int users) const {
    if (groups.empty()) throw std::invalid_argument("partition: no groups");
    if (time_shares.size() != groups.size() || tags.size() != groups.size()) {
        throw std::invalid_argument("partition: per-group fields must match group count");
    }
    if (!training_lens.empty() && training_lens.size() != groups.size()) {
        throw std::invalid_argument("partition: per-group fields must match group count");
    }
    std::vector<bool> seen(static_cast<std::size_t>(users), false);
    int covered = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("partition: empty group");
        for (int u : g) {
            if (u < 0 || u >= users) throw std::invalid_argument("partition: user out of range");
            if (seen[static_cast<std::size_t>(u)]) {
                throw std::invalid_argument("partition: duplicate user");
            }
            seen[static_cast<std::size_t>(u)] = true;
            ++covered;
        }
    }
    if (covered != users) throw std::invalid_argument("partition: does not cover all users");
    double share_sum = 0.0;
    for (double m : time_shares) {
        if (m < 0.0) throw std::invalid_argument("partition: negative time share");
        share_sum += m;
    }
    if (std::abs(share_sum - 1.0) > 1e-9) {
        throw std::invalid_argument("partition: time shares must sum to 1");
    }
}

Partition Partition::of_groups(std::vector<std::vector<int>> groups) {
    groups.erase(std::remove_if(groups.begin(), groups.end(),
                                [](const std::vector<int>& g) { return g.empty(); }),
                 groups.end());
    if (groups.empty()) throw std::invalid_argument("partition: no groups");
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    Partition part;
    part.groups = std::move(groups);
    const auto p = part.groups.size();
    part.time_shares.assign(p, 1.0 / static_cast<double>(p));
    part.tags.reserve(p);
    for (const auto& g : part.groups) {
        part.tags.push_back(g.size() == 1 ? GroupTag::single_user : GroupTag::ia);
    }
    return part;
}

Partition Partition::whole_network(int users) {
    std::vector<int> all(static_cast<std::size_t>(users));
    for (int i = 0; i < users; ++i) all[static_cast<std::size_t>(i)] = i;
    Partition part = of_groups({all});
    // A lone user still transmits uncoordinated; a bigger group aligns.
    part.tags[0] = users == 1 ? GroupTag::single_user : GroupTag::ia;
    return part;
}

Partition Partition::singletons(int users) {
    std::vector<std::vector<int>> groups;
    groups.reserve(static_cast<std::size_t>(users));
    for (int i = 0; i < users; ++i) groups.push_back({i});
    return of_groups(std::move(groups));
}

} // namespace iapart
