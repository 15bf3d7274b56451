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

#include "enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace iapart {

namespace {

void check_users(int users) {
    if (users < 1) throw std::invalid_argument("enumeration: users must be >= 1");
    if (users > kMaxEnumerationUsers) {
        throw std::length_error(
            "enumeration: too many users for exhaustive search; use the greedy methods");
    }
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

unsigned long long int_pow(unsigned long long base, int exp) {
    unsigned long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

} // namespace

void for_each_partition(int users,
                        const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    check_users(users);
    const auto n = static_cast<std::size_t>(users);
    // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
    std::vector<int> label(n, 0);
    std::vector<int> prefix_max(n, 0); // max label over [0..i]
    std::vector<std::vector<int>> groups;
    const auto emit = [&]() {
        const int count = prefix_max[n - 1] + 1;
        groups.assign(static_cast<std::size_t>(count), {});
        for (std::size_t i = 0; i < n; ++i) {
            groups[static_cast<std::size_t>(label[i])].push_back(static_cast<int>(i));
        }
        visit(groups);
    };

    while (true) {
        emit();
        // Advance to the next restricted growth string.
        std::size_t i = n - 1;
        while (i > 0) {
            const int cap = prefix_max[i - 1] + 1;
            if (label[i] < cap) break;
            --i;
        }
        if (i == 0) return; // label[0] is pinned at 0; sequence exhausted
        label[i] += 1;
        prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            label[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

void for_each_balanced_partition(
    int users, int groups,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    check_users(users);
    if (groups < 1 || groups > users) {
        throw std::invalid_argument("enumeration: group count out of range");
    }
    const int small = users / groups;
    const int large = small + 1;
    for_each_partition(users, [&](const std::vector<std::vector<int>>& parts) {
        if (static_cast<int>(parts.size()) != groups) return;
        for (const auto& g : parts) {
            const int size = static_cast<int>(g.size());
            if (size != small && size != large) return;
        }
        visit(parts);
    });
}

unsigned long long count_partitions(int users) {
    check_users(users);
    // Bell triangle: row n starts with the last entry of row n-1; each next
    // entry adds its left neighbor and the entry above that neighbor.
    std::vector<unsigned long long> prev{1};
    for (int n = 1; n <= users; ++n) {
        std::vector<unsigned long long> row(static_cast<std::size_t>(n) + 1);
        row[0] = prev.back();
        for (std::size_t i = 1; i < row.size(); ++i) row[i] = row[i - 1] + prev[i - 1];
        prev = std::move(row);
    }
    return prev.front();
}

unsigned long long count_balanced(int users, int groups) {
    check_users(users);
    if (groups < 1 || groups > users) {
        throw std::invalid_argument("enumeration: group count out of range");
    }
    const int q = users / groups;
    const int r = users % groups;
    const unsigned long long numerator = factorial(users);
    const unsigned long long denominator = int_pow(factorial(q + 1), r) *
                                           int_pow(factorial(q), groups - r) * factorial(r) *
                                           factorial(groups - r);
    return numerator / denominator;
}

} // namespace iapart
