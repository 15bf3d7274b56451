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

#include "streams.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"

namespace iapart {

namespace {

void check_args(int users, int tx_antennas, int rx_antennas) {
    if (users < 1 || tx_antennas < 1 || rx_antennas < 1) {
        throw std::invalid_argument("dof: users and antenna counts must be >= 1");
    }
}

} // namespace

int dof(int users, int tx_antennas, int rx_antennas) {
    check_args(users, tx_antennas, rx_antennas);
    const long long floored =
        static_cast<long long>(tx_antennas + rx_antennas) * users / (users + 1);
    const long long cap =
        static_cast<long long>(users) * std::min(tx_antennas, rx_antennas);
    return static_cast<int>(std::min(floored, cap));
}

double dof_continuous(int users, int tx_antennas, int rx_antennas) {
    check_args(users, tx_antennas, rx_antennas);
    const double raw = static_cast<double>(tx_antennas + rx_antennas) * users / (users + 1.0);
    const double cap = static_cast<double>(users) * std::min(tx_antennas, rx_antennas);
    return std::min(raw, cap);
}

int StreamAllocation::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

StreamAllocation allocate_streams(int users, int tx_antennas, int rx_antennas,
                                  std::uint64_t seed) {
    const int d = dof(users, tx_antennas, rx_antennas);
    if (d < users) {
        throw std::domain_error("allocate_streams: fewer streams than users; shrink the group");
    }
    const int base = d / users;
    const int extra = d % users;

    StreamAllocation a;
    a.counts.assign(static_cast<std::size_t>(users), base);
    if (extra > 0) {
        // Partial Fisher-Yates: the first `extra` slots of a random
        // permutation pick the lucky users.
        std::vector<int> perm(static_cast<std::size_t>(users));
        std::iota(perm.begin(), perm.end(), 0);
        Rng rng(mix_seed(seed, kSeedStreams, static_cast<std::uint64_t>(users),
                         (static_cast<std::uint64_t>(tx_antennas) << 32) |
                             static_cast<std::uint64_t>(rx_antennas)));
        for (int i = 0; i < extra; ++i) {
            const int j = i + rng.uniform_int(users - i);
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
            a.counts[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] += 1;
        }
    }
    return a;
}

} // namespace iapart
