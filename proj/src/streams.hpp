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

#ifndef IAPART_STREAMS_HPP
#define IAPART_STREAMS_HPP

#include <cstdint>
#include <vector>

namespace iapart {

// Total spatial streams a K-user channel with N_t x N_r nodes can sustain
// under linear alignment: floor((N_t + N_r) * K / (K + 1)), capped at
// K * min(N_t, N_r). The cap also covers the point-to-point case K = 1,
// which multiplexes min(N_t, N_r) streams.
int dof(int users, int tx_antennas, int rx_antennas);

// Same quantity without the floor, for selection rules that compare the
// raw value across group sizes.
double dof_continuous(int users, int tx_antennas, int rx_antennas);

// Per-user stream counts summing to dof(); counts differ by at most one.
struct StreamAllocation {
    std::vector<int> counts;

    int total() const;
};

// Gives floor(d / K) streams to everyone and one extra to d mod K users
// chosen uniformly at random by the seed. Throws std::domain_error when
// d < K (some user would get no stream; the group is too big).
StreamAllocation allocate_streams(int users, int tx_antennas, int rx_antennas,
                                  std::uint64_t seed);

} // namespace iapart

#endif
