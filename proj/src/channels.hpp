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

#ifndef IAPART_CHANNELS_HPP
#define IAPART_CHANNELS_HPP

#include <cstdint>
#include <vector>

#include <armadillo>

#include "scenario.hpp"

namespace iapart {

// One coherence block's channel draw: a K x K grid of N_r x N_t matrices,
// h(k, l) being the fading from transmitter l to receiver k. Carries a copy
// of the scenario so downstream consumers are self-contained.
struct ChannelRealization {
    Scenario scenario;
    std::vector<arma::cx_mat> channels; // row-major K x K grid
    std::uint64_t seed = 0;

    const arma::cx_mat& of(int rx_user, int tx_user) const {
        return channels[static_cast<std::size_t>(rx_user) *
                            static_cast<std::size_t>(scenario.users) +
                        static_cast<std::size_t>(tx_user)];
    }
};

// Draws every entry i.i.d. zero-mean unit-variance circularly symmetric
// complex Gaussian. Each (receiver, transmitter) pair uses its own derived
// seed, so the draw is independent of grid traversal order.
ChannelRealization generate_channels(const Scenario& scenario, std::uint64_t seed);

// Per-user large-scale quality rho(k, k) * ||H(k, k)||_F^2, the only channel
// state the greedy partitioners consume.
arma::vec channel_qualities(const ChannelRealization& realization);

} // namespace iapart

#endif
