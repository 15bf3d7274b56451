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

#include "channels.hpp"

#include "rng.hpp"

namespace iapart {

ChannelRealization generate_channels(const Scenario& scenario, std::uint64_t seed) {
    scenario.validate();
    ChannelRealization r;
    r.scenario = scenario;
    r.seed = seed;
    r.channels.reserve(static_cast<std::size_t>(scenario.users) *
                       static_cast<std::size_t>(scenario.users));
    for (int k = 0; k < scenario.users; ++k) {
        for (int l = 0; l < scenario.users; ++l) {
            Rng rng(mix_seed(seed, kSeedChannels, static_cast<std::uint64_t>(k),
                             static_cast<std::uint64_t>(l)));
            arma::cx_mat h(scenario.rx_antennas, scenario.tx_antennas);
            // Column-major fill, matching the matrix memory layout.
            for (arma::uword c = 0; c < h.n_cols; ++c) {
                for (arma::uword w = 0; w < h.n_rows; ++w) {
                    h(w, c) = rng.standard_complex_normal();
                }
            }
            r.channels.push_back(std::move(h));
        }
    }
    return r;
}

arma::vec channel_qualities(const ChannelRealization& realization) {
    const int users = realization.scenario.users;
    arma::vec q(users);
    for (int k = 0; k < users; ++k) {
        const double fro = arma::norm(realization.of(k, k), "fro");
        q(k) = realization.scenario.snr(k, k) * fro * fro;
    }
    return q;
}

} // namespace iapart
