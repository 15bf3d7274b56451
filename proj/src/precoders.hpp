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

#ifndef IAPART_PRECODERS_HPP
#define IAPART_PRECODERS_HPP

#include <cstdint>
#include <vector>

#include <armadillo>

#include "channels.hpp"
#include "partition.hpp"
#include "rng.hpp"
#include "streams.hpp"

namespace iapart {

struct IaOptions {
    int iterations = 100;
    int restarts = 5;
};

// Linear transmit/receive design for one group: per member a precoder F
// (N_t x S, orthonormal columns) and combiner U (N_r x S, orthonormal
// columns), plus leakage diagnostics. Members are kept sorted ascending and
// all per-member vectors align with that order.
struct PrecoderSet {
    std::vector<int> group;
    std::vector<int> streams;
    std::vector<arma::cx_mat> precoders;
    std::vector<arma::cx_mat> combiners;

    // Residual cross-link interference power after combining, divided by
    // the group's summed direct-link SNR.
    double leakage = 0.0;
    int selected_restart = 0;
    // One per-iteration trace per restart of the minimized objective (the
    // SNR-weighted leakage over the same denominator); nonincreasing within
    // each restart by construction.
    std::vector<std::vector<double>> leakage_traces;
    // Final leakage of every restart, on the same scale as `leakage`. The
    // returned design is the best restart by sum rate, which is not always
    // the one with the lowest leakage.
    std::vector<double> restart_leakages;

    int member_index(int user) const; // -1 when the user is not in the group
};

// Columns orthonormal, Haar-distributed (QR of a Gaussian matrix with the
// R-diagonal phases folded in). Requires cols <= rows.
arma::cx_mat random_orthonormal(int rows, int cols, Rng& rng);
arma::cx_mat random_orthonormal(int rows, int cols, std::uint64_t seed);

// Alternating leakage minimization: each half-step exactly minimizes total
// weighted leakage over one side's subspaces (receive filters from the
// forward network, precoders from the reciprocal network), so leakage is
// nonincreasing within a restart. The best of `restarts` random starts by
// full-data-fraction sum rate is returned. Deterministic given seed; a
// single-member group reduces to dominant-singular-vector beamforming.
PrecoderSet iterative_ia(const ChannelRealization& realization, std::vector<int> group,
                         const StreamAllocation& streams, const IaOptions& options,
                         std::uint64_t seed);

// Uncoordinated per-link transmission: every member beamforms on its own
// link's top singular vectors with min(N_t, N_r) streams, ignoring the
// other members. Used for singleton groups and distance-separated groups.
PrecoderSet uncoordinated_precoders(const ChannelRealization& realization,
                                    std::vector<int> group);

// Dispatch on the group tag: aligned groups get stream allocation plus
// iterative alignment, single-user groups get uncoordinated beamforming.
PrecoderSet design_group_precoders(const ChannelRealization& realization,
                                   std::vector<int> group, GroupTag tag,
                                   const IaOptions& options, std::uint64_t seed);

// Total cross-link interference power after combining, sum of
// ||U_k* H_kl F_l||_F^2 over ordered member pairs, relative to the group's
// summed direct-link SNR.
double relative_leakage(const ChannelRealization& realization, const PrecoderSet& set);

} // namespace iapart

#endif
