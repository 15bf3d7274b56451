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

#ifndef IAPART_TRAINING_BOUND_HPP
#define IAPART_TRAINING_BOUND_HPP

#include <cstdint>
#include <vector>

#include "channels.hpp"
#include "partition.hpp"
#include "rate_engine.hpp"

namespace iapart {

// MMSE channel-estimation split after tau symbols of orthogonal training at
// linear SNR rho_train on a link carrying `streams` streams:
// estimate variance rho*tau / (S + rho*tau), error variance S / (S + rho*tau).
// The two sum to 1 exactly (orthogonality principle).
struct ErrorVariances {
    double estimate; // per-entry variance of the channel estimate
    double error;    // per-entry variance of the estimation error
};
ErrorVariances error_variances(int streams, double rho_train, double tau);

// Post-estimation signal-to-(noise + residual interference) ratio for user
// `user` inside `group` after tau training symbols:
// rho_kk^2 tau / (S_k + rho_kk tau
//                 + sum_{l in group} [(S_k + rho_kk tau)/(S_l + rho_kl tau)]
//                   rho_kl S_l).
// `group_streams` aligns with `group`; `snr_row` is the user's receiver row
// of the link-SNR grid. tau = 0 gives 0 (no training, no coherent rate).
double effective_snr(int user, const std::vector<int>& group,
                     const std::vector<int>& group_streams, const arma::rowvec& snr_row,
                     double tau);

// Monte Carlo lower bound on the partitioned sum rate with estimated CSI:
// mean over trials of
//   sum_p [mu_p - (tau_p + L_residual(K_p)) / T]^+ *
//     sum_{k in p} log2 det(I + (rho_eff / S_k) G G*),
// with G an S_k x S_k i.i.d. unit-variance complex Gaussian effective
// channel. Channel draws depend only on (seed, trial, user), so evaluations
// at different tau share the same randomness (common random numbers).
// group_streams[p] aligns with partition.groups[p]; taus has one entry per
// group. Per-group standard errors are reported alongside the means.
struct TrainingBoundReport {
    RateReport report;
    std::vector<double> group_stderr;
};
TrainingBoundReport sum_rate_training_bound(const Scenario& scenario,
                                            const Partition& partition,
                                            const std::vector<std::vector<int>>& group_streams,
                                            const std::vector<double>& taus, int trials,
                                            std::uint64_t seed);

// One group's contribution to the bound: net rate (mean over trials with
// the clamped time budget applied), its standard error, and the members'
// effective SNRs. The bound is separable across groups, so sweeping a
// group's tau only needs this piece.
struct GroupTrainingBound {
    GroupRate rate;
    double stderr_of_rate = 0.0;
    std::vector<double> effective_snrs;
};
GroupTrainingBound group_training_bound(const Scenario& scenario,
                                        const std::vector<int>& group,
                                        const std::vector<int>& streams, double time_share,
                                        double tau, int trials, std::uint64_t seed);

// Lower bound on one frame's sum rate when every link has the same
// per-entry estimation-error variance sigma2_error. Uses the realization's
// direct links scaled to estimate strength sqrt(1 - sigma2_error), with the
// error power of all links folded into white noise-plus-interference.
double sum_rate_equal_error_bound(const ChannelRealization& realization,
                                  const std::vector<int>& user_streams, double sigma2_error,
                                  double alpha_bar);

} // namespace iapart

#endif
