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

#include "training_bound.hpp"

#include <cmath>
#include <stdexcept>

#include "linalg.hpp"
#include "rng.hpp"

namespace iapart {

ErrorVariances error_variances(int streams, double rho_train, double tau) {
    if (streams < 1) throw std::invalid_argument("error_variances: streams must be >= 1");
    if (rho_train < 0.0 || tau < 0.0) {
        throw std::invalid_argument("error_variances: rho and tau must be nonnegative");
    }
    const double s = static_cast<double>(streams);
    const double denom = s + rho_train * tau;
    return {rho_train * tau / denom, s / denom};
}

double effective_snr(int user, const std::vector<int>& group,
                     const std::vector<int>& group_streams, const arma::rowvec& snr_row,
                     double tau) {
    if (group.size() != group_streams.size() || group.empty()) {
        throw std::invalid_argument("effective_snr: group and stream lists must align");
    }
    if (tau < 0.0) throw std::invalid_argument("effective_snr: tau must be nonnegative");
    int own_index = -1;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (group[i] == user) own_index = static_cast<int>(i);
    }
    if (own_index < 0) throw std::invalid_argument("effective_snr: user not in group");

    const double rho_kk = snr_row(static_cast<arma::uword>(user));
    const double s_k = static_cast<double>(group_streams[static_cast<std::size_t>(own_index)]);
    const double own = s_k + rho_kk * tau;
    double denom = own;
    for (std::size_t i = 0; i < group.size(); ++i) {
        const double rho_kl = snr_row(static_cast<arma::uword>(group[i]));
        const double s_l = static_cast<double>(group_streams[i]);
        denom += own / (s_l + rho_kl * tau) * rho_kl * s_l;
    }
    return rho_kk * rho_kk * tau / denom;
}

GroupTrainingBound group_training_bound(const Scenario& scenario,
                                        const std::vector<int>& group,
                                        const std::vector<int>& streams, double time_share,
                                        double tau, int trials, std::uint64_t seed) {
    if (streams.size() != group.size() || group.empty()) {
        throw std::invalid_argument("group_training_bound: stream list must match the group");
    }
    if (tau < 0.0) {
        throw std::invalid_argument("group_training_bound: tau must be nonnegative");
    }
    if (trials < 1) throw std::invalid_argument("group_training_bound: trials must be >= 1");

    const double residual = scenario.overhead_residual.symbols(static_cast<int>(group.size()));
    const double prefactor =
        std::max(0.0, time_share - (tau + residual) / scenario.frame_len);

    GroupTrainingBound out;
    out.rate.group = group;
    out.rate.alpha_bar = prefactor;
    out.rate.user_rates.assign(group.size(), 0.0);

    // Effective SNR per member is trial-independent.
    std::vector<double> rho_eff(group.size());
    for (std::size_t m = 0; m < group.size(); ++m) {
        rho_eff[m] =
            effective_snr(group[m], group, streams, scenario.link_snr.row(group[m]), tau);
        out.effective_snrs.push_back(rho_eff[m]);
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    arma::vec eigval;
    arma::cx_mat eigvec;
    for (int trial = 0; trial < trials; ++trial) {
        double trial_raw = 0.0;
        for (std::size_t m = 0; m < group.size(); ++m) {
            const int s = streams[m];
            Rng rng(mix_seed(seed, kSeedTrainingDraw, static_cast<std::uint64_t>(trial),
                             static_cast<std::uint64_t>(group[m])));
            arma::cx_mat g(s, s);
            for (arma::uword c = 0; c < g.n_cols; ++c) {
                for (arma::uword r = 0; r < g.n_rows; ++r) {
                    g(r, c) = rng.standard_complex_normal();
                }
            }
            eig_hermitian(eigval, eigvec, arma::cx_mat(g * g.t()));
            double user_raw = 0.0;
            const double scale = rho_eff[m] / static_cast<double>(s);
            for (arma::uword i = 0; i < eigval.n_elem; ++i) {
                user_raw += std::log2(1.0 + scale * std::max(0.0, eigval(i)));
            }
            trial_raw += user_raw;
            out.rate.user_rates[m] += prefactor * user_raw / static_cast<double>(trials);
        }
        sum += trial_raw;
        sum_sq += trial_raw * trial_raw;
    }
    const double mean_raw = sum / static_cast<double>(trials);
    out.rate.raw_rate = mean_raw;
    out.rate.rate = prefactor * mean_raw;
    if (trials > 1) {
        const double var =
            std::max(0.0, (sum_sq - static_cast<double>(trials) * mean_raw * mean_raw) /
                              static_cast<double>(trials - 1));
        out.stderr_of_rate = prefactor * std::sqrt(var / static_cast<double>(trials));
    }
    return out;
}

TrainingBoundReport sum_rate_training_bound(const Scenario& scenario,
                                            const Partition& partition,
                                            const std::vector<std::vector<int>>& group_streams,
                                            const std::vector<double>& taus, int trials,
                                            std::uint64_t seed) {
    scenario.validate();
    partition.validate(scenario.users);
    if (group_streams.size() != partition.groups.size() ||
        taus.size() != partition.groups.size()) {
        throw std::invalid_argument(
            "sum_rate_training_bound: per-group streams and taus must match the partition");
    }

    TrainingBoundReport out;
    for (std::size_t p = 0; p < partition.groups.size(); ++p) {
        GroupTrainingBound gb =
            group_training_bound(scenario, partition.groups[p], group_streams[p],
                                 partition.time_shares[p], taus[p], trials, seed);
        out.report.effective_snrs.insert(out.report.effective_snrs.end(),
                                         gb.effective_snrs.begin(), gb.effective_snrs.end());
        out.group_stderr.push_back(gb.stderr_of_rate);
        out.report.total += gb.rate.rate;
        out.report.groups.push_back(std::move(gb.rate));
    }
    return out;
}

double sum_rate_equal_error_bound(const ChannelRealization& realization,
                                  const std::vector<int>& user_streams, double sigma2_error,
                                  double alpha_bar) {
    const Scenario& sc = realization.scenario;
    if (static_cast<int>(user_streams.size()) != sc.users) {
        throw std::invalid_argument(
            "sum_rate_equal_error_bound: one stream count per user required");
    }
    if (sigma2_error < 0.0 || sigma2_error > 1.0) {
        throw std::invalid_argument(
            "sum_rate_equal_error_bound: error variance must lie in [0, 1]");
    }
    if (alpha_bar < 0.0 || alpha_bar > 1.0) {
        throw std::invalid_argument("sum_rate_equal_error_bound: alpha_bar must lie in [0, 1]");
    }

    const double est_scale = 1.0 - sigma2_error; // estimate power per entry
    double total = 0.0;
    for (int k = 0; k < sc.users; ++k) {
        double gamma_sum = 0.0;
        for (int l = 0; l < sc.users; ++l) gamma_sum += sc.gamma(k, l);
        const double diag = 1.0 + sigma2_error * gamma_sum;
        const double s_k = static_cast<double>(user_streams[static_cast<std::size_t>(k)]);
        const arma::cx_mat& h = realization.of(k, k);
        const arma::uword nr = h.n_rows;
        const arma::cx_mat m =
            diag * arma::cx_mat(arma::eye<arma::mat>(nr, nr),
                                arma::mat(nr, nr, arma::fill::zeros)) +
            (sc.snr(k, k) * est_scale) * (h * h.t());
        total += log2_det_hpd(m) -
                 static_cast<double>(nr) *
                     std::log2(sigma2_error * s_k * sc.gamma(k, k) + 1.0);
    }
    return alpha_bar * total;
}

} // namespace iapart
