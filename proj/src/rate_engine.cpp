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

#include "rate_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "linalg.hpp"

namespace iapart {

GroupRate sum_rate_perfect(const ChannelRealization& realization, const PrecoderSet& set,
                           double alpha_bar) {
    if (alpha_bar < 0.0 || alpha_bar > 1.0) {
        throw std::invalid_argument("sum_rate_perfect: alpha_bar must lie in [0, 1]");
    }
    const std::size_t n = set.group.size();
    if (n == 0 || set.precoders.size() != n || set.streams.size() != n) {
        throw std::invalid_argument("sum_rate_perfect: malformed precoder set");
    }

    GroupRate out;
    out.group = set.group;
    out.alpha_bar = alpha_bar;
    out.leakage = set.leakage;
    out.user_rates.resize(n);

    for (std::size_t m = 0; m < n; ++m) {
        const int k = set.group[m];
        arma::cx_mat cov = realization.scenario.noise_covariance(k);
        for (std::size_t l = 0; l < n; ++l) {
            if (l == m) continue;
            const arma::cx_mat hf = realization.of(k, set.group[l]) * set.precoders[l];
            cov += (realization.scenario.snr(k, set.group[l]) /
                    static_cast<double>(set.streams[l])) *
                   (hf * hf.t());
        }
        const arma::cx_mat hf = realization.of(k, k) * set.precoders[m];
        const arma::cx_mat sig = (realization.scenario.snr(k, k) /
                                  static_cast<double>(set.streams[m])) *
                                 (hf * hf.t());
        const double raw = log2_det_hpd(cov + sig) - log2_det_hpd(cov);
        out.raw_rate += raw;
        out.user_rates[m] = alpha_bar * raw;
        out.rate += alpha_bar * raw;
    }
    return out;
}

double group_alpha_bar(const Scenario& scenario, int group_size, GroupTag tag,
                       double time_share) {
    const OverheadModel& model =
        tag == GroupTag::ia ? scenario.overhead_ia : scenario.overhead_tdma;
    // Written as mu - L/T so an infinite frame length cleanly yields mu.
    const double ab = time_share - model.symbols(group_size) / scenario.frame_len;
    return std::max(0.0, ab);
}

RateReport partitioned_sum_rate(const ChannelRealization& realization,
                                const Partition& partition,
                                const std::vector<PrecoderSet>& per_group) {
    partition.validate(realization.scenario.users);
    if (per_group.size() != partition.groups.size()) {
        throw std::invalid_argument("partitioned_sum_rate: one precoder set per group required");
    }
    RateReport report;
    for (std::size_t p = 0; p < partition.groups.size(); ++p) {
        if (per_group[p].group != partition.groups[p]) {
            throw std::invalid_argument(
                "partitioned_sum_rate: precoder set does not match its group");
        }
        const double ab =
            group_alpha_bar(realization.scenario, static_cast<int>(partition.groups[p].size()),
                            partition.tags[p], partition.time_shares[p]);
        GroupRate gr = sum_rate_perfect(realization, per_group[p], ab);
        if (ab == 0.0) {
            report.warnings.push_back("group " + std::to_string(p + 1) +
                                      " has no data budget");
        }
        report.total += gr.rate;
        report.groups.push_back(std::move(gr));
    }
    return report;
}

} // namespace iapart
