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

#include "precoders.hpp"

#include <algorithm>
#include <stdexcept>

#include "linalg.hpp"
#include "rate_engine.hpp"

namespace iapart {

namespace {

void check_group(const ChannelRealization& realization, const std::vector<int>& group) {
    if (group.empty()) throw std::invalid_argument("precoders: empty group");
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (group[i] < 0 || group[i] >= realization.scenario.users) {
            throw std::invalid_argument("precoders: user out of range");
        }
        if (i > 0 && group[i] == group[i - 1]) {
            throw std::invalid_argument("precoders: duplicate user in group");
        }
    }
}

// Top `streams` singular directions of the user's own link.
void own_link_beamformer(const ChannelRealization& realization, int user, int streams,
                         arma::cx_mat& precoder, arma::cx_mat& combiner) {
    arma::cx_mat u;
    arma::vec s;
    arma::cx_mat v;
    if (!arma::svd(u, s, v, realization.of(user, user))) {
        throw std::runtime_error("precoders: SVD failed");
    }
    precoder = v.cols(0, static_cast<arma::uword>(streams) - 1);
    combiner = u.cols(0, static_cast<arma::uword>(streams) - 1);
    normalize_column_phases(precoder);
    normalize_column_phases(combiner);
}

double weighted_leakage(const ChannelRealization& realization, const std::vector<int>& group,
                        const std::vector<int>& streams,
                        const std::vector<arma::cx_mat>& precoders,
                        const std::vector<arma::cx_mat>& combiners) {
    const std::size_t n = group.size();
    double j = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (l == k) continue;
            const arma::cx_mat cross =
                combiners[k].t() * realization.of(group[k], group[l]) * precoders[l];
            const double fro = arma::norm(cross, "fro");
            j += realization.scenario.snr(group[k], group[l]) /
                 static_cast<double>(streams[l]) * fro * fro;
        }
    }
    return j;
}

// Plain interference power after combining, with no SNR or stream weights.
double cross_leakage(const ChannelRealization& realization, const std::vector<int>& group,
                     const std::vector<arma::cx_mat>& precoders,
                     const std::vector<arma::cx_mat>& combiners) {
    const std::size_t n = group.size();
    double j = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
            if (l == k) continue;
            const arma::cx_mat cross =
                combiners[k].t() * realization.of(group[k], group[l]) * precoders[l];
            const double fro = arma::norm(cross, "fro");
            j += fro * fro;
        }
    }
    return j;
}

} // namespace

int PrecoderSet::member_index(int user) const {
    const auto it = std::lower_bound(group.begin(), group.end(), user);
    if (it == group.end() || *it != user) return -1;
    return static_cast<int>(it - group.begin());
}

arma::cx_mat random_orthonormal(int rows, int cols, Rng& rng) {
    if (rows < 1 || cols < 1 || cols > rows) {
        throw std::invalid_argument("random_orthonormal: need 1 <= cols <= rows");
    }
    arma::cx_mat a(rows, cols);
    for (arma::uword c = 0; c < a.n_cols; ++c) {
        for (arma::uword r = 0; r < a.n_rows; ++r) {
            a(r, c) = rng.standard_complex_normal();
        }
    }
    arma::cx_mat q;
    arma::cx_mat r;
    if (!arma::qr_econ(q, r, a)) {
        throw std::runtime_error("random_orthonormal: QR failed");
    }
    // Fold the R-diagonal phases into Q so the distribution is exactly
    // rotation-invariant rather than QR-convention-dependent.
    for (arma::uword j = 0; j < q.n_cols; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(j) *= std::conj(d) / mag;
    }
    return q;
}

arma::cx_mat random_orthonormal(int rows, int cols, std::uint64_t seed) {
    Rng rng(mix_seed(seed, kSeedOrthonormal, 0, 0));
    return random_orthonormal(rows, cols, rng);
}

PrecoderSet uncoordinated_precoders(const ChannelRealization& realization,
                                    std::vector<int> group) {
    std::sort(group.begin(), group.end());
    check_group(realization, group);
    const int streams =
        std::min(realization.scenario.tx_antennas, realization.scenario.rx_antennas);
    PrecoderSet set;
    set.group = std::move(group);
    set.streams.assign(set.group.size(), streams);
    set.precoders.resize(set.group.size());
    set.combiners.resize(set.group.size());
    for (std::size_t m = 0; m < set.group.size(); ++m) {
        own_link_beamformer(realization, set.group[m], streams, set.precoders[m],
                            set.combiners[m]);
    }
    set.leakage = relative_leakage(realization, set);
    set.leakage_traces = {{set.leakage}};
    set.restart_leakages = {set.leakage};
    return set;
}

PrecoderSet iterative_ia(const ChannelRealization& realization, std::vector<int> group,
                         const StreamAllocation& streams, const IaOptions& options,
                         std::uint64_t seed) {
    std::sort(group.begin(), group.end());
    check_group(realization, group);
    const std::size_t n = group.size();
    if (streams.counts.size() != n) {
        throw std::invalid_argument("iterative_ia: stream counts must match group size");
    }
    if (options.iterations < 1 || options.restarts < 1) {
        throw std::invalid_argument("iterative_ia: iterations and restarts must be >= 1");
    }
    const int nt = realization.scenario.tx_antennas;
    const int nr = realization.scenario.rx_antennas;
    for (std::size_t m = 0; m < n; ++m) {
        const int s = streams.counts[m];
        if (s < 1 || s > std::min(nt, nr)) {
            throw std::invalid_argument("iterative_ia: stream count out of range");
        }
    }

    if (n == 1) {
        PrecoderSet set;
        set.group = std::move(group);
        set.streams = streams.counts;
        set.precoders.resize(1);
        set.combiners.resize(1);
        own_link_beamformer(realization, set.group[0], set.streams[0], set.precoders[0],
                            set.combiners[0]);
        set.leakage = 0.0;
        set.leakage_traces = {{0.0}};
        set.restart_leakages = {0.0};
        return set;
    }

    double denom = 0.0;
    for (int g : group) denom += realization.scenario.snr(g, g);
    if (denom <= 0.0) denom = 1.0;

    PrecoderSet best;
    double best_rate = -1.0;
    std::vector<std::vector<double>> all_traces;
    all_traces.reserve(static_cast<std::size_t>(options.restarts));
    std::vector<double> final_leakages;
    final_leakages.reserve(static_cast<std::size_t>(options.restarts));

    std::vector<arma::cx_mat> f(n);
    std::vector<arma::cx_mat> u(n);
    arma::vec eigval;
    arma::cx_mat eigvec;

    for (int restart = 0; restart < options.restarts; ++restart) {
        for (std::size_t m = 0; m < n; ++m) {
            Rng rng(mix_seed(seed, kSeedIaInit, static_cast<std::uint64_t>(restart),
                             static_cast<std::uint64_t>(group[m])));
            f[m] = random_orthonormal(nt, streams.counts[m], rng);
        }

        std::vector<double> trace;
        trace.reserve(static_cast<std::size_t>(options.iterations));

        const auto receive_step = [&]() {
            for (std::size_t k = 0; k < n; ++k) {
                arma::cx_mat q(nr, nr, arma::fill::zeros);
                for (std::size_t l = 0; l < n; ++l) {
                    if (l == k) continue;
                    const arma::cx_mat hf = realization.of(group[k], group[l]) * f[l];
                    q += (realization.scenario.snr(group[k], group[l]) /
                          static_cast<double>(streams.counts[l])) *
                         (hf * hf.t());
                }
                eig_hermitian(eigval, eigvec, q);
                u[k] = eigvec.cols(0, static_cast<arma::uword>(streams.counts[k]) - 1);
            }
        };

        for (int iter = 0; iter < options.iterations; ++iter) {
            receive_step();
            // Reciprocal half-step: each precoder minimizes the leakage it
            // causes into the other members' receive subspaces.
            for (std::size_t l = 0; l < n; ++l) {
                arma::cx_mat q(nt, nt, arma::fill::zeros);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == l) continue;
                    const arma::cx_mat hu = realization.of(group[k], group[l]).t() * u[k];
                    q += realization.scenario.snr(group[k], group[l]) * (hu * hu.t());
                }
                eig_hermitian(eigval, eigvec, q);
                f[l] = eigvec.cols(0, static_cast<arma::uword>(streams.counts[l]) - 1);
            }
            trace.push_back(weighted_leakage(realization, group, streams.counts, f, u) /
                            denom);
        }
        // Leave the receive filters matched to the final precoders.
        receive_step();

        PrecoderSet candidate;
        candidate.group = group;
        candidate.streams = streams.counts;
        candidate.precoders = f;
        candidate.combiners = u;
        candidate.leakage = cross_leakage(realization, group, f, u) / denom;
        const double rate = sum_rate_perfect(realization, candidate, 1.0).rate;
        all_traces.push_back(std::move(trace));
        final_leakages.push_back(candidate.leakage);
        if (rate > best_rate) {
            best_rate = rate;
            best = std::move(candidate);
            best.selected_restart = restart;
        }
    }

    best.leakage_traces = std::move(all_traces);
    best.restart_leakages = std::move(final_leakages);
    return best;
}

PrecoderSet design_group_precoders(const ChannelRealization& realization,
                                   std::vector<int> group, GroupTag tag,
                                   const IaOptions& options, std::uint64_t seed) {
    if (tag == GroupTag::single_user) {
        return uncoordinated_precoders(realization, std::move(group));
    }
    const StreamAllocation alloc =
        allocate_streams(static_cast<int>(group.size()), realization.scenario.tx_antennas,
                         realization.scenario.rx_antennas, seed);
    return iterative_ia(realization, std::move(group), alloc, options, seed);
}

double relative_leakage(const ChannelRealization& realization, const PrecoderSet& set) {
    if (set.group.size() < 2) return 0.0;
    double denom = 0.0;
    for (int g : set.group) denom += realization.scenario.snr(g, g);
    if (denom <= 0.0) denom = 1.0;
    return cross_leakage(realization, set.group, set.precoders, set.combiners) / denom;
}

} // namespace iapart
