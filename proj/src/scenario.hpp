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

#ifndef IAPART_SCENARIO_HPP
#define IAPART_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <armadillo>

#include "overhead.hpp"

namespace iapart {

// Optional 2-D node geometry. Positions are stored one column per node,
// rows = (x, y), in meters. When present, link SNRs are derived from a
// log-distance path-loss law and are reproducible from the geometry alone.
struct Placement {
    arma::mat tx; // 2 x K transmitter positions
    arma::mat rx; // 2 x K receiver positions
    double path_loss_exponent = 3.8;
    double reference_snr = 1.0;      // linear SNR observed at reference_distance
    double reference_distance = 1.0; // meters
    double empty_group_distance = 1.0; // distance credited to an empty group
    double drop_radius = 0.0;          // receiver re-drop disk radius (0 = fixed)

    bool present() const { return tx.n_cols > 0; }
};

// Where greedy partitioners get their per-user channel-quality numbers:
// the current realization (genie) or an independent previous frame.
enum class QualitySource { genie, previous_frame };

// Static description of a K-user MIMO interference network: antenna counts,
// frame length, overhead models per strategy, the K x K grid of link SNRs
// rho(k, l) (row = receiver k, column = transmitter l), per-transmitter
// powers, noise covariance, and optional geometry.
struct Scenario {
    int users = 0;
    int tx_antennas = 0;
    int rx_antennas = 0;
    double frame_len = 0.0; // T, symbols per coherence block

    OverheadModel overhead_ia = OverheadModel::ia();
    OverheadModel overhead_tdma = OverheadModel::tdma();
    // Overhead other than channel training, used by the training-length
    // bound; zero by default (training is the only modeled overhead).
    OverheadModel overhead_residual = OverheadModel::none();

    arma::mat link_snr; // K x K, linear; rho(k, l) = snr from tx l at rx k
    arma::vec tx_power; // K, linear; default all-ones
    double noise_power = 1.0;
    // Per-receiver noise covariances; empty means noise_power * identity.
    std::vector<arma::cx_mat> noise_cov;

    Placement placement;
    QualitySource quality_source = QualitySource::genie;
    std::uint64_t seed = 0;
    std::string id = "scenario";

    double snr(int rx_user, int tx_user) const { return link_snr(rx_user, tx_user); }
    // Fading coefficient with transmit power factored out, as needed by the
    // equal-error rate bound.
    double gamma(int rx_user, int tx_user) const {
        return link_snr(rx_user, tx_user) / tx_power(tx_user);
    }
    arma::cx_mat noise_covariance(int rx_user) const;

    void validate() const;
};

// rho(k, l) = reference_snr * (reference_distance / distance(k, l))^eta.
// Throws std::invalid_argument on coincident transmitter/receiver positions.
arma::mat link_snr_from_positions(const arma::mat& tx, const arma::mat& rx,
                                  double path_loss_exponent, double reference_snr,
                                  double reference_distance);

// Fully connected network with identical linear SNR on every link.
Scenario make_symmetric_scenario(int users, int tx_antennas, int rx_antennas,
                                 double frame_len, double snr_db, std::uint64_t seed);

// Copy with a different frame length (used by data-fraction sweeps, which
// vary T while keeping the overhead models fixed).
Scenario with_frame_len(const Scenario& base, double frame_len);

// Copy with receivers re-dropped uniformly in a disk of placement.drop_radius
// around their own transmitter, and link SNRs re-derived from the geometry.
Scenario with_dropped_receivers(const Scenario& base, std::uint64_t seed);

// Parse a scenario from its JSON text / load one from a file. Schema is
// documented in the repository README.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

} // namespace iapart

#endif
