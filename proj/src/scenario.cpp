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

#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rng.hpp"

namespace iapart {

namespace {

using nlohmann::json;

OverheadModel parse_overhead(const json& j) {
    OverheadModel m = OverheadModel::none();
    m.c0 = j.value("c0", 0.0);
    m.c1 = j.value("c1", 0.0);
    m.c2 = j.value("c2", 0.0);
    m.antenna_scale = j.value("antenna_scale", 1.0);
    m.validate();
    return m;
}

arma::mat parse_positions(const json& j, const char* key, int users) {
    const json& arr = j.at(key);
    if (!arr.is_array() || static_cast<int>(arr.size()) != users) {
        throw std::invalid_argument(std::string("scenario: positions.") + key +
                                    " must list one [x, y] pair per user");
    }
    arma::mat out(2, users);
    for (int i = 0; i < users; ++i) {
        const json& pt = arr.at(i);
        if (!pt.is_array() || pt.size() != 2) {
            throw std::invalid_argument(std::string("scenario: positions.") + key +
                                        " entries must be [x, y] pairs");
        }
        out(0, i) = pt.at(0).get<double>();
        out(1, i) = pt.at(1).get<double>();
    }
    return out;
}

} // namespace

arma::cx_mat Scenario::noise_covariance(int rx_user) const {
    if (!noise_cov.empty()) {
        return noise_cov.at(static_cast<std::size_t>(rx_user));
    }
    return noise_power * arma::cx_mat(arma::eye<arma::mat>(rx_antennas, rx_antennas),
                                      arma::mat(rx_antennas, rx_antennas, arma::fill::zeros));
}

void Scenario::validate() const {
    if (users < 1) throw std::invalid_argument("scenario: users must be >= 1");
    if (tx_antennas < 1 || rx_antennas < 1) {
        throw std::invalid_argument("scenario: antenna counts must be >= 1");
    }
    if (frame_len < 1.0) throw std::invalid_argument("scenario: frame_len must be >= 1");
    overhead_ia.validate();
    overhead_tdma.validate();
    overhead_residual.validate();
    const auto k = static_cast<arma::uword>(users);
    if (link_snr.n_rows != k || link_snr.n_cols != k) {
        throw std::invalid_argument("scenario: link_snr must be users x users");
    }
    if (link_snr.min() < 0.0) {
        throw std::invalid_argument("scenario: link SNRs must be nonnegative");
    }
    if (tx_power.n_elem != k) {
        throw std::invalid_argument("scenario: tx_power must have one entry per user");
    }
    if (tx_power.min() <= 0.0) {
        throw std::invalid_argument("scenario: transmit powers must be positive");
    }
    if (noise_power <= 0.0) {
        throw std::invalid_argument("scenario: noise_power must be positive");
    }
    if (!noise_cov.empty()) {
        if (static_cast<int>(noise_cov.size()) != users) {
            throw std::invalid_argument("scenario: noise_cov must have one matrix per user");
        }
        const auto nr = static_cast<arma::uword>(rx_antennas);
        for (const auto& r : noise_cov) {
            if (r.n_rows != nr || r.n_cols != nr) {
                throw std::invalid_argument("scenario: noise covariance has wrong shape");
            }
            if (arma::norm(r - r.t(), "fro") > 1e-10 * (1.0 + arma::norm(r, "fro"))) {
                throw std::invalid_argument("scenario: noise covariance must be Hermitian");
            }
            arma::vec ev = arma::eig_sym(arma::cx_mat(0.5 * (r + r.t())));
            if (ev.min() <= 0.0) {
                throw std::invalid_argument("scenario: noise covariance must be positive definite");
            }
        }
    }
    if (placement.present()) {
        if (placement.tx.n_rows != 2 || placement.rx.n_rows != 2 ||
            placement.tx.n_cols != k || placement.rx.n_cols != k) {
            throw std::invalid_argument("scenario: positions must be 2 x users");
        }
        if (placement.path_loss_exponent <= 0.0 || placement.reference_snr <= 0.0 ||
            placement.reference_distance <= 0.0 || placement.empty_group_distance <= 0.0 ||
            placement.drop_radius < 0.0) {
            throw std::invalid_argument("scenario: placement parameters must be positive");
        }
    }
}

arma::mat link_snr_from_positions(const arma::mat& tx, const arma::mat& rx,
                                  double path_loss_exponent, double reference_snr,
                                  double reference_distance) {
    if (tx.n_rows != 2 || rx.n_rows != 2 || tx.n_cols != rx.n_cols) {
        throw std::invalid_argument("link_snr_from_positions: positions must be 2 x K");
    }
    if (reference_snr <= 0.0 || reference_distance <= 0.0 || path_loss_exponent <= 0.0) {
        throw std::invalid_argument("link_snr_from_positions: parameters must be positive");
    }
    const arma::uword k = tx.n_cols;
    arma::mat snr(k, k);
    for (arma::uword r = 0; r < k; ++r) {
        for (arma::uword t = 0; t < k; ++t) {
            const double dist = arma::norm(rx.col(r) - tx.col(t));
            if (dist <= 0.0) {
                throw std::invalid_argument(
                    "link_snr_from_positions: coincident transmitter and receiver");
            }
            snr(r, t) = reference_snr * std::pow(reference_distance / dist, path_loss_exponent);
        }
    }
    return snr;
}

Scenario make_symmetric_scenario(int users, int tx_antennas, int rx_antennas,
                                 double frame_len, double snr_db, std::uint64_t seed) {
    Scenario s;
    s.users = users;
    s.tx_antennas = tx_antennas;
    s.rx_antennas = rx_antennas;
    s.frame_len = frame_len;
    const double rho = std::pow(10.0, snr_db / 10.0);
    s.link_snr = arma::mat(users, users, arma::fill::value(rho));
    s.tx_power = arma::vec(users, arma::fill::ones);
    s.seed = seed;
    s.validate();
    return s;
}

Scenario with_frame_len(const Scenario& base, double frame_len) {
    Scenario s = base;
    s.frame_len = frame_len;
    s.validate();
    return s;
}

Scenario with_dropped_receivers(const Scenario& base, std::uint64_t seed) {
    if (!base.placement.present()) {
        throw std::invalid_argument("with_dropped_receivers: scenario has no positions");
    }
    if (base.placement.drop_radius <= 0.0) {
        throw std::invalid_argument("with_dropped_receivers: drop_radius must be positive");
    }
    Scenario s = base;
    for (int k = 0; k < s.users; ++k) {
        Rng rng(mix_seed(seed, kSeedDrop, static_cast<std::uint64_t>(k), 0));
        // Uniform over the disk, rejecting the exact center so the path-loss
        // law stays defined.
        double x = 0.0;
        double y = 0.0;
        do {
            x = 2.0 * rng.uniform() - 1.0;
            y = 2.0 * rng.uniform() - 1.0;
        } while (x * x + y * y > 1.0 || (x == 0.0 && y == 0.0));
        s.placement.rx(0, k) = s.placement.tx(0, k) + base.placement.drop_radius * x;
        s.placement.rx(1, k) = s.placement.tx(1, k) + base.placement.drop_radius * y;
    }
    s.link_snr = link_snr_from_positions(s.placement.tx, s.placement.rx,
                                         s.placement.path_loss_exponent,
                                         s.placement.reference_snr,
                                         s.placement.reference_distance);
    s.validate();
    return s;
}

Scenario parse_scenario(const std::string& json_text) {
    const json j = json::parse(json_text);

    Scenario s;
    s.users = j.at("K").get<int>();
    s.tx_antennas = j.at("N_t").get<int>();
    s.rx_antennas = j.at("N_r").get<int>();
    s.frame_len = j.at("T").get<double>();
    s.id = j.value("id", std::string("scenario"));
    s.seed = j.value("seed", std::uint64_t{0});

    if (j.contains("overhead_ia")) s.overhead_ia = parse_overhead(j.at("overhead_ia"));
    if (j.contains("overhead_tdma")) s.overhead_tdma = parse_overhead(j.at("overhead_tdma"));
    if (j.contains("overhead_residual")) {
        s.overhead_residual = parse_overhead(j.at("overhead_residual"));
    }

    s.noise_power = j.value("noise_power", 1.0);

    if (j.contains("tx_power")) {
        const json& p = j.at("tx_power");
        if (p.is_number()) {
            s.tx_power = arma::vec(s.users, arma::fill::value(p.get<double>()));
        } else {
            if (static_cast<int>(p.size()) != s.users) {
                throw std::invalid_argument("scenario: tx_power must have one entry per user");
            }
            s.tx_power = arma::vec(s.users);
            for (int i = 0; i < s.users; ++i) s.tx_power(i) = p.at(i).get<double>();
        }
    } else {
        s.tx_power = arma::vec(s.users, arma::fill::ones);
    }

    const bool has_grid = j.contains("link_snr");
    const bool has_scalar = j.contains("snr_db");
    const bool has_positions = j.contains("positions");
    if (has_grid + has_scalar + has_positions != 1) {
        throw std::invalid_argument(
            "scenario: exactly one of link_snr, snr_db, positions is required");
    }
    if (has_scalar) {
        const double rho = std::pow(10.0, j.at("snr_db").get<double>() / 10.0);
        s.link_snr = arma::mat(s.users, s.users, arma::fill::value(rho));
    } else if (has_grid) {
        const json& g = j.at("link_snr");
        if (static_cast<int>(g.size()) != s.users) {
            throw std::invalid_argument("scenario: link_snr must be users x users");
        }
        s.link_snr = arma::mat(s.users, s.users);
        for (int r = 0; r < s.users; ++r) {
            const json& row = g.at(r);
            if (static_cast<int>(row.size()) != s.users) {
                throw std::invalid_argument("scenario: link_snr must be users x users");
            }
            for (int c = 0; c < s.users; ++c) s.link_snr(r, c) = row.at(c).get<double>();
        }
    } else {
        const json& pos = j.at("positions");
        s.placement.tx = parse_positions(pos, "tx", s.users);
        s.placement.rx = parse_positions(pos, "rx", s.users);
        s.placement.path_loss_exponent = pos.value("path_loss_exponent", 3.8);
        if (pos.contains("reference_snr_db")) {
            s.placement.reference_snr =
                std::pow(10.0, pos.at("reference_snr_db").get<double>() / 10.0);
        } else {
            s.placement.reference_snr = pos.value("reference_snr", 1.0);
        }
        s.placement.reference_distance = pos.value("reference_distance", 1.0);
        s.placement.empty_group_distance = pos.value("empty_group_distance", 1.0);
        s.placement.drop_radius = pos.value("drop_radius", 0.0);
        s.link_snr = link_snr_from_positions(s.placement.tx, s.placement.rx,
                                             s.placement.path_loss_exponent,
                                             s.placement.reference_snr,
                                             s.placement.reference_distance);
    }

    const std::string source = j.value("quality_source", std::string("genie"));
    if (source == "genie") {
        s.quality_source = QualitySource::genie;
    } else if (source == "previous_frame") {
        s.quality_source = QualitySource::previous_frame;
    } else {
        throw std::invalid_argument("scenario: quality_source must be genie or previous_frame");
    }

    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("scenario: cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Scenario s = parse_scenario(buf.str());
    return s;
}

} // namespace iapart
