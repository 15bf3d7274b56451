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

#include "time_allocation.hpp"

#include <cmath>
#include <stdexcept>

namespace iapart {

TimeAllocation allocate_time(const arma::vec& group_rates,
                             const arma::vec& overhead_fractions) {
    const arma::uword p = group_rates.n_elem;
    if (p < 1 || overhead_fractions.n_elem != p) {
        throw std::invalid_argument("allocate_time: rates and overheads must align");
    }
    if (group_rates.min() <= 0.0) {
        throw std::invalid_argument("allocate_time: group rates must be positive");
    }
    if (overhead_fractions.min() < 0.0 || overhead_fractions.max() >= 1.0) {
        throw std::invalid_argument("allocate_time: overhead fractions must lie in [0, 1)");
    }

    // Unknowns (mu_1, .., mu_P, R*); first row is the budget constraint,
    // row p+1 enforces group p's equal-rate condition.
    arma::mat a(p + 1, p + 1, arma::fill::zeros);
    arma::vec b(p + 1, arma::fill::zeros);
    a.row(0).head(p).ones();
    b(0) = 1.0;
    for (arma::uword i = 0; i < p; ++i) {
        a(i + 1, i) = group_rates(i);
        a(i + 1, p) = -1.0;
        b(i + 1) = overhead_fractions(i) * group_rates(i);
    }
    arma::vec x;
    if (!arma::solve(x, a, b)) {
        throw std::runtime_error("allocate_time: singular system");
    }

    TimeAllocation out;
    out.shares = x.head(p);
    out.common_rate = x(p);
    out.feasible = out.shares.min() >= -1e-12;
    for (arma::uword i = 0; i < p; ++i) {
        const double net = (out.shares(i) - overhead_fractions(i)) * group_rates(i);
        if (std::abs(net - out.common_rate) > 1e-9) {
            throw std::runtime_error("allocate_time: residual above tolerance");
        }
    }
    return out;
}

} // namespace iapart
