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

#ifndef IAPART_TIME_ALLOCATION_HPP
#define IAPART_TIME_ALLOCATION_HPP

#include <armadillo>

namespace iapart {

// Time shares making every group's net rate equal: solves the square system
//   sum_p mu_p = 1,
//   R_p * mu_p - R* = alpha_p * R_p   for every group p,
// so each group's net rate (mu_p - alpha_p) * R_p equals the common R*.
// alpha_p is the group's overhead fraction L(K_p) / T. A solution with some
// mu_p < 0 is reported with feasible = false rather than projected.
struct TimeAllocation {
    arma::vec shares;      // mu, length P
    double common_rate;    // R*
    bool feasible;         // all shares nonnegative
};

TimeAllocation allocate_time(const arma::vec& group_rates, const arma::vec& overhead_fractions);

} // namespace iapart

#endif
