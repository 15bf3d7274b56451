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

#include "overhead.hpp"

#include <algorithm>
#include <stdexcept>

namespace iapart {

double OverheadModel::symbols(int users) const {
    if (users < 0) {
        throw std::invalid_argument("overhead: users must be nonnegative");
    }
    const double k = static_cast<double>(users);
    return antenna_scale * (c0 + c1 * k + c2 * k * k);
}

void OverheadModel::validate() const {
    if (c0 < 0.0 || c1 < 0.0 || c2 < 0.0) {
        throw std::invalid_argument("overhead: coefficients must be nonnegative");
    }
    if (antenna_scale <= 0.0) {
        throw std::invalid_argument("overhead: antenna_scale must be positive");
    }
}

double overhead_fraction(const OverheadModel& model, int users, double frame_len) {
    if (frame_len <= 0.0) {
        throw std::invalid_argument("overhead: frame length must be positive");
    }
    return std::min(model.symbols(users) / frame_len, 1.0);
}

} // namespace iapart
