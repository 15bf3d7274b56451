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

#ifndef IAPART_OVERHEAD_HPP
#define IAPART_OVERHEAD_HPP

namespace iapart {

// Overhead cost of setting up transmission for a group of K users, measured
// in channel symbols: L(K) = antenna_scale * (c0 + c1*K + c2*K^2).
//
// Time-division needs training per user (c1 = 1); interference alignment
// needs every cross link estimated and fed back (c2 = 1).
struct OverheadModel {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double antenna_scale = 1.0;

    double symbols(int users) const;

    static OverheadModel tdma() { return {0.0, 1.0, 0.0, 1.0}; }
    static OverheadModel ia() { return {0.0, 0.0, 1.0, 1.0}; }
    static OverheadModel none() { return {0.0, 0.0, 0.0, 1.0}; }

    void validate() const;
};

// Fraction of a frame of frame_len symbols consumed by overhead, saturating
// at 1 once the frame is too short to fit the overhead at all.
double overhead_fraction(const OverheadModel& model, int users, double frame_len);

} // namespace iapart

#endif
