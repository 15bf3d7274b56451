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

#ifndef IAPART_RNG_HPP
#define IAPART_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace iapart {

// Derives an independent substream seed from a base seed and up to three
// tags (splitmix64 mixing). Operations that need several independent random
// streams from one user-facing seed route everything through this, so the
// draw order of one stream never disturbs another.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a = 0, std::uint64_t b = 0,
                       std::uint64_t c = 0);

// Substream tags used across the library. Kept in one place so two call
// sites can never collide on the same derived stream by accident.
enum : std::uint64_t {
    kSeedChannels = 0x11,
    kSeedStreams = 0x22,
    kSeedIaInit = 0x33,
    kSeedTrial = 0x44,
    kSeedTrainingDraw = 0x55,
    kSeedOrthonormal = 0x66,
    kSeedDrop = 0x77,
};

// Deterministic random source: mt19937_64 driven, with the normal transform
// implemented here (Marsaglia polar) instead of std::normal_distribution so
// the value sequence is pinned by this code rather than by the standard
// library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

    // uniform integer in {0, ..., n-1}, unbiased
    int uniform_int(int n);

    double standard_normal();

    // CN(0,1): real and imaginary parts each N(0, 1/2); real part drawn first
    std::complex<double> standard_complex_normal();

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace iapart

#endif
