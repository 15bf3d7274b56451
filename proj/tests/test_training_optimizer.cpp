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

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "partition.hpp"
#include "scenario.hpp"
#include "training_bound.hpp"
#include "training_optimizer.hpp"

using namespace iapart;

TEST_CASE("the sweep scans the requested grid and reports the argmax") {
    const Scenario sc = make_symmetric_scenario(4, 3, 3, 200.0, 10.0, 0x71);
    const Partition part = Partition::whole_network(4);
    const std::vector<std::vector<int>> streams{{1, 1, 1, 1}};

    const TrainingOptResult result = optimize_training(sc, part, streams, 4.0, 40.0, 4.0,
                                                       60, 9);
    REQUIRE(result.per_group.size() == 1);
    const TrainingSweep& sweep = result.per_group[0];
    REQUIRE(sweep.grid.size() == 10); // 4, 8, ..., 40
    CHECK(sweep.grid.front() == doctest::Approx(4.0));
    CHECK(sweep.grid.back() == doctest::Approx(40.0));
    REQUIRE(sweep.means.size() == sweep.grid.size());
    REQUIRE(sweep.stderrs.size() == sweep.grid.size());

    double best = -1.0;
    double best_tau = 0.0;
    for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
        if (sweep.means[i] > best) {
            best = sweep.means[i];
            best_tau = sweep.grid[i];
        }
    }
    CHECK(sweep.best_value == doctest::Approx(best));
    CHECK(sweep.best_tau == doctest::Approx(best_tau));
    CHECK(result.total_best == doctest::Approx(best));
    CHECK(result.trials == 60);
    CHECK(result.seed == 9);

    // Every grid point matches the standalone bound under the same seed.
    for (std::size_t i = 0; i < sweep.grid.size(); ++i) {
        const GroupTrainingBound gb = group_training_bound(
            sc, part.groups[0], streams[0], part.time_shares[0], sweep.grid[i], 60, 9);
        CHECK(sweep.means[i] == doctest::Approx(gb.rate.rate).epsilon(1e-12));
    }
}

TEST_CASE("the sweep is reproducible and the grid end survives rounding") {
    const Scenario sc = make_symmetric_scenario(2, 2, 2, 100.0, 10.0, 0x72);
    const Partition part = Partition::whole_network(2);
    const std::vector<std::vector<int>> streams{{1, 1}};

    const TrainingOptResult a = optimize_training(sc, part, streams, 2.0, 3.0, 0.5, 40, 4);
    const TrainingOptResult b = optimize_training(sc, part, streams, 2.0, 3.0, 0.5, 40, 4);
    REQUIRE(a.per_group.size() == 1);
    CHECK(a.per_group[0].grid == std::vector<double>{2.0, 2.5, 3.0});
    CHECK(a.per_group[0].means == b.per_group[0].means);
    CHECK(a.per_group[0].best_tau == b.per_group[0].best_tau);

    // A grid whose step does not hit the endpoint exactly still includes it.
    const TrainingOptResult c = optimize_training(sc, part, streams, 0.0, 1.0, 0.1, 4, 4);
    CHECK(c.per_group[0].grid.size() == 11);
    CHECK(c.per_group[0].grid.back() == doctest::Approx(1.0));
}

TEST_CASE("multi-group sweeps add their best values") {
    const Scenario sc = make_symmetric_scenario(4, 2, 2, 300.0, 10.0, 0x73);
    const Partition part = Partition::of_groups({{0, 1}, {2, 3}});
    const std::vector<std::vector<int>> streams{{1, 1}, {1, 1}};

    const TrainingOptResult result =
        optimize_training(sc, part, streams, 2.0, 20.0, 2.0, 30, 5);
    REQUIRE(result.per_group.size() == 2);
    CHECK(result.total_best == doctest::Approx(result.per_group[0].best_value +
                                               result.per_group[1].best_value));
}

TEST_CASE("a grid that cannot fit in the time slot is rejected") {
    const Scenario sc = make_symmetric_scenario(2, 2, 2, 10.0, 10.0, 0x74);
    const Partition part = Partition::whole_network(2);
    const std::vector<std::vector<int>> streams{{1, 1}};
    CHECK_THROWS_AS(optimize_training(sc, part, streams, 20.0, 30.0, 5.0, 10, 1),
                    std::domain_error);
    // The same grid under a longer frame is fine.
    CHECK_NOTHROW(optimize_training(with_frame_len(sc, 1000.0), part, streams, 20.0, 30.0,
                                    5.0, 10, 1));
}

TEST_CASE("sweep inputs are validated") {
    const Scenario sc = make_symmetric_scenario(2, 2, 2, 100.0, 10.0, 0x75);
    const Partition part = Partition::whole_network(2);
    const std::vector<std::vector<int>> streams{{1, 1}};

    CHECK_THROWS_AS(optimize_training(sc, part, {{1, 1}, {1}}, 2.0, 10.0, 2.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(optimize_training(sc, part, streams, -1.0, 10.0, 2.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(optimize_training(sc, part, streams, 2.0, 1.0, 2.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(optimize_training(sc, part, streams, 2.0, 10.0, 0.0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(optimize_training(sc, part, streams, 2.0, 10.0, 2.0, 0, 1),
                    std::invalid_argument);
}
