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

// Command-line front end: each subcommand runs one batch experiment on a
// JSON scenario and emits a CSV table (stdout, or --out <file>). Talks to
// the library exclusively through the public C interface.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iapart.h"

namespace {

struct Args {
    std::string config;
    std::string grid;
    std::string out;
    std::uint64_t seed = 0;
    int trials = 0;
    bool seed_set = false;
    bool trials_set = false;
    bool grid_set = false;
    bool out_set = false;
};

int run_kind(const std::string& kind, const Args& args) {
    iapart_scenario* scenario = nullptr;
    iapart_status status = iapart_scenario_load(args.config.c_str(), &scenario);
    if (status != IAPART_OK) {
        std::fprintf(stderr, "iapart: %s: %s\n", iapart_status_name(status),
                     iapart_last_error());
        return static_cast<int>(status);
    }

    char* csv = nullptr;
    int rows = 0;
    const std::uint64_t* seed = args.seed_set ? &args.seed : nullptr;
    const int* trials = args.trials_set ? &args.trials : nullptr;
    status = iapart_run_experiment(scenario, kind.c_str(),
                                   args.grid_set ? args.grid.c_str() : nullptr, seed, trials,
                                   args.out_set ? args.out.c_str() : nullptr,
                                   args.out_set ? nullptr : &csv, &rows);
    if (status != IAPART_OK) {
        std::fprintf(stderr, "iapart: %s: %s\n", iapart_status_name(status),
                     iapart_last_error());
        iapart_scenario_free(scenario);
        return static_cast<int>(status);
    }

    if (args.out_set) {
        std::printf("wrote %d rows to %s\n", rows, args.out.c_str());
    } else if (csv != nullptr) {
        std::fputs(csv, stdout);
    }
    iapart_string_free(csv);
    iapart_scenario_free(scenario);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"overhead-aware user partitioning experiments for MIMO interference "
                 "channels"};
    app.set_version_flag("--version", std::string(iapart_version()));
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> kinds = {
        {"sweep-alpha",
         "sum rate vs data fraction for aligned, time-division, greedy, and (small "
         "networks) exhaustive strategies"},
        {"sweep-groups", "sum rate vs forced group count at each data fraction"},
        {"greedy-compare", "greedy variants (balanced, rate-fair, geographic) compared"},
        {"geo", "geographic grouping vs greedy, aligned, and time-division strategies"},
        {"train-opt", "training-length sweep of the estimated-CSI rate bound"},
        {"oracle", "exhaustive-search partition vs greedy, with their rate ratio"},
    };

    Args args;
    std::vector<CLI::App*> subs;
    for (const auto& [name, description] : kinds) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--config", args.config, "scenario JSON file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--seed", args.seed, "base seed (default: scenario seed)");
        sub->add_option("--trials", args.trials, "channel realizations per grid point")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", args.out, "write the CSV here instead of stdout");
        sub->add_option("--grid", args.grid,
                        "sweep grid start:stop:step (data fraction, or training symbols "
                        "for train-opt)");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            args.seed_set = subs[i]->count("--seed") > 0;
            args.trials_set = subs[i]->count("--trials") > 0;
            args.grid_set = subs[i]->count("--grid") > 0;
            args.out_set = subs[i]->count("--out") > 0;
            return run_kind(kinds[i].first, args);
        }
    }
    return 0;
}
