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

#include "iapart.h"

#include <cstdlib>
#include <cstring>
#include <ios>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "channels.hpp"
#include "exhaustive.hpp"
#include "experiments.hpp"
#include "greedy.hpp"
#include "partition.hpp"
#include "precoders.hpp"
#include "rate_engine.hpp"
#include "scenario.hpp"
#include "selection.hpp"
#include "streams.hpp"

struct iapart_scenario {
    iapart::Scenario value;
};
struct iapart_realization {
    iapart::ChannelRealization value;
};
struct iapart_partition {
    iapart::Partition value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message != nullptr ? message : ""; }

// Runs the body and folds any escaping exception into a status code.
template <typename Fn>
iapart_status guarded(Fn&& body) noexcept {
    try {
        g_last_error.clear();
        body();
        return IAPART_OK;
    } catch (const nlohmann::json::exception& e) {
        set_error(e.what());
        return IAPART_PARSE;
    } catch (const std::ios_base::failure& e) {
        set_error(e.what());
        return IAPART_IO;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return IAPART_INFEASIBLE;
    } catch (const std::length_error& e) {
        set_error(e.what());
        return IAPART_TOO_LARGE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return IAPART_EINVAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return IAPART_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return IAPART_INTERNAL;
    }
}

iapart_status fail_einval(const char* message) noexcept {
    set_error(message);
    return IAPART_EINVAL;
}

char* copy_to_c_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* iapart_version(void) { return "0.1.0"; }

const char* iapart_status_name(iapart_status status) {
    switch (status) {
    case IAPART_OK: return "ok";
    case IAPART_EINVAL: return "invalid argument";
    case IAPART_PARSE: return "parse error";
    case IAPART_IO: return "i/o error";
    case IAPART_INFEASIBLE: return "infeasible";
    case IAPART_TOO_LARGE: return "too large";
    case IAPART_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* iapart_last_error(void) { return g_last_error.c_str(); }

void iapart_string_free(char* text) { std::free(text); }

iapart_status iapart_scenario_parse(const char* json_text, iapart_scenario** out) {
    if (json_text == nullptr || out == nullptr) {
        return fail_einval("iapart_scenario_parse: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = new iapart_scenario{iapart::parse_scenario(json_text)};
        *out = handle;
    });
}

iapart_status iapart_scenario_load(const char* path, iapart_scenario** out) {
    if (path == nullptr || out == nullptr) {
        return fail_einval("iapart_scenario_load: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = new iapart_scenario{iapart::load_scenario(path)};
        *out = handle;
    });
}

iapart_status iapart_scenario_symmetric(int users, int tx_antennas, int rx_antennas,
                                        double frame_len, double snr_db, uint64_t seed,
                                        iapart_scenario** out) {
    if (out == nullptr) return fail_einval("iapart_scenario_symmetric: null output");
    *out = nullptr;
    return guarded([&] {
        auto handle = new iapart_scenario{iapart::make_symmetric_scenario(
            users, tx_antennas, rx_antennas, frame_len, snr_db, seed)};
        *out = handle;
    });
}

iapart_status iapart_scenario_users(const iapart_scenario* scenario, int* users) {
    if (scenario == nullptr || users == nullptr) {
        return fail_einval("iapart_scenario_users: null argument");
    }
    *users = scenario->value.users;
    return IAPART_OK;
}

void iapart_scenario_free(iapart_scenario* scenario) { delete scenario; }

iapart_status iapart_channels_generate(const iapart_scenario* scenario, uint64_t seed,
                                       iapart_realization** out) {
    if (scenario == nullptr || out == nullptr) {
        return fail_einval("iapart_channels_generate: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = new iapart_realization{iapart::generate_channels(scenario->value, seed)};
        *out = handle;
    });
}

void iapart_realization_free(iapart_realization* realization) { delete realization; }

iapart_status iapart_greedy_partition(const iapart_realization* realization,
                                      const char* method, int forced_groups,
                                      iapart_partition** out) {
    if (realization == nullptr || method == nullptr || out == nullptr) {
        return fail_einval("iapart_greedy_partition: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        iapart::GreedyOptions options;
        options.forced_groups = forced_groups;
        const std::string name = method;
        iapart::Partition part;
        if (name == "balanced") {
            part = iapart::greedy_balanced(realization->value.scenario,
                                           iapart::channel_qualities(realization->value),
                                           options);
        } else if (name == "rate_fair") {
            part = iapart::greedy_rate_fair(realization->value.scenario,
                                            iapart::channel_qualities(realization->value),
                                            options);
        } else if (name == "geo_separate") {
            part = iapart::greedy_geographic(realization->value.scenario,
                                             iapart::GeoVariant::separate, options);
        } else if (name == "geo_cluster") {
            part = iapart::greedy_geographic(realization->value.scenario,
                                             iapart::GeoVariant::cluster, options);
        } else {
            throw std::invalid_argument(
                "iapart_greedy_partition: method must be balanced, rate_fair, "
                "geo_separate, or geo_cluster");
        }
        *out = new iapart_partition{std::move(part)};
    });
}

iapart_status iapart_exhaustive_partition(const iapart_realization* realization,
                                          uint64_t design_seed, iapart_partition** out) {
    if (realization == nullptr || out == nullptr) {
        return fail_einval("iapart_exhaustive_partition: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        iapart::ExhaustiveResult best =
            iapart::exhaustive_best(realization->value, iapart::IaOptions{}, design_seed);
        *out = new iapart_partition{std::move(best.partition)};
    });
}

iapart_status iapart_partition_group_count(const iapart_partition* partition, int* groups) {
    if (partition == nullptr || groups == nullptr) {
        return fail_einval("iapart_partition_group_count: null argument");
    }
    *groups = partition->value.group_count();
    return IAPART_OK;
}

iapart_status iapart_partition_to_string(const iapart_partition* partition, char* buffer,
                                         size_t capacity, size_t* required) {
    if (partition == nullptr) {
        return fail_einval("iapart_partition_to_string: null partition");
    }
    return guarded([&] {
        const std::string text = partition->value.to_string();
        if (required != nullptr) *required = text.size();
        if (buffer == nullptr && capacity == 0) return; // size query only
        if (buffer == nullptr) {
            throw std::invalid_argument("iapart_partition_to_string: null buffer");
        }
        if (capacity < text.size() + 1) {
            throw std::invalid_argument("iapart_partition_to_string: buffer too small");
        }
        std::memcpy(buffer, text.c_str(), text.size() + 1);
    });
}

void iapart_partition_free(iapart_partition* partition) { delete partition; }

iapart_status iapart_sum_rate(const iapart_realization* realization,
                              const iapart_partition* partition, uint64_t design_seed,
                              double* total) {
    if (realization == nullptr || partition == nullptr || total == nullptr) {
        return fail_einval("iapart_sum_rate: null argument");
    }
    *total = 0.0;
    return guarded([&] {
        std::vector<iapart::PrecoderSet> designs;
        designs.reserve(partition->value.groups.size());
        for (std::size_t p = 0; p < partition->value.groups.size(); ++p) {
            designs.push_back(iapart::design_group_precoders(
                realization->value, partition->value.groups[p], partition->value.tags[p],
                iapart::IaOptions{}, design_seed));
        }
        *total =
            iapart::partitioned_sum_rate(realization->value, partition->value, designs).total;
    });
}

iapart_status iapart_choose_group_count(const iapart_scenario* scenario,
                                        int* users_per_group, int* groups) {
    if (scenario == nullptr || users_per_group == nullptr || groups == nullptr) {
        return fail_einval("iapart_choose_group_count: null argument");
    }
    return guarded([&] {
        const iapart::GroupCount chosen = iapart::choose_group_count(scenario->value);
        *users_per_group = chosen.users_per_group;
        *groups = chosen.groups;
    });
}

iapart_status iapart_dof(int users, int tx_antennas, int rx_antennas, int* total) {
    if (total == nullptr) return fail_einval("iapart_dof: null output");
    return guarded([&] { *total = iapart::dof(users, tx_antennas, rx_antennas); });
}

iapart_status iapart_run_experiment(const iapart_scenario* scenario, const char* kind,
                                    const char* grid, const uint64_t* seed,
                                    const int* trials, const char* out_path, char** csv,
                                    int* rows) {
    if (scenario == nullptr || kind == nullptr) {
        return fail_einval("iapart_run_experiment: null argument");
    }
    if (csv != nullptr) *csv = nullptr;
    if (rows != nullptr) *rows = 0;
    return guarded([&] {
        iapart::RunOptions options;
        if (grid != nullptr) {
            options.grid_set = true;
            options.grid = iapart::parse_grid(grid);
        }
        if (seed != nullptr) {
            options.seed_set = true;
            options.seed = *seed;
        }
        if (trials != nullptr) {
            options.trials_set = true;
            options.trials = *trials;
        }
        if (out_path != nullptr) options.out_path = out_path;
        iapart::ExperimentResult result = iapart::run_experiment(
            iapart::parse_experiment_kind(kind), scenario->value, options);
        if (rows != nullptr) *rows = result.rows;
        if (csv != nullptr) *csv = copy_to_c_string(result.csv);
    });
}

} // extern "C"
