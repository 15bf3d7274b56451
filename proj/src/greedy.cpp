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

#include "greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "selection.hpp"

namespace iapart {

namespace {

struct Setup {
    int users_per_group;
    int groups;
};

Setup resolve_group_count(const Scenario& scenario, const GreedyOptions& options) {
    scenario.validate();
    if (options.forced_groups < 0 || options.forced_groups > scenario.users) {
        throw std::invalid_argument("greedy: forced_groups must lie in [1, users]");
    }
    if (options.forced_groups > 0) {
        const int p = options.forced_groups;
        return {(scenario.users + p - 1) / p, p};
    }
    const GroupCount gc = choose_group_count(scenario);
    return {gc.users_per_group, gc.groups};
}

void check_qualities(const Scenario& scenario, const arma::vec& qualities) {
    if (static_cast<int>(qualities.n_elem) != scenario.users) {
        throw std::invalid_argument("greedy: one quality per user required");
    }
    if (qualities.min() < 0.0) {
        throw std::invalid_argument("greedy: qualities must be nonnegative");
    }
}

// Spread users that no longer fit any budget: lowest user first, onto the
// smallest group (lowest index on ties).
void assign_leftovers(std::vector<std::vector<int>>& groups, std::vector<int>& unassigned) {
    for (int user : unassigned) {
        std::size_t target = 0;
        for (std::size_t p = 1; p < groups.size(); ++p) {
            if (groups[p].size() < groups[target].size()) target = p;
        }
        groups[target].push_back(user);
    }
    unassigned.clear();
}

double candidate_score(const Scenario& scenario, const arma::vec& qualities, int user,
                       int group_index, int group_size, int group_count,
                       const GreedyOptions& options) {
    if (options.eval_counter != nullptr) ++*options.eval_counter;
    const int streams = selection_streams(group_size + 1, scenario.tx_antennas,
                                          scenario.rx_antennas);
    return approx_rate(user, group_index, group_size, group_count, scenario,
                       qualities(static_cast<arma::uword>(user)), streams)
        .score;
}

} // namespace

Partition greedy_balanced(const Scenario& scenario, const arma::vec& qualities,
                          const GreedyOptions& options) {
    const Setup setup = resolve_group_count(scenario, options);
    check_qualities(scenario, qualities);

    std::vector<std::vector<int>> groups(static_cast<std::size_t>(setup.groups));
    std::vector<int> unassigned(static_cast<std::size_t>(scenario.users));
    for (int i = 0; i < scenario.users; ++i) unassigned[static_cast<std::size_t>(i)] = i;

    while (!unassigned.empty()) {
        double best_score = 0.0;
        int best_user = -1;
        std::size_t best_group = 0;
        for (int user : unassigned) {
            for (std::size_t p = 0; p < groups.size(); ++p) {
                const double score =
                    candidate_score(scenario, qualities, user, static_cast<int>(p),
                                    static_cast<int>(groups[p].size()), setup.groups, options);
                if (score > best_score) {
                    best_score = score;
                    best_user = user;
                    best_group = p;
                }
            }
        }
        if (best_user < 0) break; // nothing has value; place the rest by size
        groups[best_group].push_back(best_user);
        unassigned.erase(std::find(unassigned.begin(), unassigned.end(), best_user));
    }
    assign_leftovers(groups, unassigned);
    return Partition::of_groups(std::move(groups));
}

Partition greedy_rate_fair(const Scenario& scenario, const arma::vec& qualities,
                           const GreedyOptions& options) {
    const Setup setup = resolve_group_count(scenario, options);
    check_qualities(scenario, qualities);

    std::vector<std::vector<int>> groups(static_cast<std::size_t>(setup.groups));
    std::vector<double> est_sums(static_cast<std::size_t>(setup.groups), 0.0);
    std::vector<int> unassigned(static_cast<std::size_t>(scenario.users));
    for (int i = 0; i < scenario.users; ++i) unassigned[static_cast<std::size_t>(i)] = i;

    std::vector<double> hypothetical(est_sums.size());
    while (!unassigned.empty()) {
        double best_disp = std::numeric_limits<double>::infinity();
        double best_score = -1.0;
        double round_max_score = 0.0;
        int best_user = -1;
        std::size_t best_group = 0;
        for (int user : unassigned) {
            for (std::size_t p = 0; p < groups.size(); ++p) {
                const double score =
                    candidate_score(scenario, qualities, user, static_cast<int>(p),
                                    static_cast<int>(groups[p].size()), setup.groups, options);
                round_max_score = std::max(round_max_score, score);
                hypothetical = est_sums;
                hypothetical[p] += score;
                const double disp = disparity(hypothetical);
                if (disp < best_disp) {
                    best_disp = disp;
                    best_score = score;
                    best_user = user;
                    best_group = p;
                }
            }
        }
        if (round_max_score == 0.0) break; // no assignment carries any value
        groups[best_group].push_back(best_user);
        est_sums[best_group] += best_score;
        unassigned.erase(std::find(unassigned.begin(), unassigned.end(), best_user));
    }
    assign_leftovers(groups, unassigned);
    return Partition::of_groups(std::move(groups));
}

double geo_distance(int user, const std::vector<int>& group_members,
                    const Scenario& scenario) {
    if (!scenario.placement.present()) {
        throw std::invalid_argument("geo_distance: scenario has no positions");
    }
    if (user < 0 || user >= scenario.users) {
        throw std::invalid_argument("geo_distance: user out of range");
    }
    if (group_members.empty()) return scenario.placement.empty_group_distance;
    double best = std::numeric_limits<double>::infinity();
    for (int member : group_members) {
        const double d = arma::norm(scenario.placement.rx.col(static_cast<arma::uword>(user)) -
                                    scenario.placement.tx.col(static_cast<arma::uword>(member)));
        best = std::min(best, d);
    }
    return best;
}

Partition greedy_geographic(const Scenario& scenario, GeoVariant variant,
                            const GreedyOptions& options) {
    const Setup setup = resolve_group_count(scenario, options);
    if (!scenario.placement.present()) {
        throw std::invalid_argument("greedy_geographic: scenario has no positions");
    }

    std::vector<std::vector<int>> groups(static_cast<std::size_t>(setup.groups));
    std::vector<int> unassigned(static_cast<std::size_t>(scenario.users));
    for (int i = 0; i < scenario.users; ++i) unassigned[static_cast<std::size_t>(i)] = i;

    const auto metric = [&](int user, const std::vector<int>& members) {
        if (options.eval_counter != nullptr) ++*options.eval_counter;
        if (members.empty()) return scenario.placement.empty_group_distance;
        double agg = variant == GeoVariant::separate
                         ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
        for (int member : members) {
            const double d =
                arma::norm(scenario.placement.rx.col(static_cast<arma::uword>(user)) -
                           scenario.placement.tx.col(static_cast<arma::uword>(member)));
            agg = variant == GeoVariant::separate ? std::min(agg, d) : std::max(agg, d);
        }
        return agg;
    };

    while (!unassigned.empty()) {
        bool found = false;
        double best_metric = 0.0;
        int best_user = -1;
        std::size_t best_group = 0;
        for (int user : unassigned) {
            for (std::size_t p = 0; p < groups.size(); ++p) {
                if (static_cast<int>(groups[p].size()) >= setup.users_per_group) continue;
                const double m = metric(user, groups[p]);
                const bool better = variant == GeoVariant::separate ? m > best_metric
                                                                    : m < best_metric;
                if (!found || better) {
                    found = true;
                    best_metric = m;
                    best_user = user;
                    best_group = p;
                }
            }
        }
        if (!found) break; // cannot happen: groups * cap covers all users
        groups[best_group].push_back(best_user);
        unassigned.erase(std::find(unassigned.begin(), unassigned.end(), best_user));
    }
    assign_leftovers(groups, unassigned);

    Partition part = Partition::of_groups(std::move(groups));
    if (variant == GeoVariant::separate) {
        // Far-apart users share the slot without coordinating, so overhead
        // is per-link (linear) and interference is treated as noise.
        for (auto& tag : part.tags) tag = GroupTag::single_user;
    }
    return part;
}

} // namespace iapart
