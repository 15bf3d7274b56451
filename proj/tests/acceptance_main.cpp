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

// End-to-end acceptance checks for the library. Each check prints one
// PASS/FAIL line; the binary exits nonzero if any check fails. Tolerances
// are pinned here, next to the quantity they bound, so a regression cannot
// be hidden by loosening a shared constant.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <armadillo>

#include "channels.hpp"
#include "enumeration.hpp"
#include "exhaustive.hpp"
#include "greedy.hpp"
#include "linalg.hpp"
#include "overhead.hpp"
#include "partition.hpp"
#include "precoders.hpp"
#include "rate_engine.hpp"
#include "rng.hpp"
#include "scenario.hpp"
#include "selection.hpp"
#include "streams.hpp"
#include "time_allocation.hpp"
#include "training_bound.hpp"
#include "training_optimizer.hpp"

namespace {

using namespace iapart;

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%2d] %-58s %s%s%s\n", index, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

std::string str(const char* format, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c, d);
    return std::string(buf);
}

// Running mean / standard error of the mean.
struct Stat {
    double sum = 0.0;
    double sum_sq = 0.0;
    long n = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return n > 0 ? sum / double(n) : 0.0; }
    double se() const {
        if (n < 2) {
            return 0.0;
        }
        const double m = mean();
        const double var = std::max(0.0, (sum_sq - double(n) * m * m) / double(n - 1));
        return std::sqrt(var / double(n));
    }
};

// Frame length at which a whole-network aligned group retains the given
// data fraction; a full budget means an unbounded frame.
double frame_for(const Scenario& base, double alpha_bar) {
    if (alpha_bar >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return base.overhead_ia.symbols(base.users) / (1.0 - alpha_bar);
}

// ---------------------------------------------------------------------------
// 1. Alternating minimization drives cross-link leakage to zero on a
//    feasible configuration, and every restart's leakage trace is
//    nonincreasing.
// ---------------------------------------------------------------------------
bool check_alignment_convergence(std::string& detail) {
    const int kRealizations = 100;
    const double kLeakageTol = 1e-6; // residual interference over direct-link power
    const int kRequiredConverged = 95;
    const double kMonotoneSlack = 1e-10;

    const Scenario scenario = make_symmetric_scenario(3, 2, 2, 1000.0, 20.0, 0x41);
    StreamAllocation streams;
    streams.counts = {1, 1, 1};

    int converged = 0;
    int bad_traces = 0;
    for (int r = 0; r < kRealizations; ++r) {
        const std::uint64_t seed = mix_seed(scenario.seed, kSeedTrial, std::uint64_t(r), 0);
        const ChannelRealization realization = generate_channels(scenario, seed);
        const PrecoderSet set = iterative_ia(realization, {0, 1, 2}, streams, IaOptions{}, seed);
        // Feasibility: the minimizer found an aligned solution in one of its
        // restarts (the returned design is the best restart by rate, which
        // may deliberately trade a little leakage for throughput).
        const double lowest =
            *std::min_element(set.restart_leakages.begin(), set.restart_leakages.end());
        if (lowest < kLeakageTol) {
            ++converged;
        }
        for (const std::vector<double>& trace : set.leakage_traces) {
            for (std::size_t i = 1; i < trace.size(); ++i) {
                if (trace[i] > trace[i - 1] + kMonotoneSlack) {
                    ++bad_traces;
                    break;
                }
            }
        }
    }
    detail = str("%.0f/%.0f realizations below 1e-6; %.0f non-monotone traces",
                 double(converged), double(kRealizations), double(bad_traces));
    return converged >= kRequiredConverged && bad_traces == 0;
}

// ---------------------------------------------------------------------------
// 2. With a full data budget the aligned sum rate grows by one bit per
//    stream per 3 dB: three single-stream users gain ~3 bits per 3 dB.
// ---------------------------------------------------------------------------
bool check_snr_scaling(std::string& detail) {
    const int kRealizations = 200;
    const double kSlopeLo = 2.7; // bits per 3 dB, 3 streams total
    const double kSlopeHi = 3.3;

    const Scenario s20 = make_symmetric_scenario(3, 2, 2, 1000.0, 20.0, 0x42);
    const Scenario s30 = make_symmetric_scenario(3, 2, 2, 1000.0, 30.0, 0x42);
    StreamAllocation streams;
    streams.counts = {1, 1, 1};

    Stat r20;
    Stat r30;
    for (int r = 0; r < kRealizations; ++r) {
        const std::uint64_t seed = mix_seed(0x42, kSeedTrial, std::uint64_t(r), 0);
        // Same seed, same channel draws: only the link SNR differs.
        const ChannelRealization h20 = generate_channels(s20, seed);
        const ChannelRealization h30 = generate_channels(s30, seed);
        const PrecoderSet set20 = iterative_ia(h20, {0, 1, 2}, streams, IaOptions{}, seed);
        const PrecoderSet set30 = iterative_ia(h30, {0, 1, 2}, streams, IaOptions{}, seed);
        r20.add(sum_rate_perfect(h20, set20, 1.0).rate);
        r30.add(sum_rate_perfect(h30, set30, 1.0).rate);
    }
    const double slope = (r30.mean() - r20.mean()) * 3.0 / 10.0;
    detail = str("slope %.3f bits per 3 dB (want %.1f..%.1f)", slope, kSlopeLo, kSlopeHi);
    return slope >= kSlopeLo && slope <= kSlopeHi;
}

// ---------------------------------------------------------------------------
// Shared sweep for checks 3 and 4: three users, two antennas each side,
// 20 dB, data fraction swept on a fine grid with one design cache per
// channel realization so every strategy sees identical randomness.
// ---------------------------------------------------------------------------
struct SweepData {
    std::vector<double> grid;
    std::vector<double> ia;     // whole-network aligned group
    std::vector<double> tdma;   // one user per slot
    std::vector<double> greedy; // overhead-aware greedy
    std::vector<double> best;   // exhaustive search
    std::vector<std::string> modal;         // most common greedy partition per point
    double diff_full_mean = 0.0;            // exhaustive minus aligned at full budget
    double diff_full_se = 0.0;
    double diff_small_mean = 0.0;           // exhaustive minus per-slot at near-zero budget
    double diff_small_se = 0.0;
    bool dominates = true;                  // exhaustive >= every strategy, each point
    int trials = 0;
};

const SweepData& crossover_sweep() {
    static const SweepData data = [] {
        SweepData out;
        const int kTrials = 500;
        const std::uint64_t kSeed = 7;
        const double kSmallBudget = 0.02;

        const Scenario base = make_symmetric_scenario(3, 2, 2, 100.0, 20.0, kSeed);
        for (int i = 1; i <= 19; ++i) {
            out.grid.push_back(0.05 * i);
        }
        std::vector<Scenario> evals;
        evals.reserve(out.grid.size());
        for (double a : out.grid) {
            evals.push_back(with_frame_len(base, frame_for(base, a)));
        }
        const Scenario eval_full = with_frame_len(base, frame_for(base, 1.0));
        const Scenario eval_small = with_frame_len(base, frame_for(base, kSmallBudget));

        const Partition whole = Partition::whole_network(3);
        const Partition singles = Partition::singletons(3);

        const std::size_t points = out.grid.size();
        std::vector<Stat> s_ia(points), s_td(points), s_gr(points), s_ex(points);
        std::vector<std::map<std::string, int>> partitions(points);
        Stat d_full;
        Stat d_small;

        for (int trial = 0; trial < kTrials; ++trial) {
            const std::uint64_t seed = mix_seed(kSeed, kSeedTrial, std::uint64_t(trial), 0);
            const ChannelRealization realization = generate_channels(base, seed);
            GroupRateCache cache(realization, IaOptions{}, seed);
            const arma::vec qualities = channel_qualities(realization);

            for (std::size_t gi = 0; gi < points; ++gi) {
                const Scenario& eval = evals[gi];
                const double r_ia = cached_partition_rate(cache, whole, eval);
                const double r_td = cached_partition_rate(cache, singles, eval);
                const Partition part = greedy_balanced(eval, qualities);
                const double r_gr = cached_partition_rate(cache, part, eval);
                const double r_ex = exhaustive_best(cache, eval).report.total;
                s_ia[gi].add(r_ia);
                s_td[gi].add(r_td);
                s_gr[gi].add(r_gr);
                s_ex[gi].add(r_ex);
                partitions[gi][part.to_string()] += 1;
                if (r_ex < std::max(std::max(r_ia, r_td), r_gr) - 1e-9) {
                    out.dominates = false;
                }
            }
            const double ia_full = cached_partition_rate(cache, whole, eval_full);
            const double ex_full = exhaustive_best(cache, eval_full).report.total;
            const double td_small = cached_partition_rate(cache, singles, eval_small);
            const double ex_small = exhaustive_best(cache, eval_small).report.total;
            d_full.add(ex_full - ia_full);
            d_small.add(ex_small - td_small);
            if (ex_full < ia_full - 1e-9 || ex_small < td_small - 1e-9) {
                out.dominates = false;
            }
        }

        for (std::size_t gi = 0; gi < points; ++gi) {
            out.ia.push_back(s_ia[gi].mean());
            out.tdma.push_back(s_td[gi].mean());
            out.greedy.push_back(s_gr[gi].mean());
            out.best.push_back(s_ex[gi].mean());
            std::string top;
            int top_count = -1;
            for (const auto& [text, count] : partitions[gi]) {
                if (count > top_count) {
                    top = text;
                    top_count = count;
                }
            }
            out.modal.push_back(top);
        }
        out.diff_full_mean = d_full.mean();
        out.diff_full_se = d_full.se();
        out.diff_small_mean = d_small.mean();
        out.diff_small_se = d_small.se();
        out.trials = kTrials;
        return out;
    }();
    return data;
}

// ---------------------------------------------------------------------------
// 3. Orthogonal slots win small data budgets, alignment wins large ones
//    (one clean crossover), and the greedy stays within 5% of the better of
//    the two everywhere except a padded window around its partition switch
//    and the crossover itself -- the known weak spot of picking the group
//    count from the stream-count probe before seeing rates.
// ---------------------------------------------------------------------------
bool check_crossover_and_greedy(std::string& detail) {
    const double kEnvelope = 0.95;   // greedy vs better fixed strategy, outside the window
    const double kRegionPad = 0.10;  // padding around switch and crossover
    const double kSideMargin = 0.05; // strict ordering this far from the crossover

    const SweepData& d = crossover_sweep();
    const std::size_t n = d.grid.size();

    // One clean sign change of (per-slot minus aligned).
    int last_pos = -1;
    int first_neg = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = d.tdma[i] - d.ia[i];
        if (diff > 0.0) {
            last_pos = int(i);
        } else if (first_neg < 0) {
            first_neg = int(i);
        }
    }
    if (last_pos < 0 || first_neg != last_pos + 1) {
        detail = "no clean crossover between per-slot and aligned curves";
        return false;
    }
    const double d0 = d.tdma[last_pos] - d.ia[last_pos];
    const double d1 = d.tdma[first_neg] - d.ia[first_neg];
    const double alpha_star =
        d.grid[last_pos] + (d.grid[first_neg] - d.grid[last_pos]) * d0 / (d0 - d1);

    // Strict ordering away from the crossover.
    for (std::size_t i = 0; i < n; ++i) {
        if (d.grid[i] < alpha_star - kSideMargin && d.tdma[i] <= d.ia[i]) {
            detail = str("per-slot not ahead at %.2f", d.grid[i]);
            return false;
        }
        if (d.grid[i] > alpha_star + kSideMargin && d.ia[i] <= d.tdma[i]) {
            detail = str("aligned not ahead at %.2f", d.grid[i]);
            return false;
        }
    }

    // Greedy partition switch points (midpoints of modal changes).
    double switch_lo = alpha_star;
    double switch_hi = alpha_star;
    int switches = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d.modal[i] != d.modal[i + 1]) {
            const double mid = 0.5 * (d.grid[i] + d.grid[i + 1]);
            switch_lo = std::min(switch_lo, mid);
            switch_hi = std::max(switch_hi, mid);
            ++switches;
        }
    }
    if (switches == 0) {
        detail = "greedy never switched partitions across the sweep";
        return false;
    }

    const double lo = std::min(switch_lo, alpha_star) - kRegionPad;
    const double hi = std::max(switch_hi, alpha_star) + kRegionPad;
    for (std::size_t i = 0; i < n; ++i) {
        if (d.grid[i] >= lo && d.grid[i] <= hi) {
            continue;
        }
        const double target = kEnvelope * std::max(d.ia[i], d.tdma[i]);
        if (d.greedy[i] < target - 1e-12) {
            detail = str("greedy %.3f below %.3f at budget %.2f", d.greedy[i], target, d.grid[i]);
            return false;
        }
    }
    detail = str("crossover at %.3f, switch window [%.2f, %.2f] exempt", alpha_star, lo, hi);
    return true;
}

// ---------------------------------------------------------------------------
// 4. Exhaustive search dominates every strategy pointwise (it maximizes over
//    a superset under shared randomness) and is statistically
//    indistinguishable from the aligned network at full budget and from
//    per-user slots at a near-zero budget.
// ---------------------------------------------------------------------------
bool check_exhaustive_dominance(std::string& detail) {
    const double kAgreementFloor = 1e-4; // bits; absolute floor when the spread collapses

    const SweepData& d = crossover_sweep();
    if (!d.dominates) {
        detail = "a fixed strategy beat the exhaustive search somewhere";
        return false;
    }
    for (std::size_t i = 0; i < d.grid.size(); ++i) {
        const double top = std::max(std::max(d.ia[i], d.tdma[i]), d.greedy[i]);
        if (d.best[i] < top - 1e-9) {
            detail = str("exhaustive mean below a strategy at %.2f", d.grid[i]);
            return false;
        }
    }
    const double full_tol = std::max(2.0 * d.diff_full_se, kAgreementFloor);
    const double small_tol = std::max(2.0 * d.diff_small_se, kAgreementFloor);
    const bool full_ok = d.diff_full_mean >= -1e-9 && d.diff_full_mean <= full_tol;
    const bool small_ok = d.diff_small_mean >= -1e-9 && d.diff_small_mean <= small_tol;
    detail = str("gap at full budget %.2g (tol %.2g), near zero %.2g (tol %.2g)",
                 d.diff_full_mean, full_tol, d.diff_small_mean, small_tol);
    return full_ok && small_ok;
}

// ---------------------------------------------------------------------------
// 5. Forcing the group count on a six-user network: splitting into several
//    groups wins when overhead eats most of the frame, a single aligned
//    group wins when the frame is long.
// ---------------------------------------------------------------------------
bool check_forced_group_counts(std::string& detail) {
    const int kTrials = 500;
    const std::uint64_t kSeed = 0x45;
    const std::vector<double> kSplitBudgets = {0.1, 0.2, 0.3}; // heavy overhead
    const std::vector<double> kWholeBudgets = {0.9, 0.95};     // light overhead

    const Scenario base = make_symmetric_scenario(6, 3, 4, 100.0, 20.0, kSeed);
    std::vector<double> budgets = kSplitBudgets;
    budgets.insert(budgets.end(), kWholeBudgets.begin(), kWholeBudgets.end());
    std::vector<Scenario> evals;
    for (double a : budgets) {
        evals.push_back(with_frame_len(base, frame_for(base, a)));
    }

    std::vector<std::vector<Stat>> stats(budgets.size(), std::vector<Stat>(6));
    for (int trial = 0; trial < kTrials; ++trial) {
        const std::uint64_t seed = mix_seed(kSeed, kSeedTrial, std::uint64_t(trial), 0);
        const ChannelRealization realization = generate_channels(base, seed);
        GroupRateCache cache(realization, IaOptions{}, seed);
        const arma::vec qualities = channel_qualities(realization);
        for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
            for (int groups = 1; groups <= 6; ++groups) {
                GreedyOptions options;
                options.forced_groups = groups;
                const Partition part = greedy_balanced(evals[bi], qualities, options);
                stats[bi][groups - 1].add(cached_partition_rate(cache, part, evals[bi]));
            }
        }
    }

    std::string best_text;
    bool ok = true;
    for (std::size_t bi = 0; bi < budgets.size(); ++bi) {
        int best = 1;
        for (int groups = 2; groups <= 6; ++groups) {
            if (stats[bi][groups - 1].mean() > stats[bi][best - 1].mean()) {
                best = groups;
            }
        }
        const bool want_whole = bi >= kSplitBudgets.size();
        if (want_whole ? best != 1 : best <= 1) {
            ok = false;
        }
        best_text += str("%.2f", budgets[bi]) + "->" + std::to_string(best) + " ";
    }
    detail = "best group count by budget: " + best_text;
    return ok;
}

// ---------------------------------------------------------------------------
// 6. The selection score's rate model -- total streams times
//    log2(1 + quality / (N_t N_r)) -- tracks the Monte Carlo mean rate of
//    random orthonormal transmit/receive pairs within 15% at 10..30 dB.
// ---------------------------------------------------------------------------
bool check_selection_rate_model(std::string& detail) {
    const int kChannels = 200;
    const int kDrawsPerChannel = 50;
    const double kRelTol = 0.15;
    const int kAntennas = 4;
    const int kStreams = 2;
    const std::vector<double> kSnrsDb = {10.0, 20.0, 30.0};

    Rng rng(0x46);
    const arma::cx_mat eye = arma::cx_mat(arma::eye<arma::mat>(kStreams, kStreams),
                                          arma::zeros<arma::mat>(kStreams, kStreams));

    std::vector<Stat> mc(kSnrsDb.size());
    std::vector<Stat> model(kSnrsDb.size());
    for (int c = 0; c < kChannels; ++c) {
        arma::cx_mat h(kAntennas, kAntennas);
        for (arma::uword j = 0; j < h.n_cols; ++j) {
            for (arma::uword i = 0; i < h.n_rows; ++i) {
                h(i, j) = rng.standard_complex_normal();
            }
        }
        const double frob2 = std::pow(arma::norm(h, "fro"), 2);
        for (std::size_t si = 0; si < kSnrsDb.size(); ++si) {
            const double rho = std::pow(10.0, kSnrsDb[si] / 10.0);
            model[si].add(kStreams *
                          std::log2(1.0 + rho * frob2 / double(kAntennas * kAntennas)));
        }
        for (int draw = 0; draw < kDrawsPerChannel; ++draw) {
            const arma::cx_mat combiner = random_orthonormal(kAntennas, kStreams, rng);
            const arma::cx_mat precoder = random_orthonormal(kAntennas, kStreams, rng);
            const arma::cx_mat heff = combiner.t() * h * precoder;
            const arma::cx_mat gram = heff * heff.t();
            for (std::size_t si = 0; si < kSnrsDb.size(); ++si) {
                const double rho = std::pow(10.0, kSnrsDb[si] / 10.0);
                mc[si].add(log2_det_hpd(eye + (rho / kStreams) * gram));
            }
        }
    }

    bool ok = true;
    std::string gaps;
    for (std::size_t si = 0; si < kSnrsDb.size(); ++si) {
        const double rel = std::abs(model[si].mean() - mc[si].mean()) / mc[si].mean();
        if (rel > kRelTol) {
            ok = false;
        }
        gaps += str("%.0fdB:%.1f%% ", kSnrsDb[si], 100.0 * rel);
    }
    detail = "model vs Monte Carlo gap " + gaps + str("(bound %.0f%%)", 100.0 * kRelTol);
    return ok;
}

// ---------------------------------------------------------------------------
// 7. Time shares: the closed-form solution equalizes net rates across
//    groups and uses the whole frame, exactly on a hand-checked instance
//    and to numerical precision on random ones.
// ---------------------------------------------------------------------------
bool check_time_allocation(std::string& detail) {
    const double kHandTol = 1e-12;
    const double kShareSumTol = 1e-12;
    const double kEqualRateTol = 1e-9;
    const int kRandomInstances = 1000;

    // Two groups, rates 4 and 2, each losing a tenth of the frame: shares
    // 11/30 and 19/30, common net rate 16/15.
    const TimeAllocation hand = allocate_time(arma::vec{4.0, 2.0}, arma::vec{0.1, 0.1});
    if (std::abs(hand.shares(0) - 11.0 / 30.0) > kHandTol ||
        std::abs(hand.shares(1) - 19.0 / 30.0) > kHandTol ||
        std::abs(hand.common_rate - 16.0 / 15.0) > kHandTol || !hand.feasible) {
        detail = str("hand case off: shares (%.15f, %.15f), rate %.15f", hand.shares(0),
                     hand.shares(1), hand.common_rate);
        return false;
    }

    Rng rng(0x47);
    for (int i = 0; i < kRandomInstances; ++i) {
        const int groups = 2 + (i % 5);
        arma::vec rates(groups);
        arma::vec overheads(groups);
        for (int p = 0; p < groups; ++p) {
            rates(p) = 1.0 + 9.0 * rng.uniform();
            overheads(p) = 0.3 * rng.uniform();
        }
        const TimeAllocation ta = allocate_time(rates, overheads);
        if (std::abs(arma::accu(ta.shares) - 1.0) > kShareSumTol) {
            detail = str("shares sum off by %.2g on instance %.0f",
                         arma::accu(ta.shares) - 1.0, double(i));
            return false;
        }
        for (int p = 0; p < groups; ++p) {
            const double net = (ta.shares(p) - overheads(p)) * rates(p);
            if (std::abs(net - ta.common_rate) > kEqualRateTol) {
                detail = str("net rate gap %.2g on instance %.0f", net - ta.common_rate,
                             double(i));
                return false;
            }
        }
    }
    detail = str("hand case exact, %.0f random instances equalized", double(kRandomInstances));
    return true;
}

// ---------------------------------------------------------------------------
// 8. Training-length sweep on a nine-user, ten-antenna network with a
//    200-symbol frame: the optimum sits near the stream count at high SNR
//    and grows as SNR drops (estimation noise dominates), monotonically.
// ---------------------------------------------------------------------------
bool check_training_length_optimum(std::string& detail) {
    const int kTrials = 2000;
    const double kTauMin = 18.0; // one training symbol per stream (9 users x 2)
    const double kTauMax = 78.0;
    const double kTauStep = 2.0;
    struct Case {
        double snr_db;
        double lo;
        double hi;
    };
    const std::vector<Case> kCases = {{20.0, 12.0, 24.0}, {10.0, 20.0, 32.0}, {0.0, 34.0, 50.0}};

    const Partition whole = Partition::whole_network(9);
    const std::vector<std::vector<int>> streams = {std::vector<int>(9, 2)};

    std::vector<double> best;
    for (const Case& c : kCases) {
        const Scenario scenario = make_symmetric_scenario(9, 10, 10, 200.0, c.snr_db, 0x48);
        const TrainingOptResult result = optimize_training(scenario, whole, streams, kTauMin,
                                                           kTauMax, kTauStep, kTrials, 0x48);
        best.push_back(result.per_group[0].best_tau);
    }

    bool ok = true;
    std::string text;
    for (std::size_t i = 0; i < kCases.size(); ++i) {
        if (best[i] < kCases[i].lo || best[i] > kCases[i].hi) {
            ok = false;
        }
        if (i > 0 && best[i] < best[i - 1]) {
            ok = false; // lower SNR must not want less training
        }
        text += str("%.0fdB->%.0f ", kCases[i].snr_db, best[i]);
    }
    detail = "best training length by SNR: " + text;
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Channel-estimation split: estimate and error variances always sum to
//    the unit link power, and at high SNR the post-estimation SNR
//    approaches rho * tau / (tau + total group streams).
// ---------------------------------------------------------------------------
bool check_estimation_split(std::string& detail) {
    const int kTriples = 100000;
    const double kSumTol = 1e-12; // floating-point exact (a few ulps)
    const double kLimitRelTol = 0.01;

    Rng rng(0x49);
    for (int i = 0; i < kTriples; ++i) {
        const int streams = 1 + rng.uniform_int(8);
        const double rho = std::pow(10.0, -1.0 + 4.0 * rng.uniform());
        const double tau = 1.0 + 99.0 * rng.uniform();
        const ErrorVariances ev = error_variances(streams, rho, tau);
        if (std::abs(ev.estimate + ev.error - 1.0) > kSumTol || ev.estimate < 0.0 ||
            ev.error < 0.0) {
            detail = str("split off by %.2g at rho %.3g", ev.estimate + ev.error - 1.0, rho);
            return false;
        }
    }

    const double rho = 1e6;
    const double tau = 10.0;
    const std::vector<int> group = {0, 1, 2};
    const std::vector<int> streams = {2, 2, 2};
    const arma::rowvec snr_row = rho * arma::ones<arma::rowvec>(3);
    const double effective = effective_snr(0, group, streams, snr_row, tau);
    const double limit = rho * tau / (tau + 6.0);
    const double rel = std::abs(effective - limit) / limit;
    detail = str("splits exact; high-SNR limit off by %.2f%%", 100.0 * rel);
    return rel <= kLimitRelTol;
}

// ---------------------------------------------------------------------------
// 10. Enumeration counts: the partition generator visits exactly the Bell
//     number of partitions, and the near-equal-size counter matches both
//     the closed form and a filtered enumeration.
// ---------------------------------------------------------------------------
unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<unsigned long long>(i);
    }
    return f;
}

unsigned long long ipow(unsigned long long base, int exp) {
    unsigned long long out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

bool check_enumeration_counts(std::string& detail) {
    const std::vector<unsigned long long> kBell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};

    for (int users = 1; users <= 8; ++users) {
        unsigned long long visited = 0;
        for_each_partition(users, [&](const std::vector<std::vector<int>>&) { ++visited; });
        if (visited != kBell[std::size_t(users)] ||
            count_partitions(users) != kBell[std::size_t(users)]) {
            detail = str("total count wrong for %.0f users", double(users));
            return false;
        }
        for (int groups = 1; groups <= users; ++groups) {
            const int q = users / groups;
            const int r = users % groups;
            const unsigned long long closed =
                factorial(users) / (ipow(factorial(q + 1), r) * ipow(factorial(q), groups - r) *
                                    factorial(r) * factorial(groups - r));
            unsigned long long filtered = 0;
            for_each_partition(users, [&](const std::vector<std::vector<int>>& parts) {
                if (int(parts.size()) != groups) {
                    return;
                }
                int larger = 0;
                for (const std::vector<int>& g : parts) {
                    if (int(g.size()) == q + 1) {
                        ++larger;
                    } else if (int(g.size()) != q) {
                        return;
                    }
                }
                if (larger == r) {
                    ++filtered;
                }
            });
            if (count_balanced(users, groups) != closed || filtered != closed) {
                detail = str("near-equal count wrong for %.0f users in %.0f groups",
                             double(users), double(groups));
                return false;
            }
        }
    }
    detail = "totals match Bell numbers; near-equal counts match closed form";
    return true;
}

// ---------------------------------------------------------------------------
// 11. Geographic grouping on planted layouts matches brute force: spreading
//     picks the diagonal of a long rectangle, clustering recovers two
//     clumps, and co-located users get a deterministic assignment.
// ---------------------------------------------------------------------------
double cross_distance(const Scenario& scenario, int rx_user, int tx_user) {
    return arma::norm(scenario.placement.rx.col(arma::uword(rx_user)) -
                      scenario.placement.tx.col(arma::uword(tx_user)));
}

bool check_geographic_fixtures(std::string& detail) {
    // Four users on the corners of a 10 x 1 rectangle; receivers offset so
    // no link has zero length. Spreading should pair opposite corners.
    const char* kRectangle = R"({
        "id": "rectangle", "K": 4, "N_t": 2, "N_r": 2, "T": 1000, "seed": 3,
        "positions": {
            "tx": [[0, 0], [10, 0], [0, 1], [10, 1]],
            "rx": [[0.1, 0], [10.1, 0], [0.1, 1], [10.1, 1]],
            "path_loss_exponent": 3.8, "reference_snr_db": 20,
            "reference_distance": 1.0, "empty_group_distance": 1.0
        }
    })";
    const Scenario rect = parse_scenario(kRectangle);
    GreedyOptions two_groups;
    two_groups.forced_groups = 2;
    const Partition spread = greedy_geographic(rect, GeoVariant::separate, two_groups);

    // Brute force over the three pairings: maximize the smallest
    // receiver-to-partner-transmitter distance.
    std::string oracle;
    double oracle_score = -1.0;
    for_each_partition(4, [&](const std::vector<std::vector<int>>& parts) {
        if (parts.size() != 2 || parts[0].size() != 2 || parts[1].size() != 2) {
            return;
        }
        double smallest = std::numeric_limits<double>::infinity();
        for (const std::vector<int>& group : parts) {
            for (int rx_user : group) {
                for (int tx_user : group) {
                    if (rx_user != tx_user) {
                        smallest = std::min(smallest, cross_distance(rect, rx_user, tx_user));
                    }
                }
            }
        }
        if (smallest > oracle_score) {
            oracle_score = smallest;
            oracle = Partition::of_groups(parts).to_string();
        }
    });
    if (spread.to_string() != oracle || spread.to_string() != "1,4|2,3") {
        detail = "rectangle: got " + spread.to_string() + ", brute force " + oracle;
        return false;
    }
    for (GroupTag tag : spread.tags) {
        if (tag != GroupTag::single_user) {
            detail = "rectangle: spread groups must not coordinate";
            return false;
        }
    }

    // Six users in two tight clumps 50 apart; clustering should return the
    // clumps. Brute force: minimize the largest within-group link length.
    const char* kClumps = R"({
        "id": "clumps", "K": 6, "N_t": 2, "N_r": 2, "T": 1000, "seed": 3,
        "positions": {
            "tx": [[0, 0], [0.3, 0], [0, 0.3], [50, 0], [50.3, 0], [50, 0.3]],
            "rx": [[0.05, 0.05], [0.35, 0.05], [0.05, 0.35],
                   [50.05, 0.05], [50.35, 0.05], [50.05, 0.35]],
            "path_loss_exponent": 3.8, "reference_snr_db": 20,
            "reference_distance": 1.0, "empty_group_distance": 1.0
        }
    })";
    const Scenario clumps = parse_scenario(kClumps);
    const Partition clustered = greedy_geographic(clumps, GeoVariant::cluster, two_groups);

    std::string clump_oracle;
    double clump_score = std::numeric_limits<double>::infinity();
    for_each_partition(6, [&](const std::vector<std::vector<int>>& parts) {
        if (parts.size() != 2) {
            return;
        }
        double widest = 0.0;
        for (const std::vector<int>& group : parts) {
            for (int rx_user : group) {
                for (int tx_user : group) {
                    if (rx_user != tx_user) {
                        widest = std::max(widest, cross_distance(clumps, rx_user, tx_user));
                    }
                }
            }
        }
        if (widest < clump_score) {
            clump_score = widest;
            clump_oracle = Partition::of_groups(parts).to_string();
        }
    });
    if (clustered.to_string() != clump_oracle || clustered.to_string() != "1,2,3|4,5,6") {
        detail = "clumps: got " + clustered.to_string() + ", brute force " + clump_oracle;
        return false;
    }

    // Co-located users: every assignment ties, so the result must be the
    // deterministic lowest-index fill, identical across calls.
    const char* kColocated = R"({
        "id": "colocated", "K": 4, "N_t": 2, "N_r": 2, "T": 1000, "seed": 3,
        "positions": {
            "tx": [[0, 0], [0, 0], [0, 0], [0, 0]],
            "rx": [[5, 0], [5, 0], [5, 0], [5, 0]],
            "path_loss_exponent": 3.8, "reference_snr_db": 20,
            "reference_distance": 1.0, "empty_group_distance": 1.0
        }
    })";
    const Scenario colocated = parse_scenario(kColocated);
    const Partition first = greedy_geographic(colocated, GeoVariant::separate, two_groups);
    const Partition second = greedy_geographic(colocated, GeoVariant::separate, two_groups);
    if (first.to_string() != second.to_string() || first.to_string() != "1,2|3,4") {
        detail = "co-located: got " + first.to_string() + " then " + second.to_string();
        return false;
    }

    detail = "rectangle 1,4|2,3; clumps 1,2,3|4,5,6; co-located deterministic";
    return true;
}

} // namespace

int main() {
    std::printf("acceptance checks for overhead-aware user partitioning\n");

    struct Check {
        const char* name;
        bool (*run)(std::string&);
    };
    const Check checks[] = {
        {"alignment drives cross-link leakage to zero", check_alignment_convergence},
        {"full-budget sum rate gains one bit per stream per 3 dB", check_snr_scaling},
        {"greedy tracks the better fixed strategy outside switches", check_crossover_and_greedy},
        {"exhaustive search dominates and meets the extremes", check_exhaustive_dominance},
        {"splitting wins heavy overhead, one group wins light", check_forced_group_counts},
        {"selection rate model tracks Monte Carlo within 15%", check_selection_rate_model},
        {"time shares equalize net rates exactly", check_time_allocation},
        {"optimal training length grows as SNR drops", check_training_length_optimum},
        {"estimate and error variances split unit power", check_estimation_split},
        {"partition enumeration counts match closed forms", check_enumeration_counts},
        {"geographic grouping matches brute force on layouts", check_geographic_fixtures},
    };

    int index = 1;
    for (const Check& check : checks) {
        std::string detail;
        const bool pass = check.run(detail);
        report(index++, check.name, pass, detail);
    }

    std::printf("%d of %d checks passed\n", 11 - g_failures, 11);
    return g_failures == 0 ? 0 : 1;
}
