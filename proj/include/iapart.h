/* SPDX-License-Identifier: Apache-2.0
 *
 * iapart - overhead-aware user partitioning for MIMO interference channels
 * Copyright 2026 the iapart authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the iapart library.
 *
 * Every function returns an iapart_status; outputs travel through pointer
 * arguments. On any non-OK status, iapart_last_error() returns a
 * human-readable message for the calling thread. Handles are opaque and
 * must be released with their matching _free function (free functions
 * accept NULL).
 */

#ifndef IAPART_H
#define IAPART_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iapart_status {
    IAPART_OK = 0,
    IAPART_EINVAL = 1,     /* invalid argument or configuration */
    IAPART_PARSE = 2,      /* malformed scenario JSON */
    IAPART_IO = 3,         /* file could not be read or written */
    IAPART_INFEASIBLE = 4, /* no solution under the given constraints */
    IAPART_TOO_LARGE = 5,  /* problem size exceeds a hard enumeration cap */
    IAPART_INTERNAL = 6    /* unexpected failure */
} iapart_status;

/* Library semantic version, e.g. "0.1.0". Never NULL. */
const char* iapart_version(void);

/* Short name of a status code, e.g. "invalid argument". Never NULL. */
const char* iapart_status_name(iapart_status status);

/* Message describing this thread's most recent failure; empty string if
 * none. The pointer stays valid until the thread's next iapart call. */
const char* iapart_last_error(void);

/* Releases a string returned through a char** output. */
void iapart_string_free(char* text);

/* ---- scenarios ------------------------------------------------------- */

typedef struct iapart_scenario iapart_scenario;

/* Parses a scenario from JSON text / loads one from a file. The schema is
 * documented in the repository README. */
iapart_status iapart_scenario_parse(const char* json_text, iapart_scenario** out);
iapart_status iapart_scenario_load(const char* path, iapart_scenario** out);

/* Fully connected network with the same SNR (in dB) on every link. */
iapart_status iapart_scenario_symmetric(int users, int tx_antennas, int rx_antennas,
                                        double frame_len, double snr_db, uint64_t seed,
                                        iapart_scenario** out);

iapart_status iapart_scenario_users(const iapart_scenario* scenario, int* users);

void iapart_scenario_free(iapart_scenario* scenario);

/* ---- channel realizations -------------------------------------------- */

typedef struct iapart_realization iapart_realization;

/* Draws one block-fading realization of every link's channel matrix. */
iapart_status iapart_channels_generate(const iapart_scenario* scenario, uint64_t seed,
                                       iapart_realization** out);

void iapart_realization_free(iapart_realization* realization);

/* ---- partitioning ----------------------------------------------------- */

typedef struct iapart_partition iapart_partition;

/* Greedy partitioning. method is one of "balanced" (equal time shares,
 * approximate-rate argmax), "rate_fair" (minimizes inter-group rate
 * spread), "geo_separate", or "geo_cluster" (position-driven; scenario
 * needs positions). forced_groups = 0 derives the group count from the
 * overhead model; a positive value forces it. Channel-quality numbers are
 * taken from the given realization. */
iapart_status iapart_greedy_partition(const iapart_realization* realization,
                                      const char* method, int forced_groups,
                                      iapart_partition** out);

/* Brute-force best partition over all set partitions (at most 12 users). */
iapart_status iapart_exhaustive_partition(const iapart_realization* realization,
                                          uint64_t design_seed, iapart_partition** out);

iapart_status iapart_partition_group_count(const iapart_partition* partition, int* groups);

/* Canonical 1-based text form, e.g. "1,3|2,4". Writes at most `capacity`
 * bytes including the terminator; *required (optional) receives the byte
 * count excluding the terminator. A too-small buffer is an error. */
iapart_status iapart_partition_to_string(const iapart_partition* partition, char* buffer,
                                         size_t capacity, size_t* required);

void iapart_partition_free(iapart_partition* partition);

/* ---- evaluation -------------------------------------------------------- */

/* Designs per-group transmit/receive subspaces for the partition on this
 * realization and evaluates the overhead-scaled sum rate. */
iapart_status iapart_sum_rate(const iapart_realization* realization,
                              const iapart_partition* partition, uint64_t design_seed,
                              double* total);

/* Overhead-optimal users-per-group and the implied group count for the
 * scenario's frame length. */
iapart_status iapart_choose_group_count(const iapart_scenario* scenario,
                                        int* users_per_group, int* groups);

/* Total spatial degrees of freedom of a K-user channel with the given
 * antenna counts. */
iapart_status iapart_dof(int users, int tx_antennas, int rx_antennas, int* total);

/* ---- experiments ------------------------------------------------------- */

/* Runs a batch experiment and returns its CSV table. kind is one of
 * "sweep-alpha", "sweep-groups", "greedy-compare", "geo", "train-opt",
 * "oracle". grid ("start:stop:step"), seed, and trials may be NULL to use
 * defaults (IAPART_SEED / IAPART_TRIALS environment overrides apply).
 * out_path NULL skips the file write; csv NULL discards the text,
 * otherwise *csv receives a NUL-terminated copy to release with
 * iapart_string_free. rows (optional) receives the data row count. */
iapart_status iapart_run_experiment(const iapart_scenario* scenario, const char* kind,
                                    const char* grid, const uint64_t* seed,
                                    const int* trials, const char* out_path, char** csv,
                                    int* rows);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IAPART_H */
