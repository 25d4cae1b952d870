/*
 * Copyright 2026 The nsi Authors
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

#pragma once

#include "nsi/game.hpp"
#include "nsi/iteration.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nsi {

struct OracleResult {
    std::vector<NodeId> w0;
    std::vector<NodeId> w1;
    /// For each node in W0, a deterministic player-0 strategy (successor per node, kNoNode for player 1) winning it.
    std::map<NodeId, std::vector<NodeId>> witness;
};

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

/// Cap from SOLVER_ORACLE_CAP if set and valid, else kDefaultOracleCap.
std::uint64_t oracle_cap_from_env();

/**
 * Brute force: for every deterministic player-0 strategy, a node is won by
 * player 0 iff no odd-dominated cycle is reachable from it in the restricted
 * game. Throws LimitExceeded when the number of strategies exceeds `cap`.
 */
OracleResult oracle_solve(const ParityGame& game, std::uint64_t cap = kDefaultOracleCap);

struct CrosscheckReport {
    bool agree = true;
    /// Serialized game plus both partitions; empty when the partitions agree.
    std::string diff;
};

CrosscheckReport crosscheck(const ParityGame& game, const SolveOptions& options,
                            std::uint64_t cap = kDefaultOracleCap);

/// Writes <dir>/<stem>.pg and <dir>/<stem>.json for a failed crosscheck.
void write_mismatch_artifacts(const std::string& dir, const std::string& stem, const ParityGame& game,
                              const CrosscheckReport& report);

} // namespace nsi
