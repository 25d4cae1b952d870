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

#include "nsi/valuation.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsi {

enum class PolicyKind { AllSwitches, DeterministicAll, SingleRandom, Custom };

/**
 * Picks the next strategy from the improvement sets of the current one.
 * Every policy returns a subset of the improving edges that contains at
 * least one strict improvement whenever one exists.
 */
struct SwitchPolicy {
    using Selector =
        std::function<Strategy(const EscapeArena&, const Strategy&, const Valuation&, const ImprovementSets&)>;

    PolicyKind kind = PolicyKind::AllSwitches;
    std::uint64_t seed = 0;
    Selector custom;

    static SwitchPolicy all_switches() { return {PolicyKind::AllSwitches, 0, {}}; }
    static SwitchPolicy deterministic_all() { return {PolicyKind::DeterministicAll, 0, {}}; }
    static SwitchPolicy single_random(std::uint64_t seed) { return {PolicyKind::SingleRandom, seed, {}}; }
    static SwitchPolicy with_selector(Selector selector) { return {PolicyKind::Custom, 0, std::move(selector)}; }

    std::string name() const;
};

/// "all-switches", "deterministic-all" or "single-random".
SwitchPolicy parse_policy(const std::string& name, std::uint64_t seed = 0);

enum class Backend { BellmanFord, Dijkstra };

std::string backend_name(Backend backend);
Backend parse_backend(const std::string& name);

struct IterationStats {
    int iteration = 0;
    std::size_t strategy_edges = 0;
    std::size_t improving_edges = 0;
    std::size_t strict = 0;
    std::size_t strict_sources = 0;
    /// Bellman-Ford passes when that backend produced the valuation, else -1.
    int bellman_ford_passes = -1;
    double wall_ms = 0.0;
};

/// State handed to observers after each valuation, in reduced-arena ids.
struct IterationSnapshot {
    int iteration;
    const EscapeArena& arena;
    const Strategy& strategy;
    const Valuation& valuation;
    const ImprovementSets& improvements;
};

struct SolveOptions {
    SwitchPolicy policy = SwitchPolicy::all_switches();
    Backend backend = Backend::Dijkstra;
    /// Recheck a Dijkstra valuation with Bellman-Ford every k-th iteration; 0 disables.
    int audit_interval = 16;
    /// Reasonableness, strict progress and extraction checks on every step.
    bool check_invariants = true;
    std::function<void(const IterationSnapshot&)> on_iteration;
    TraceHook trace;
};

struct SolveResult {
    /// Winning sets in input ids, ascending.
    std::vector<NodeId> w0;
    std::vector<NodeId> w1;
    /// Deterministic winning moves, input ids.
    std::map<NodeId, NodeId> strategy0;
    std::map<NodeId, NodeId> strategy1;
    /// Final values by input id; empty for nodes removed in preprocessing.
    std::vector<std::optional<ColorProfile>> valuation;
    int iterations = 0;
    std::string policy;
    std::vector<IterationStats> stats;

    /// Reduced arena and the final strategies over it.
    EscapeArena arena;
    Strategy final_strategy;
    Strategy final_improving;
    Strategy extracted;
    std::vector<NodeId> pre_won;
};

/**
 * Strategy iteration from the all-escape strategy: valuate, compute the
 * improvement sets, stop when no strict improvement is left, otherwise
 * switch according to the policy. Nodes with value +inf at the end are won
 * by player 0, all others by player 1.
 *
 * Throws InvariantViolation when a checked invariant fails.
 */
SolveResult solve(const ParityGame& game, const SolveOptions& options = {});

/// |V| * (|V|/d + 1)^d.
double general_iteration_bound(std::size_t nodes, int colors);
/// 3 * 1.724^|V0|, for arenas whose player-0 nodes have out-degree <= 2.
double out_degree_two_bound(std::size_t player0_nodes);

/**
 * Per player-0 node, the smallest successor t in `improving` with
 * value(s) = color(s) + value(t). `values` must be the valuation of `improving`.
 */
Strategy extract_deterministic(const EscapeArena& arena, const Strategy& improving, const Valuation& values);

/**
 * Calls `visit` with every deterministic strategy contained in `improving`.
 * Throws LimitExceeded if there are more than `cap` of them.
 */
void enumerate_direct_improvements(const Strategy& improving, const std::function<void(const Strategy&)>& visit,
                                   std::size_t cap = 4096);

/**
 * Replays the winning strategies of a result against the original game:
 * every cycle reachable from W0 under strategy0 must be even-dominated, every
 * cycle reachable from W1 under strategy1 odd-dominated. Returns an empty
 * string on success, otherwise a description of the first failure.
 */
std::string replay_check(const ParityGame& game, const SolveResult& result);

} // namespace nsi
