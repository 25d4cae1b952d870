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

#include "nsi/iteration.hpp"

#include "nsi/errors.hpp"
#include "nsi/generator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace nsi {

std::string SwitchPolicy::name() const
{
    switch (kind) {
    case PolicyKind::AllSwitches: return "all-switches";
    case PolicyKind::DeterministicAll: return "deterministic-all";
    case PolicyKind::SingleRandom: return "single-random";
    case PolicyKind::Custom: return "custom";
    }
    return "custom";
}

SwitchPolicy parse_policy(const std::string& name, std::uint64_t seed)
{
    if (name == "all-switches") return SwitchPolicy::all_switches();
    if (name == "deterministic-all") return SwitchPolicy::deterministic_all();
    if (name == "single-random") return SwitchPolicy::single_random(seed);
    throw FormatError("unknown policy '" + name + "'");
}

std::string backend_name(Backend backend)
{
    return backend == Backend::BellmanFord ? "bellman-ford" : "dijkstra";
}

Backend parse_backend(const std::string& name)
{
    if (name == "bellman-ford") return Backend::BellmanFord;
    if (name == "dijkstra") return Backend::Dijkstra;
    throw FormatError("unknown backend '" + name + "'");
}

double general_iteration_bound(std::size_t nodes, int colors)
{
    const double n = static_cast<double>(nodes);
    const double d = static_cast<double>(colors);
    return n * std::pow(n / d + 1.0, d);
}

double out_degree_two_bound(std::size_t player0_nodes)
{
    return 3.0 * std::pow(1.724, static_cast<double>(player0_nodes));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// The choice of `strategy` at s with the greatest value; smallest id on ties.
NodeId best_choice(const Strategy& strategy, const Valuation& values, NodeId s)
{
    NodeId best = kNoNode;
    for (NodeId t : strategy.choices(s)) {
        if (best == kNoNode || values[t] > values[best]) best = t;
    }
    return best;
}

Strategy keep_best_choices(const EscapeArena& arena, const Strategy& strategy, const Valuation& values)
{
    Strategy out(arena.size());
    for (std::size_t i = 0; i < arena.node_count(); ++i) {
        const auto s = static_cast<NodeId>(i);
        if (arena.owner(s) == Player::Even) out.set(s, {best_choice(strategy, values, s)});
    }
    return out;
}

Strategy select_next(const SwitchPolicy& policy, const EscapeArena& arena, const Strategy& strategy,
                     const Valuation& values, const ImprovementSets& sets, std::mt19937_64& rng)
{
    switch (policy.kind) {
    case PolicyKind::AllSwitches: return sets.improving;

    case PolicyKind::DeterministicAll: {
        Strategy next = keep_best_choices(arena, strategy, values);
        for (NodeId s : sets.strict_sources()) {
            const ColorProfile own = node_profile(arena, s);
            NodeId best = kNoNode;
            ColorProfile best_value;
            for (NodeId t : sets.strict.choices(s)) {
                ColorProfile candidate = own + values[t];
                if (best == kNoNode || candidate > best_value) {
                    best = t;
                    best_value = std::move(candidate);
                }
            }
            next.set(s, {best});
        }
        return next;
    }

    case PolicyKind::SingleRandom: {
        Strategy next = keep_best_choices(arena, strategy, values);
        std::vector<std::pair<NodeId, NodeId>> strict;
        for (NodeId s : sets.strict_sources()) {
            for (NodeId t : sets.strict.choices(s)) strict.emplace_back(s, t);
        }
        if (!strict.empty()) {
            const auto [s, t] = strict[draw_below(rng, strict.size())];
            next.set(s, {t});
        }
        return next;
    }

    case PolicyKind::Custom:
        if (!policy.custom) throw InvariantViolation("custom policy without a selector");
        return policy.custom(arena, strategy, values, sets);
    }
    throw InvariantViolation("unknown policy");
}

void check_step(const ImprovementSets& sets, const Strategy& next)
{
    if (!next.subset_of(sets.improving)) throw InvariantViolation("policy left the improvement set");
    for (NodeId s : sets.strict_sources()) {
        for (NodeId t : sets.strict.choices(s)) {
            if (next.contains(s, t)) return;
        }
    }
    throw InvariantViolation("policy applied no strict improvement");
}

void check_progress(const ImprovementSets& sets, const Strategy& next, const Valuation& before,
                    const Valuation& after)
{
    if (!dominated_by(before, after)) throw InvariantViolation("valuation decreased after an improvement step");
    for (NodeId s : sets.strict_sources()) {
        bool applied = false;
        for (NodeId t : sets.strict.choices(s)) applied = applied || next.contains(s, t);
        if (applied && !(before[s] < after[s])) {
            throw InvariantViolation("strict improvement at node " + std::to_string(s) + " did not raise its value");
        }
    }
}

} // namespace

SolveResult solve(const ParityGame& game, const SolveOptions& options)
{
    SolveResult result;
    result.policy = options.policy.name();
    result.valuation.resize(game.size());

    Preprocessed pre = preprocess(build_escape_arena(game));
    result.pre_won = pre.pre_won;
    for (std::size_t v = 0; v < game.size(); ++v) {
        if (pre.player1_strategy[v] != kNoNode) result.strategy1[static_cast<NodeId>(v)] = pre.player1_strategy[v];
    }
    result.arena = std::move(pre.arena);
    const EscapeArena& arena = result.arena;
    const std::size_t n = arena.node_count();

    if (n == 0) {
        result.w1 = result.pre_won;
        result.final_strategy = result.final_improving = result.extracted = Strategy(arena.size());
        return result;
    }

    std::mt19937_64 rng(options.policy.seed);
    const double bound = general_iteration_bound(game.size(), game.colors());

    Strategy strategy = initial_strategy(arena);
    auto started = Clock::now();
    Valuation values = valuate_bellman_ford(arena, strategy, options.trace);
    int passes = values.passes();
    ImprovementSets sets;

    for (int iteration = 1;; ++iteration) {
        if (iteration > bound) throw InvariantViolation("iteration count exceeds |V|(|V|/d+1)^d");
        if (options.check_invariants && !is_reasonable(arena, strategy)) {
            throw InvariantViolation("iteration " + std::to_string(iteration) + " produced an unreasonable strategy");
        }
        sets = improvements(arena, strategy, values);

        IterationStats stats;
        stats.iteration = iteration;
        stats.strategy_edges = strategy.edge_count();
        stats.improving_edges = sets.improving.edge_count();
        stats.strict = sets.strict_count();
        stats.strict_sources = sets.strict_sources().size();
        stats.bellman_ford_passes = passes;
        stats.wall_ms = elapsed_ms(started);
        result.stats.push_back(stats);
        result.iterations = iteration;

        if (options.on_iteration) options.on_iteration(IterationSnapshot{iteration, arena, strategy, values, sets});
        if (stats.strict == 0) break;

        started = Clock::now();
        Strategy next = select_next(options.policy, arena, strategy, values, sets, rng);
        if (options.check_invariants) check_step(sets, next);

        Valuation next_values;
        if (options.backend == Backend::BellmanFord) {
            next_values = valuate_bellman_ford(arena, next, options.trace);
            passes = next_values.passes();
        } else {
            next_values = valuate_dijkstra_update(arena, values, next);
            passes = -1;
            if (options.audit_interval > 0 && (iteration + 1) % options.audit_interval == 0) {
                const Valuation audit = valuate_bellman_ford(arena, next);
                if (!(audit == next_values)) {
                    throw InvariantViolation("Bellman-Ford audit disagrees with the Dijkstra update at iteration "
                                             + std::to_string(iteration + 1));
                }
            }
        }
        if (options.check_invariants) check_progress(sets, next, values, next_values);
        strategy = std::move(next);
        values = std::move(next_values);
    }

    const Valuation improving_values = options.backend == Backend::BellmanFord
                                           ? valuate_bellman_ford(arena, sets.improving)
                                           : valuate_dijkstra_update(arena, values, sets.improving);
    Strategy extracted = extract_deterministic(arena, sets.improving, improving_values);
    if (options.check_invariants && !(valuate_bellman_ford(arena, extracted) == improving_values)) {
        throw InvariantViolation("extracted deterministic strategy does not reproduce the valuation");
    }

    const Strategy response = response_strategy(arena, strategy, values);
    std::vector<bool> won_by_0(game.size(), false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<NodeId>(i);
        const NodeId original = arena.original_id(v);
        result.valuation[static_cast<std::size_t>(original)] = values[v];
        if (values[v].is_pos_inf()) {
            won_by_0[static_cast<std::size_t>(original)] = true;
            if (arena.owner(v) != Player::Even) continue;
            const NodeId t = extracted.choices(v).front();
            if (arena.is_sink(t)) throw InvariantViolation("winning strategy escapes at node " + std::to_string(original));
            result.strategy0[original] = arena.original_id(t);
        } else if (arena.owner(v) == Player::Odd) {
            const auto tight = response.choices(v);
            if (tight.empty()) throw InvariantViolation("no tight player-1 edge at node " + std::to_string(original));
            result.strategy1[original] = arena.original_id(tight.front());
        }
    }
    for (std::size_t v = 0; v < game.size(); ++v) {
        (won_by_0[v] ? result.w0 : result.w1).push_back(static_cast<NodeId>(v));
    }

    result.final_strategy = std::move(strategy);
    result.final_improving = std::move(sets.improving);
    result.extracted = std::move(extracted);
    return result;
}

Strategy extract_deterministic(const EscapeArena& arena, const Strategy& improving, const Valuation& values)
{
    Strategy out(arena.size());
    for (std::size_t i = 0; i < arena.node_count(); ++i) {
        const auto s = static_cast<NodeId>(i);
        if (arena.owner(s) != Player::Even) continue;
        const ColorProfile own = node_profile(arena, s);
        NodeId pick = kNoNode;
        for (NodeId t : improving.choices(s)) {
            if (values[s] == own + values[t]) {
                pick = t;
                break;
            }
        }
        if (pick == kNoNode) throw InvariantViolation("no value-realizing edge at node " + std::to_string(s));
        out.set(s, {pick});
    }
    return out;
}

void enumerate_direct_improvements(const Strategy& improving, const std::function<void(const Strategy&)>& visit,
                                   std::size_t cap)
{
    std::vector<NodeId> nodes;
    std::size_t total = 1;
    for (std::size_t v = 0; v < improving.size(); ++v) {
        const std::size_t k = improving.choices(static_cast<NodeId>(v)).size();
        if (k == 0) continue;
        nodes.push_back(static_cast<NodeId>(v));
        if (total > cap / k) throw LimitExceeded("more than " + std::to_string(cap) + " deterministic selections");
        total *= k;
    }

    std::vector<std::size_t> digit(nodes.size(), 0);
    Strategy current(improving.size());
    for (;;) {
        for (std::size_t i = 0; i < nodes.size(); ++i) current.set(nodes[i], {improving.choices(nodes[i])[digit[i]]});
        visit(current);
        std::size_t i = 0;
        for (; i < nodes.size(); ++i) {
            if (++digit[i] < improving.choices(nodes[i]).size()) break;
            digit[i] = 0;
        }
        if (i == nodes.size()) return;
    }
}

std::string replay_check(const ParityGame& game, const SolveResult& result)
{
    const std::size_t n = game.size();
    for (int p = 0; p < 2; ++p) {
        const Player player = p == 0 ? Player::Even : Player::Odd;
        const auto& region = p == 0 ? result.w0 : result.w1;
        const auto& moves = p == 0 ? result.strategy0 : result.strategy1;

        GraphView graph = game.view();
        std::vector<bool> sources(n, false);
        for (NodeId v : region) {
            sources[static_cast<std::size_t>(v)] = true;
            if (game.owner(v) != player) continue;
            auto it = moves.find(v);
            if (it == moves.end()) return "player " + std::to_string(p) + " has no move at node " + std::to_string(v);
            const auto& succ = game.successors(v);
            if (std::find(succ.begin(), succ.end(), it->second) == succ.end()) {
                return "player " + std::to_string(p) + " move at node " + std::to_string(v) + " is not an edge";
            }
            graph.successors[static_cast<std::size_t>(v)] = {it->second};
        }
        const GraphView reachable = induced_view(graph, reachable_from(graph, sources));
        const auto bad = dominated_cycle_nodes(reachable, opponent(player));
        for (std::size_t v = 0; v < n; ++v) {
            if (bad[v]) {
                return "cycle through node " + std::to_string(v) + " reachable from W" + std::to_string(p)
                       + " is won by the opponent";
            }
        }
    }
    return {};
}

} // namespace nsi
