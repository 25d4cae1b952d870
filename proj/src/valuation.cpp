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

#include "nsi/valuation.hpp"

#include "nsi/errors.hpp"

#include <algorithm>
#include <queue>

namespace nsi {

namespace {

std::vector<ColorProfile> node_profiles(const EscapeArena& arena)
{
    const auto d = static_cast<std::size_t>(arena.colors());
    std::vector<ColorProfile> out;
    out.reserve(arena.size());
    for (std::size_t v = 0; v < arena.node_count(); ++v) out.push_back(unit_profile(d, arena.color(static_cast<NodeId>(v))));
    out.push_back(ColorProfile::zero(d));
    return out;
}

// One operator step at a single node, reading from `values`.
ColorProfile step(const EscapeArena& arena, const Strategy& strategy, const std::vector<ColorProfile>& own,
                  const std::vector<ColorProfile>& values, NodeId v)
{
    const auto vi = static_cast<std::size_t>(v);
    const ColorProfile* pick = nullptr;
    if (arena.owner(v) == Player::Odd) {
        for (NodeId t : arena.game().successors(v)) {
            const auto& candidate = values[static_cast<std::size_t>(t)];
            if (!pick || candidate < *pick) pick = &candidate;
        }
    } else {
        for (NodeId t : strategy.choices(v)) {
            const auto& candidate = values[static_cast<std::size_t>(t)];
            if (!pick || candidate > *pick) pick = &candidate;
        }
    }
    if (!pick) throw InvariantViolation("node " + std::to_string(v) + " has no move");
    return own[vi] + *pick;
}

struct QueueEntry {
    ColorProfile key;
    NodeId node;
};

struct LaterEntry {
    bool operator()(const QueueEntry& a, const QueueEntry& b) const
    {
        const auto order = compare(a.key, b.key);
        if (order != 0) return order > 0;
        return a.node > b.node;
    }
};

} // namespace

ColorProfile node_profile(const EscapeArena& arena, NodeId v)
{
    const auto d = static_cast<std::size_t>(arena.colors());
    return arena.is_sink(v) ? ColorProfile::zero(d) : unit_profile(d, arena.color(v));
}

bool dominated_by(const Valuation& a, const Valuation& b)
{
    if (a.size() != b.size()) throw InvariantViolation("comparing valuations of different arenas");
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a.values()[v] > b.values()[v]) return false;
    }
    return true;
}

Valuation valuate_bellman_ford(const EscapeArena& arena, const Strategy& strategy, const TraceHook& trace)
{
    validate_strategy(arena, strategy);
    if (!is_reasonable(arena, strategy)) throw ReasonablenessError("strategy closes a 1-dominated cycle");
    const auto d = static_cast<std::size_t>(arena.colors());
    const std::size_t n = arena.node_count();
    const auto own = node_profiles(arena);

    std::vector<ColorProfile> values(n + 1, ColorProfile::pos_inf(d));
    values[n] = ColorProfile::zero(d);

    // Converges after at most n value-changing passes; pass n + 1 must be quiet.
    for (std::size_t pass = 1; pass <= n + 1; ++pass) {
        bool changed = false;
        for (std::size_t i = n; i-- > 0;) {
            const auto v = static_cast<NodeId>(i);
            ColorProfile next = step(arena, strategy, own, values, v);
            if (next.is_neg_inf()) throw ReasonablenessError("valuation reached -inf at node " + std::to_string(i));
            if (next == values[i]) continue;
            if (trace) trace(static_cast<int>(pass), v, values[i], next);
            values[i] = std::move(next);
            changed = true;
        }
        if (!changed) return Valuation(std::move(values), static_cast<int>(pass - 1));
    }
    throw ReasonablenessError("valuation did not stabilize within " + std::to_string(n) + " passes");
}

Valuation apply_operator(const EscapeArena& arena, const Strategy& strategy, const Valuation& values)
{
    const auto own = node_profiles(arena);
    std::vector<ColorProfile> next(values.values());
    for (std::size_t i = 0; i < arena.node_count(); ++i) {
        next[i] = step(arena, strategy, own, values.values(), static_cast<NodeId>(i));
    }
    next[arena.node_count()] = ColorProfile::zero(static_cast<std::size_t>(arena.colors()));
    return Valuation(std::move(next));
}

std::vector<NodeId> ImprovementSets::strict_sources() const
{
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < strict.size(); ++v) {
        if (!strict.choices(static_cast<NodeId>(v)).empty()) out.push_back(static_cast<NodeId>(v));
    }
    return out;
}

ImprovementSets improvements(const EscapeArena& arena, const Strategy& strategy, const Valuation& values)
{
    validate_strategy(arena, strategy);
    ImprovementSets out{Strategy(arena.size()), Strategy(arena.size())};
    for (std::size_t i = 0; i < arena.node_count(); ++i) {
        const auto s = static_cast<NodeId>(i);
        if (arena.owner(s) != Player::Even) continue;
        const ColorProfile own = node_profile(arena, s);
        std::vector<NodeId> improving;
        std::vector<NodeId> strict;
        if (values[s].is_pos_inf()) {
            // Any edge between two +inf nodes passes the inequality, and such
            // edges can close odd cycles. A won node keeps its own +inf choices.
            for (NodeId t : strategy.choices(s)) {
                if (values[t].is_pos_inf()) improving.push_back(t);
            }
            out.improving.set(s, std::move(improving));
            continue;
        }
        for (NodeId t : arena.successors(s)) {
            const auto order = compare(values[s], own + values[t]);
            if (order <= 0) improving.push_back(t);
            if (order < 0) strict.push_back(t);
        }
        out.improving.set(s, std::move(improving));
        out.strict.set(s, std::move(strict));
    }
    return out;
}

Valuation valuate_dijkstra_update(const EscapeArena& arena, const Valuation& base, const Strategy& next)
{
    validate_strategy(arena, next);
    const auto d = static_cast<std::size_t>(arena.colors());
    const std::size_t n = arena.node_count();
    const NodeId sink = arena.sink();
    const GraphView graph = restricted_view(arena, next);

    std::vector<bool> target(n + 1, false);
    target[n] = true;
    const AttractorResult attracted = attractor(graph, Player::Odd, target);
    const auto& in_a = attracted.member;

    // Only edges inside the attractor matter; everything else stays +inf.
    std::vector<std::vector<NodeId>> predecessors(n + 1);
    std::vector<std::size_t> pending(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_a[i]) continue;
        if (!base.values()[i].is_finite()) {
            throw InvariantViolation("node " + std::to_string(i) + " is attracted to the sink but has value "
                                     + base.values()[i].to_string());
        }
        for (NodeId t : graph.successors[i]) {
            if (!in_a[static_cast<std::size_t>(t)]) {
                if (graph.owner[i] == Player::Even) throw InvariantViolation("attractor leaks at a player-0 node");
                continue;
            }
            predecessors[static_cast<std::size_t>(t)].push_back(static_cast<NodeId>(i));
            ++pending[i];
        }
    }

    const ColorProfile zero = ColorProfile::zero(d);
    std::vector<ColorProfile> delta(n + 1);
    std::vector<bool> has_delta(n + 1, false);
    std::vector<bool> settled(n + 1, false);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, LaterEntry> queue;
    queue.push({zero, sink});
    has_delta[n] = true;
    delta[n] = zero;

    while (!queue.empty()) {
        QueueEntry top = queue.top();
        queue.pop();
        const auto vi = static_cast<std::size_t>(top.node);
        if (settled[vi]) continue;
        settled[vi] = true;
        delta[vi] = top.key;

        for (NodeId u : predecessors[vi]) {
            const auto ui = static_cast<std::size_t>(u);
            if (settled[ui]) continue;
            const ColorProfile weight = (node_profile(arena, u) + base[top.node]) - base[u];
            if (weight < zero) {
                throw InvariantViolation("negative weight " + weight.to_string() + " on edge " + std::to_string(u)
                                         + "->" + std::to_string(top.node));
            }
            ColorProfile candidate = weight + top.key;
            if (graph.owner[ui] == Player::Odd) {
                if (!has_delta[ui] || candidate < delta[ui]) {
                    delta[ui] = candidate;
                    has_delta[ui] = true;
                    queue.push({std::move(candidate), u});
                }
            } else {
                if (!has_delta[ui] || candidate > delta[ui]) {
                    delta[ui] = std::move(candidate);
                    has_delta[ui] = true;
                }
                if (--pending[ui] == 0) queue.push({delta[ui], u});
            }
        }
    }

    std::vector<ColorProfile> values(n + 1, ColorProfile::pos_inf(d));
    values[n] = zero;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_a[i]) continue;
        if (!settled[i]) throw InvariantViolation("node " + std::to_string(i) + " was never settled");
        values[i] = base.values()[i] + delta[i];
    }
    return Valuation(std::move(values));
}

Valuation valuate_dijkstra_update(const EscapeArena& arena, const Strategy& strategy, const Valuation& values)
{
    return valuate_dijkstra_update(arena, values, improvements(arena, strategy, values).improving);
}

Strategy response_strategy(const EscapeArena& arena, [[maybe_unused]] const Strategy& strategy,
                           const Valuation& values)
{
    Strategy out(arena.size());
    for (std::size_t i = 0; i < arena.node_count(); ++i) {
        const auto s = static_cast<NodeId>(i);
        if (arena.owner(s) != Player::Odd) continue;
        const ColorProfile own = node_profile(arena, s);
        for (NodeId t : arena.game().successors(s)) {
            if (values[s] == own + values[t]) out.add(s, t);
        }
    }
    return out;
}

} // namespace nsi
