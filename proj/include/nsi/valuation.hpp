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

#include "nsi/profile.hpp"
#include "nsi/strategy.hpp"

#include <functional>
#include <vector>

namespace nsi {

/**
 * Node values of an escape arena under a fixed player-0 strategy, indexed by
 * arena node id (the sink included, always the zero profile).
 */
class Valuation {
public:
    Valuation() = default;
    Valuation(std::vector<ColorProfile> values, int passes = 0) : values_(std::move(values)), passes_(passes) {}

    std::size_t size() const { return values_.size(); }
    const ColorProfile& operator[](NodeId v) const { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<ColorProfile>& values() const { return values_; }

    /// Number of value-changing Bellman-Ford passes; 0 for other backends.
    int passes() const { return passes_; }

    /// Node-wise equality of values.
    friend bool operator==(const Valuation& a, const Valuation& b) { return a.values_ == b.values_; }

private:
    std::vector<ColorProfile> values_;
    int passes_ = 0;
};

/// Pointwise a <= b.
bool dominated_by(const Valuation& a, const Valuation& b);

/// Observer for Bellman-Ford passes: (pass index from 1, node, old value, new value).
using TraceHook = std::function<void(int, NodeId, const ColorProfile&, const ColorProfile&)>;

/**
 * Valuation of a reasonable strategy by iterating the one-step operator from
 * "sink = 0, everything else = +inf" until nothing changes. Player-1 nodes take
 * the least successor value, player-0 nodes the greatest over their choices,
 * each plus their own color. Nodes are swept in descending id order, updating
 * in place.
 *
 * Throws ReasonablenessError if the values do not settle within |V| + 1 passes.
 */
Valuation valuate_bellman_ford(const EscapeArena& arena, const Strategy& strategy, const TraceHook& trace = {});

/// One synchronous application of the operator.
Valuation apply_operator(const EscapeArena& arena, const Strategy& strategy, const Valuation& values);

/// Improvement edges of a strategy, given its valuation.
struct ImprovementSets {
    /// Player-0 edges (s,t) with value(s) <= color(s) + value(t). At nodes of
    /// value +inf only the strategy's own +inf choices. Itself a strategy.
    Strategy improving;
    /// The strict part: value(s) < color(s) + value(t).
    Strategy strict;

    std::size_t strict_count() const { return strict.edge_count(); }
    std::vector<NodeId> strict_sources() const;
};

ImprovementSets improvements(const EscapeArena& arena, const Strategy& strategy, const Valuation& values);

/**
 * Valuation of `next` from the valuation of a strategy it improves on.
 *
 * `next` must be a subset of the improvement edges of that strategy, so every
 * edge weight color(s) + base(t) - base(s) is non-negative and a Dijkstra
 * sweep from the sink over the reversed edges settles each node once.
 * Player-0 nodes are settled only after all of their choices are.
 *
 * Throws InvariantViolation on a negative weight.
 */
Valuation valuate_dijkstra_update(const EscapeArena& arena, const Valuation& base, const Strategy& next);

/// Valuation of the full improvement set of `strategy`.
Valuation valuate_dijkstra_update(const EscapeArena& arena, const Strategy& strategy, const Valuation& values);

/// Player-1 edges (s,t) realizing value(s) = color(s) + value(t).
Strategy response_strategy(const EscapeArena& arena, const Strategy& strategy, const Valuation& values);

/// Value of a node's own color as a profile of the arena's dimension.
ColorProfile node_profile(const EscapeArena& arena, NodeId v);

} // namespace nsi
