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

#include "nsi/arena.hpp"

#include <span>
#include <vector>

namespace nsi {

/**
 * A set of edges, stored per source node as a sorted, duplicate-free
 * successor list. Used for player-0 strategies (possibly non-deterministic)
 * as well as for player-1 edge sets such as the tight response.
 */
class Strategy {
public:
    Strategy() = default;
    explicit Strategy(std::size_t size) : choices_(size) {}

    std::size_t size() const { return choices_.size(); }

    /// Replaces the choices of `v`; the list is sorted and deduplicated.
    void set(NodeId v, std::vector<NodeId> targets);
    void add(NodeId v, NodeId target);

    std::span<const NodeId> choices(NodeId v) const { return choices_[static_cast<std::size_t>(v)]; }
    bool contains(NodeId v, NodeId target) const;

    std::size_t edge_count() const;
    /// Every node has at most one choice.
    bool deterministic() const;
    bool subset_of(const Strategy& other) const;

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    std::vector<std::vector<NodeId>> choices_;
};

/// Every player-0 node moves to the sink.
Strategy initial_strategy(const EscapeArena& arena);

/// Throws InvariantViolation unless every player-0 node has >= 1 choice, all of them arena edges.
void validate_strategy(const EscapeArena& arena, const Strategy& strategy);

/// The escape arena with player-0 nodes limited to their strategy choices.
GraphView restricted_view(const EscapeArena& arena, const Strategy& strategy);

/// No cycle of the restricted arena has an odd maximal color.
bool is_reasonable(const EscapeArena& arena, const Strategy& strategy);

} // namespace nsi
