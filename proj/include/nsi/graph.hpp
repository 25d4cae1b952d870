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

#include <cstdint>
#include <limits>
#include <vector>

namespace nsi {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) { return p == Player::Even ? Player::Odd : Player::Even; }
constexpr int index_of(Player p) { return static_cast<int>(p); }
constexpr Player parity_of(int color) { return (color & 1) ? Player::Odd : Player::Even; }

/**
 * Plain colored, owned digraph. Every analysis in the solver (cycle
 * dominance, attractors, reachability) runs over one of these, so
 * strategy-restricted arenas and subgames are just different views.
 */
struct GraphView {
    std::vector<Player> owner;
    std::vector<int> color;
    std::vector<std::vector<NodeId>> successors;

    std::size_t size() const { return successors.size(); }
};

/// Strongly connected components of the subgraph induced by `active` (all nodes if empty).
std::vector<std::vector<NodeId>> strongly_connected_components(const GraphView& graph,
                                                               const std::vector<bool>& active = {});

/**
 * Nodes that lie on some cycle whose highest color has the given parity.
 *
 * For each color c of that parity, from the highest down, restrict to nodes
 * of color <= c and mark every SCC that holds a node of color c and at least
 * one internal edge.
 */
std::vector<bool> dominated_cycle_nodes(const GraphView& graph, Player parity);

inline std::vector<bool> find_one_dominated_cycle_nodes(const GraphView& graph)
{
    return dominated_cycle_nodes(graph, Player::Odd);
}

struct AttractorResult {
    static constexpr int kUnreached = std::numeric_limits<int>::max();

    std::vector<bool> member;
    /// Layer in which a node joined; kUnreached outside the attractor.
    std::vector<int> rank;
    /// For attracting-player nodes of positive rank: a successor of smaller rank.
    std::vector<NodeId> strategy;
};

/**
 * Least set containing `target` that is closed under: a node of `player`
 * with some successor inside, or an opponent node with all successors
 * inside. Nodes without successors are only members if targeted.
 */
AttractorResult attractor(const GraphView& graph, Player player, const std::vector<bool>& target);

/// Nodes reachable from `sources` (sources included).
std::vector<bool> reachable_from(const GraphView& graph, const std::vector<bool>& sources);

/// Keeps only edges between nodes of `keep`; other nodes lose all their edges.
GraphView induced_view(const GraphView& graph, const std::vector<bool>& keep);

} // namespace nsi
