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

#include <vector>

namespace nsi {

/**
 * A parity game extended with a sink that every player-0 node may move to.
 *
 * The sink has id size() of the base game, no successors, and is nominally
 * owned by player 0. The base game may be a subgame of some original game;
 * original_id() maps node ids back.
 */
class EscapeArena {
public:
    EscapeArena() = default;
    explicit EscapeArena(ParityGame game);
    /// `colors` fixes the profile dimension; it must cover every color of `game`.
    EscapeArena(ParityGame game, std::vector<NodeId> original_ids, int colors);

    const ParityGame& game() const { return game_; }

    /// Game nodes, excluding the sink.
    std::size_t node_count() const { return game_.size(); }
    /// Game nodes plus the sink.
    std::size_t size() const { return game_.size() + 1; }
    NodeId sink() const { return static_cast<NodeId>(game_.size()); }
    bool is_sink(NodeId v) const { return v == sink(); }

    /// Profile dimension, inherited from the original game.
    int colors() const { return colors_; }

    Player owner(NodeId v) const { return is_sink(v) ? Player::Even : game_.owner(v); }
    int color(NodeId v) const { return is_sink(v) ? 0 : game_.color(v); }

    /// Successors in the escape arena: game successors, plus the sink for player-0 nodes.
    std::vector<NodeId> successors(NodeId v) const;
    std::size_t escape_edge_count() const { return game_.player0_count(); }

    NodeId original_id(NodeId v) const { return original_[static_cast<std::size_t>(v)]; }

    /// Full escape arena as a graph (size() nodes).
    GraphView view() const;
    /// Player-1 nodes with the edges among them; player-0 nodes and the sink are isolated.
    GraphView player1_view() const;

private:
    ParityGame game_;
    std::vector<NodeId> original_;
    int colors_ = 1;
};

EscapeArena build_escape_arena(const ParityGame& game);

/**
 * Outcome of removing the nodes that player 1 wins without player 0 ever
 * having a choice: the player-1 attractor (in the game without escape edges)
 * of every odd-dominated cycle formed by player-1 nodes alone.
 */
struct Preprocessed {
    /// Arena over the surviving nodes, escape edges kept.
    EscapeArena arena;
    /// Removed nodes, as ids of the input arena, ascending.
    std::vector<NodeId> pre_won;
    /// Winning moves for player 1 on pre_won player-1 nodes (input ids); kNoNode elsewhere.
    std::vector<NodeId> player1_strategy;
};

Preprocessed preprocess(const EscapeArena& arena);

/**
 * Restricts `game` to the nodes flagged in `keep`. Every kept node must keep
 * at least one successor. The returned ids map back to `game`.
 */
ParityGame subgame(const ParityGame& game, const std::vector<bool>& keep, std::vector<NodeId>& kept_ids);

} // namespace nsi
