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

#include "nsi/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nsi {

/**
 * A parity game: nodes 0..n-1, each with an owner, a color (priority) and a
 * non-empty successor list. Player 0 wins a play iff the highest color seen
 * infinitely often is even.
 *
 * Successor lists keep their input order; repeated successors collapse to
 * the first occurrence. Immutable after construction.
 */
class ParityGame {
public:
    ParityGame() = default;

    /// Validates the game. Throws FormatError on empty or dangling successor lists.
    ParityGame(std::vector<Player> owner, std::vector<int> color, std::vector<std::vector<NodeId>> successors,
               std::vector<std::string> names = {});

    std::size_t size() const { return owner_.size(); }
    bool empty() const { return owner_.empty(); }

    Player owner(NodeId v) const { return owner_[static_cast<std::size_t>(v)]; }
    int color(NodeId v) const { return color_[static_cast<std::size_t>(v)]; }
    const std::vector<NodeId>& successors(NodeId v) const { return successors_[static_cast<std::size_t>(v)]; }
    /// Empty when the node has no name.
    const std::string& name(NodeId v) const { return names_[static_cast<std::size_t>(v)]; }

    /// Number of colors d = max color + 1 (1 for the empty game).
    int colors() const { return colors_; }
    std::size_t player0_count() const;
    std::size_t edge_count() const;
    std::size_t max_out_degree(Player owner) const;

    GraphView view() const;

    friend bool operator==(const ParityGame&, const ParityGame&) = default;

private:
    std::vector<Player> owner_;
    std::vector<int> color_;
    std::vector<std::vector<NodeId>> successors_;
    std::vector<std::string> names_;
    int colors_ = 1;
};

/**
 * Reads PGSolver text: an optional `parity <maxid>;` header followed by
 * `<id> <priority> <owner> <succ>,<succ>,... ["name"];` statements.
 * The header is optional and only a size hint. Ids must cover 0..n-1
 * exactly once. Throws FormatError.
 */
ParityGame parse_pgsolver(std::string_view text);

/// Canonical PGSolver text: header, then one line per node in id order.
std::string serialize_pgsolver(const ParityGame& game);

} // namespace nsi
