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

#include "nsi/strategy.hpp"

#include "nsi/errors.hpp"

#include <algorithm>

namespace nsi {

void Strategy::set(NodeId v, std::vector<NodeId> targets)
{
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    choices_[static_cast<std::size_t>(v)] = std::move(targets);
}

void Strategy::add(NodeId v, NodeId target)
{
    auto& list = choices_[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(list.begin(), list.end(), target);
    if (it == list.end() || *it != target) list.insert(it, target);
}

bool Strategy::contains(NodeId v, NodeId target) const
{
    const auto& list = choices_[static_cast<std::size_t>(v)];
    return std::binary_search(list.begin(), list.end(), target);
}

std::size_t Strategy::edge_count() const
{
    std::size_t m = 0;
    for (const auto& list : choices_) m += list.size();
    return m;
}

bool Strategy::deterministic() const
{
    return std::all_of(choices_.begin(), choices_.end(), [](const auto& list) { return list.size() <= 1; });
}

bool Strategy::subset_of(const Strategy& other) const
{
    if (other.size() != size()) return false;
    for (std::size_t v = 0; v < size(); ++v) {
        const auto& mine = choices_[v];
        const auto& theirs = other.choices_[v];
        if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) return false;
    }
    return true;
}

Strategy initial_strategy(const EscapeArena& arena)
{
    Strategy out(arena.size());
    for (std::size_t v = 0; v < arena.node_count(); ++v) {
        const auto id = static_cast<NodeId>(v);
        if (arena.owner(id) == Player::Even) out.set(id, {arena.sink()});
    }
    return out;
}

void validate_strategy(const EscapeArena& arena, const Strategy& strategy)
{
    if (strategy.size() != arena.size()) throw InvariantViolation("strategy size does not match the arena");
    for (std::size_t v = 0; v < arena.size(); ++v) {
        const auto id = static_cast<NodeId>(v);
        const auto choices = strategy.choices(id);
        if (arena.is_sink(id) || arena.owner(id) == Player::Odd) {
            if (!choices.empty()) throw InvariantViolation("strategy assigns moves to a node player 0 does not own");
            continue;
        }
        if (choices.empty()) throw InvariantViolation("strategy leaves node " + std::to_string(v) + " without a move");
        const auto succ = arena.successors(id);
        for (NodeId t : choices) {
            if (std::find(succ.begin(), succ.end(), t) == succ.end()) {
                throw InvariantViolation("strategy uses non-edge " + std::to_string(v) + "->" + std::to_string(t));
            }
        }
    }
}

GraphView restricted_view(const EscapeArena& arena, const Strategy& strategy)
{
    GraphView g = arena.view();
    for (std::size_t v = 0; v < arena.node_count(); ++v) {
        if (g.owner[v] != Player::Even) continue;
        const auto choices = strategy.choices(static_cast<NodeId>(v));
        g.successors[v].assign(choices.begin(), choices.end());
    }
    return g;
}

bool is_reasonable(const EscapeArena& arena, const Strategy& strategy)
{
    const auto bad = find_one_dominated_cycle_nodes(restricted_view(arena, strategy));
    return std::none_of(bad.begin(), bad.end(), [](bool b) { return b; });
}

} // namespace nsi
