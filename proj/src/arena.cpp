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

#include "nsi/arena.hpp"

#include "nsi/errors.hpp"

#include <numeric>

namespace nsi {

EscapeArena::EscapeArena(ParityGame game) : game_(std::move(game)), original_(game_.size()), colors_(game_.colors())
{
    std::iota(original_.begin(), original_.end(), 0);
}

EscapeArena::EscapeArena(ParityGame game, std::vector<NodeId> original_ids, int colors)
    : game_(std::move(game)), original_(std::move(original_ids)), colors_(colors)
{
    if (original_.size() != game_.size()) throw InvariantViolation("original id map has the wrong size");
    if (colors_ < game_.colors()) throw DimensionError("arena dimension does not cover the game's colors");
}

std::vector<NodeId> EscapeArena::successors(NodeId v) const
{
    if (is_sink(v)) return {};
    std::vector<NodeId> out = game_.successors(v);
    if (game_.owner(v) == Player::Even) out.push_back(sink());
    return out;
}

GraphView EscapeArena::view() const
{
    GraphView g = game_.view();
    g.owner.push_back(Player::Even);
    g.color.push_back(0);
    g.successors.emplace_back();
    for (std::size_t v = 0; v < game_.size(); ++v) {
        if (g.owner[v] == Player::Even) g.successors[v].push_back(sink());
    }
    return g;
}

GraphView EscapeArena::player1_view() const
{
    std::vector<bool> keep(size(), false);
    for (std::size_t v = 0; v < game_.size(); ++v) keep[v] = game_.owner(static_cast<NodeId>(v)) == Player::Odd;
    return induced_view(view(), keep);
}

EscapeArena build_escape_arena(const ParityGame& game)
{
    return EscapeArena(game);
}

ParityGame subgame(const ParityGame& game, const std::vector<bool>& keep, std::vector<NodeId>& kept_ids)
{
    const std::size_t n = game.size();
    std::vector<NodeId> new_id(n, kNoNode);
    kept_ids.clear();
    for (std::size_t v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        new_id[v] = static_cast<NodeId>(kept_ids.size());
        kept_ids.push_back(static_cast<NodeId>(v));
    }

    std::vector<Player> owner;
    std::vector<int> color;
    std::vector<std::vector<NodeId>> successors;
    std::vector<std::string> names;
    for (NodeId v : kept_ids) {
        owner.push_back(game.owner(v));
        color.push_back(game.color(v));
        names.push_back(game.name(v));
        auto& succ = successors.emplace_back();
        for (NodeId w : game.successors(v)) {
            if (new_id[static_cast<std::size_t>(w)] != kNoNode) succ.push_back(new_id[static_cast<std::size_t>(w)]);
        }
        if (succ.empty()) throw InvariantViolation("subgame leaves node " + std::to_string(v) + " without successors");
    }
    return ParityGame(std::move(owner), std::move(color), std::move(successors), std::move(names));
}

namespace {

/**
 * Player-1 strategy that keeps every play inside odd-dominated cycles of the
 * player-1 subgraph. Returns the covered nodes; their moves go into `strategy`.
 *
 * For each odd color c (highest first) and each SCC of the not yet covered
 * nodes of color <= c that contains a c-colored node and an edge: nodes of
 * color c move anywhere inside the SCC, all others follow an attractor
 * towards the c-colored nodes. Every cycle then visits color c as its maximum.
 */
std::vector<bool> cover_odd_cycles(const GraphView& graph, std::vector<NodeId>& strategy)
{
    const std::size_t n = graph.size();
    std::vector<bool> covered(n, false);
    int max_color = -1;
    for (int c : graph.color) max_color = std::max(max_color, c);

    std::vector<bool> active(n);
    for (int c = max_color; c >= 0; --c) {
        if (parity_of(c) != Player::Odd) continue;
        for (std::size_t v = 0; v < n; ++v) active[v] = !covered[v] && graph.color[v] <= c;

        for (const auto& component : strongly_connected_components(graph, active)) {
            std::vector<bool> inside(n, false);
            std::vector<bool> top(n, false);
            bool has_top = false;
            for (NodeId v : component) {
                inside[static_cast<std::size_t>(v)] = true;
                if (graph.color[static_cast<std::size_t>(v)] == c) {
                    top[static_cast<std::size_t>(v)] = true;
                    has_top = true;
                }
            }
            if (!has_top) continue;

            const GraphView local = induced_view(graph, inside);
            bool has_edge = false;
            for (NodeId v : component) has_edge = has_edge || !local.successors[static_cast<std::size_t>(v)].empty();
            if (!has_edge) continue;

            // All nodes are player 1 here, so the attractor reaches the whole SCC.
            const AttractorResult attr = attractor(local, Player::Odd, top);
            for (NodeId v : component) {
                const auto vi = static_cast<std::size_t>(v);
                covered[vi] = true;
                strategy[vi] = top[vi] ? local.successors[vi].front() : attr.strategy[vi];
                if (strategy[vi] == kNoNode) throw InvariantViolation("odd cycle cover left a node without a move");
            }
        }
    }
    return covered;
}

} // namespace

Preprocessed preprocess(const EscapeArena& arena)
{
    const ParityGame& game = arena.game();
    const std::size_t n = game.size();

    const GraphView p1 = arena.player1_view();
    const std::vector<bool> dominated = find_one_dominated_cycle_nodes(p1);

    std::vector<NodeId> cover_strategy(p1.size(), kNoNode);
    const std::vector<bool> covered = cover_odd_cycles(p1, cover_strategy);

    const GraphView plain = game.view();
    std::vector<bool> target(n, false);
    for (std::size_t v = 0; v < n; ++v) target[v] = dominated[v];
    const AttractorResult won = attractor(plain, Player::Odd, target);

    // Same region from the covered core; they must agree.
    std::vector<bool> core(covered.begin(), covered.begin() + static_cast<std::ptrdiff_t>(n));
    const AttractorResult won_from_core = attractor(plain, Player::Odd, core);
    if (won_from_core.member != won.member) throw InvariantViolation("odd cycle cover does not span the pre-won region");

    Preprocessed out;
    out.player1_strategy.assign(n, kNoNode);
    std::vector<bool> keep(n, true);
    for (std::size_t v = 0; v < n; ++v) {
        if (!won.member[v]) continue;
        keep[v] = false;
        out.pre_won.push_back(static_cast<NodeId>(v));
        if (game.owner(static_cast<NodeId>(v)) != Player::Odd) continue;
        out.player1_strategy[v] = covered[v] ? cover_strategy[v] : won_from_core.strategy[v];
    }

    std::vector<NodeId> kept;
    ParityGame reduced = subgame(game, keep, kept);
    std::vector<NodeId> original(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) original[i] = arena.original_id(kept[i]);
    out.arena = EscapeArena(std::move(reduced), std::move(original), arena.colors());
    return out;
}

} // namespace nsi
