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

// Test-only helpers and independent oracles. Nothing here calls into the
// solver's valuation code; the oracles work straight from the definitions.

#include "nsi/arena.hpp"
#include "nsi/profile.hpp"
#include "nsi/strategy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace nsi::testing {

struct NodeSpec {
    int owner;
    int color;
    std::vector<NodeId> successors;
};

inline ParityGame make_game(std::initializer_list<NodeSpec> nodes)
{
    std::vector<Player> owner;
    std::vector<int> color;
    std::vector<std::vector<NodeId>> succ;
    for (const auto& n : nodes) {
        owner.push_back(n.owner == 0 ? Player::Even : Player::Odd);
        color.push_back(n.color);
        succ.push_back(n.successors);
    }
    return ParityGame(owner, color, succ);
}

inline ColorProfile P(std::vector<std::int64_t> counts)
{
    return ColorProfile::from_counts(std::move(counts));
}

/// Order by an explicit sort key: scan from the top color down, flipping odd colors.
inline int key_compare(const ColorProfile& a, const ColorProfile& b)
{
    auto rank = [](const ColorProfile& p) { return p.is_neg_inf() ? 0 : p.is_finite() ? 1 : 2; };
    if (rank(a) != rank(b) || !a.is_finite()) return rank(a) < rank(b) ? -1 : rank(a) > rank(b) ? 1 : 0;
    std::vector<std::int64_t> ka, kb;
    for (std::size_t k = a.dimension(); k-- > 0;) {
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        ka.push_back(sign * a.counts()[k]);
        kb.push_back(sign * b.counts()[k]);
    }
    if (ka < kb) return -1;
    if (kb < ka) return 1;
    return 0;
}

/// Nodes on some closed walk whose largest color has the given parity: for each
/// candidate top node u, a walk u -> v -> u through colors <= color(u).
inline std::vector<bool> brute_force_dominated(const GraphView& g, Player parity)
{
    const std::size_t n = g.size();
    std::vector<bool> out(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        const int top = g.color[u];
        if (parity_of(top) != parity) continue;
        // reach[a][b]: a path of length >= 1 from a to b using only colors <= top.
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a) {
            if (g.color[a] > top) continue;
            for (NodeId b : g.successors[a]) {
                if (g.color[static_cast<std::size_t>(b)] <= top) reach[a][static_cast<std::size_t>(b)] = true;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t a = 0; a < n; ++a) {
                if (!reach[a][k]) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (reach[k][b]) reach[a][b] = true;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (reach[u][v] && reach[v][u]) out[v] = true;
        }
    }
    return out;
}

/// Attractor by iterating the set definition until nothing changes; returns ranks (-1 outside).
inline std::vector<int> literal_attractor(const GraphView& g, Player player, const std::vector<bool>& target)
{
    std::vector<int> rank(g.size(), -1);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (target[v]) rank[v] = 0;
    }
    for (int i = 0;; ++i) {
        std::vector<std::size_t> added;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (rank[v] != -1 || g.successors[v].empty()) continue;
            const auto& succ = g.successors[v];
            auto in = [&](NodeId w) { return rank[static_cast<std::size_t>(w)] != -1; };
            const bool join = g.owner[v] == player ? std::any_of(succ.begin(), succ.end(), in)
                                                   : std::all_of(succ.begin(), succ.end(), in);
            if (join) added.push_back(v);
        }
        if (added.empty()) return rank;
        for (auto v : added) rank[v] = i + 1;
    }
}

/**
 * Valuation straight from its definition: the least, over memoryless player-1
 * strategies, of the greatest play value in the restricted arena. A play is
 * worth +inf when it can loop in an even-dominated cycle; otherwise the graph
 * reachable from the node is acyclic and the best finite path to the sink is
 * taken. Exponential; small arenas only. Requires a reasonable strategy.
 */
inline std::vector<ColorProfile> definitional_valuation(const EscapeArena& arena, const Strategy& sigma)
{
    const std::size_t n = arena.node_count();
    const auto d = static_cast<std::size_t>(arena.colors());
    std::vector<NodeId> p1;
    for (std::size_t v = 0; v < n; ++v) {
        if (arena.owner(static_cast<NodeId>(v)) == Player::Odd) p1.push_back(static_cast<NodeId>(v));
    }

    std::vector<ColorProfile> best(n + 1, ColorProfile::pos_inf(d));
    best[n] = ColorProfile::zero(d);
    std::vector<std::size_t> digit(p1.size(), 0);
    for (;;) {
        GraphView g = arena.view();
        for (std::size_t v = 0; v < n; ++v) {
            if (g.owner[v] == Player::Even) {
                auto c = sigma.choices(static_cast<NodeId>(v));
                g.successors[v].assign(c.begin(), c.end());
            }
        }
        for (std::size_t i = 0; i < p1.size(); ++i) {
            auto& succ = g.successors[static_cast<std::size_t>(p1[i])];
            succ = {succ[digit[i]]};
        }

        const auto even_cycle = brute_force_dominated(g, Player::Even);
        std::map<NodeId, ColorProfile> memo;
        std::function<ColorProfile(NodeId)> value = [&](NodeId v) -> ColorProfile {
            if (arena.is_sink(v)) return ColorProfile::zero(d);
            if (auto it = memo.find(v); it != memo.end()) return it->second;
            std::vector<bool> src(g.size(), false);
            src[static_cast<std::size_t>(v)] = true;
            auto reach = reachable_from(g, src);
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (reach[w] && even_cycle[w]) return memo[v] = ColorProfile::pos_inf(d);
            }
            std::optional<ColorProfile> top;
            for (NodeId w : g.successors[static_cast<std::size_t>(v)]) {
                ColorProfile c = value(w);
                if (!top || c > *top) top = c;
            }
            return memo[v] = unit_profile(d, arena.color(v)) + *top;
        };
        for (std::size_t v = 0; v < n; ++v) {
            ColorProfile c = value(static_cast<NodeId>(v));
            if (c < best[v]) best[v] = c;
        }

        std::size_t i = 0;
        for (; i < p1.size(); ++i) {
            if (++digit[i] < arena.game().successors(p1[i]).size()) break;
            digit[i] = 0;
        }
        if (i == p1.size()) break;
    }
    return best;
}

} // namespace nsi::testing
