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

#include "nsi/graph.hpp"

#include <algorithm>
#include <deque>

namespace nsi {

std::vector<std::vector<NodeId>> strongly_connected_components(const GraphView& graph, const std::vector<bool>& active)
{
    const std::size_t n = graph.size();
    auto is_active = [&](NodeId v) { return active.empty() || active[static_cast<std::size_t>(v)]; };

    // Iterative Tarjan; frames hold (node, next successor position).
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::vector<std::pair<NodeId, std::size_t>> frames;
    std::vector<std::vector<NodeId>> components;
    int counter = 0;

    for (std::size_t root = 0; root < n; ++root) {
        const auto r = static_cast<NodeId>(root);
        if (index[root] != -1 || !is_active(r)) continue;

        frames.emplace_back(r, 0);
        index[root] = low[root] = counter++;
        stack.push_back(r);
        on_stack[root] = true;

        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& succ = graph.successors[static_cast<std::size_t>(v)];
            if (pos < succ.size()) {
                const NodeId w = succ[pos++];
                if (!is_active(w)) continue;
                const auto wi = static_cast<std::size_t>(w);
                if (index[wi] == -1) {
                    index[wi] = low[wi] = counter++;
                    stack.push_back(w);
                    on_stack[wi] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[wi]) {
                    auto& lv = low[static_cast<std::size_t>(v)];
                    lv = std::min(lv, index[wi]);
                }
                continue;
            }

            const NodeId done = v;
            const auto di = static_cast<std::size_t>(done);
            frames.pop_back();
            if (!frames.empty()) {
                auto& lp = low[static_cast<std::size_t>(frames.back().first)];
                lp = std::min(lp, low[di]);
            }
            if (low[di] == index[di]) {
                std::vector<NodeId> component;
                NodeId w = kNoNode;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = false;
                    component.push_back(w);
                } while (w != done);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    return components;
}

std::vector<bool> dominated_cycle_nodes(const GraphView& graph, Player parity)
{
    const std::size_t n = graph.size();
    std::vector<bool> result(n, false);
    int max_color = -1;
    for (int c : graph.color) max_color = std::max(max_color, c);

    std::vector<bool> active(n);
    std::vector<bool> in_component(n, false);
    for (int c = max_color; c >= 0; --c) {
        if (parity_of(c) != parity) continue;
        bool any = false;
        for (std::size_t v = 0; v < n; ++v) {
            active[v] = graph.color[v] <= c;
            any = any || active[v];
        }
        if (!any) break;

        for (const auto& component : strongly_connected_components(graph, active)) {
            bool has_top = false;
            for (NodeId v : component) has_top = has_top || graph.color[static_cast<std::size_t>(v)] == c;
            if (!has_top) continue;

            for (NodeId v : component) in_component[static_cast<std::size_t>(v)] = true;
            bool has_edge = false;
            for (NodeId v : component) {
                for (NodeId w : graph.successors[static_cast<std::size_t>(v)]) {
                    if (in_component[static_cast<std::size_t>(w)]) {
                        has_edge = true;
                        break;
                    }
                }
                if (has_edge) break;
            }
            for (NodeId v : component) {
                in_component[static_cast<std::size_t>(v)] = false;
                if (has_edge) result[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    return result;
}

AttractorResult attractor(const GraphView& graph, Player player, const std::vector<bool>& target)
{
    const std::size_t n = graph.size();
    AttractorResult out;
    out.member.assign(n, false);
    out.rank.assign(n, AttractorResult::kUnreached);
    out.strategy.assign(n, kNoNode);

    std::vector<std::vector<NodeId>> predecessors(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (NodeId w : graph.successors[v]) predecessors[static_cast<std::size_t>(w)].push_back(static_cast<NodeId>(v));
    }

    // Opponent nodes join once every successor has joined.
    std::vector<std::size_t> remaining(n);
    for (std::size_t v = 0; v < n; ++v) remaining[v] = graph.successors[v].size();

    std::deque<NodeId> queue;
    for (std::size_t v = 0; v < n && v < target.size(); ++v) {
        if (!target[v]) continue;
        out.member[v] = true;
        out.rank[v] = 0;
        queue.push_back(static_cast<NodeId>(v));
    }

    // FIFO order processes nodes by non-decreasing rank, so ranks equal layer numbers.
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        const int next_rank = out.rank[static_cast<std::size_t>(v)] + 1;
        for (NodeId u : predecessors[static_cast<std::size_t>(v)]) {
            const auto ui = static_cast<std::size_t>(u);
            if (out.member[ui]) continue;
            if (graph.owner[ui] == player) {
                out.strategy[ui] = v;
            } else if (--remaining[ui] > 0) {
                continue;
            }
            out.member[ui] = true;
            out.rank[ui] = next_rank;
            queue.push_back(u);
        }
    }
    return out;
}

std::vector<bool> reachable_from(const GraphView& graph, const std::vector<bool>& sources)
{
    const std::size_t n = graph.size();
    std::vector<bool> seen(n, false);
    std::vector<NodeId> todo;
    for (std::size_t v = 0; v < n && v < sources.size(); ++v) {
        if (sources[v]) {
            seen[v] = true;
            todo.push_back(static_cast<NodeId>(v));
        }
    }
    while (!todo.empty()) {
        const NodeId v = todo.back();
        todo.pop_back();
        for (NodeId w : graph.successors[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                todo.push_back(w);
            }
        }
    }
    return seen;
}

GraphView induced_view(const GraphView& graph, const std::vector<bool>& keep)
{
    GraphView out{graph.owner, graph.color, std::vector<std::vector<NodeId>>(graph.size())};
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (!keep[v]) continue;
        for (NodeId w : graph.successors[v]) {
            if (keep[static_cast<std::size_t>(w)]) out.successors[v].push_back(w);
        }
    }
    return out;
}

} // namespace nsi
