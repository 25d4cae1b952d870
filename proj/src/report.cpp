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

#include "nsi/report.hpp"

#include <sstream>

namespace nsi {

namespace {

Json moves_to_json(const std::map<NodeId, NodeId>& moves)
{
    Json out = Json::object();
    for (const auto& [from, to] : moves) out[std::to_string(from)] = to;
    return out;
}

std::string format_moves(const std::map<NodeId, NodeId>& moves)
{
    if (moves.empty()) return "(empty)";
    std::ostringstream out;
    bool first = true;
    for (const auto& [from, to] : moves) {
        if (!first) out << ' ';
        first = false;
        out << from << "->" << to;
    }
    return out.str();
}

} // namespace

Json to_json(const SolveResult& result, bool with_timing, bool with_valuation)
{
    Json out;
    out["w0"] = result.w0;
    out["w1"] = result.w1;
    out["strategy0"] = moves_to_json(result.strategy0);
    out["strategy1"] = moves_to_json(result.strategy1);
    out["iterations"] = result.iterations;
    out["policy"] = result.policy;
    Json stats = Json::array();
    for (const auto& s : result.stats) {
        Json row;
        row["iteration"] = s.iteration;
        row["strategy_edges"] = s.strategy_edges;
        row["improving_edges"] = s.improving_edges;
        row["strict"] = s.strict;
        row["strict_sources"] = s.strict_sources;
        if (s.bellman_ford_passes >= 0) row["bellman_ford_passes"] = s.bellman_ford_passes;
        if (with_timing) row["wall_ms"] = s.wall_ms;
        stats.push_back(std::move(row));
    }
    out["stats"] = std::move(stats);
    if (with_valuation) {
        Json values = Json::object();
        for (std::size_t v = 0; v < result.valuation.size(); ++v) {
            if (result.valuation[v]) values[std::to_string(v)] = result.valuation[v]->to_string();
        }
        out["valuation"] = std::move(values);
    }
    return out;
}

Json valuation_to_json(const EscapeArena& arena, const Valuation& values)
{
    Json out = Json::object();
    for (std::size_t v = 0; v < arena.node_count(); ++v) {
        const auto id = static_cast<NodeId>(v);
        out[std::to_string(arena.original_id(id))] = values[id].to_string();
    }
    return out;
}

std::string format_node_list(const std::vector<NodeId>& nodes)
{
    if (nodes.empty()) return "(empty)";
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out << ' ';
        out << nodes[i];
    }
    return out.str();
}

std::string format_result(const SolveResult& result)
{
    std::ostringstream out;
    out << "W0: " << format_node_list(result.w0) << '\n';
    out << "W1: " << format_node_list(result.w1) << '\n';
    out << "strategy0: " << format_moves(result.strategy0) << '\n';
    out << "strategy1: " << format_moves(result.strategy1) << '\n';
    out << "iterations: " << result.iterations << '\n';
    return out.str();
}

} // namespace nsi
