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

#include "nsi/oracle.hpp"

#include "nsi/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace nsi {

std::uint64_t oracle_cap_from_env()
{
    const char* raw = std::getenv("SOLVER_ORACLE_CAP");
    if (!raw || !*raw) return kDefaultOracleCap;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0) return kDefaultOracleCap;
    return value;
}

OracleResult oracle_solve(const ParityGame& game, std::uint64_t cap)
{
    const std::size_t n = game.size();
    std::vector<NodeId> choosers;
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < n; ++v) {
        const auto id = static_cast<NodeId>(v);
        if (game.owner(id) != Player::Even) continue;
        choosers.push_back(id);
        const std::uint64_t k = game.successors(id).size();
        if (total > cap / k) throw LimitExceeded("instance too large for oracle");
        total *= k;
    }

    OracleResult out;
    std::vector<bool> won(n, false);
    std::vector<std::size_t> digit(choosers.size(), 0);
    const GraphView base = game.view();
    for (;;) {
        GraphView graph = base;
        std::vector<NodeId> choice(n, kNoNode);
        for (std::size_t i = 0; i < choosers.size(); ++i) {
            const auto v = static_cast<std::size_t>(choosers[i]);
            choice[v] = game.successors(choosers[i])[digit[i]];
            graph.successors[v] = {choice[v]};
        }

        // Lost under this strategy: anything that reaches an odd-dominated cycle.
        const std::vector<bool> lost = reachable_from(
            [&] {
                GraphView reversed{graph.owner, graph.color, std::vector<std::vector<NodeId>>(n)};
                for (std::size_t v = 0; v < n; ++v) {
                    for (NodeId w : graph.successors[v]) reversed.successors[static_cast<std::size_t>(w)].push_back(static_cast<NodeId>(v));
                }
                return reversed;
            }(),
            find_one_dominated_cycle_nodes(graph));
        for (std::size_t v = 0; v < n; ++v) {
            if (lost[v] || won[v]) continue;
            won[v] = true;
            out.witness[static_cast<NodeId>(v)] = choice;
        }

        std::size_t i = 0;
        for (; i < choosers.size(); ++i) {
            if (++digit[i] < game.successors(choosers[i]).size()) break;
            digit[i] = 0;
        }
        if (i == choosers.size()) break;
    }

    for (std::size_t v = 0; v < n; ++v) (won[v] ? out.w0 : out.w1).push_back(static_cast<NodeId>(v));
    return out;
}

CrosscheckReport crosscheck(const ParityGame& game, const SolveOptions& options, std::uint64_t cap)
{
    const OracleResult expected = oracle_solve(game, cap);
    const SolveResult actual = solve(game, options);

    CrosscheckReport report;
    report.agree = expected.w0 == actual.w0 && expected.w1 == actual.w1;
    if (report.agree) return report;

    nlohmann::ordered_json diff;
    diff["policy"] = options.policy.name();
    diff["backend"] = backend_name(options.backend);
    diff["game"] = serialize_pgsolver(game);
    diff["oracle"] = {{"w0", expected.w0}, {"w1", expected.w1}};
    diff["solver"] = {{"w0", actual.w0}, {"w1", actual.w1}};
    report.diff = diff.dump(2);
    return report;
}

void write_mismatch_artifacts(const std::string& dir, const std::string& stem, const ParityGame& game,
                              const CrosscheckReport& report)
{
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/" + stem + ".pg", std::ios::binary) << serialize_pgsolver(game);
    std::ofstream(dir + "/" + stem + ".json", std::ios::binary) << report.diff << '\n';
}

} // namespace nsi
