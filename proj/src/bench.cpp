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

#include "nsi/bench.hpp"

#include "nsi/errors.hpp"
#include "nsi/generator.hpp"

#include <algorithm>
#include <map>

namespace nsi {

BenchReport run_bench(const BenchOptions& options, const std::function<void(const BenchRecord&)>& on_record)
{
    BenchReport report;
    std::map<std::uint64_t, int> all_switches, deterministic_all;

    for (std::size_t si = 0; si < options.sizes.size(); ++si) {
        for (std::size_t i = 0; i < options.count; ++i) {
            const std::uint64_t seed = options.seed + si * options.count + i;
            GeneratorParams params;
            params.nodes = options.sizes[si];
            params.degree = options.degree;
            params.colors = options.colors;
            params.p0_fraction = options.p0_fraction;
            params.seed = seed;
            const ParityGame game = generate_game(params);

            for (const auto& policy : options.policies) {
                SolveOptions solve_options;
                solve_options.policy = policy;
                solve_options.backend = options.backend;
                const SolveResult result = solve(game, solve_options);

                BenchRecord record;
                record.seed = seed;
                record.nodes = game.size();
                record.player0_nodes = game.player0_count();
                record.colors = game.colors();
                record.degree = options.degree;
                record.policy = policy.name();
                record.iterations = result.iterations;
                record.general_bound = general_iteration_bound(game.size(), game.colors());
                record.bound = options.degree <= 2 ? out_degree_two_bound(record.player0_nodes) : record.general_bound;
                for (const auto& s : result.stats) record.wall_ms += s.wall_ms;

                if (record.iterations > record.bound || record.iterations > record.general_bound) {
                    throw InvariantViolation("iteration bound exceeded: seed " + std::to_string(seed) + ", policy "
                                             + record.policy + ", " + std::to_string(record.iterations)
                                             + " iterations");
                }
                report.max_ratio = std::max(report.max_ratio, record.ratio());
                if (policy.kind == PolicyKind::AllSwitches) all_switches[seed] = record.iterations;
                if (policy.kind == PolicyKind::DeterministicAll) deterministic_all[seed] = record.iterations;
                if (on_record) on_record(record);
                report.records.push_back(std::move(record));
            }
        }
    }

    for (const auto& [seed, iterations] : all_switches) {
        auto it = deterministic_all.find(seed);
        if (it == deterministic_all.end()) continue;
        ++report.paired;
        if (iterations <= it->second) ++report.all_switches_not_worse;
    }
    return report;
}

Json to_json(const BenchRecord& record, bool with_timing)
{
    Json out;
    out["seed"] = record.seed;
    out["n"] = record.nodes;
    out["v0"] = record.player0_nodes;
    out["d"] = record.colors;
    out["degree"] = record.degree;
    out["policy"] = record.policy;
    out["iterations"] = record.iterations;
    out["bound"] = record.bound;
    out["general_bound"] = record.general_bound;
    out["ratio"] = record.ratio();
    if (with_timing) out["wall_ms"] = record.wall_ms;
    return out;
}

Json aggregate_json(const BenchReport& report)
{
    Json out;
    out["aggregate"] = true;
    out["records"] = report.records.size();
    out["max_ratio"] = report.max_ratio;
    out["paired"] = report.paired;
    out["all_switches_not_worse"] = report.all_switches_not_worse;
    if (report.paired > 0) {
        out["all_switches_not_worse_fraction"] =
            static_cast<double>(report.all_switches_not_worse) / static_cast<double>(report.paired);
    }
    return out;
}

} // namespace nsi
