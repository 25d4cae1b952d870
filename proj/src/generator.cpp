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

#include "nsi/generator.hpp"

#include "nsi/errors.hpp"

#include <limits>

namespace nsi {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0) throw InvariantViolation("empty draw range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

ParityGame generate_game(const GeneratorParams& params)
{
    if (params.nodes < 1) throw FormatError("--nodes must be at least 1");
    if (params.degree < 1) throw FormatError("--degree must be at least 1");
    if (params.colors < 1) throw FormatError("--colors must be at least 1");
    if (!(params.p0_fraction >= 0.0 && params.p0_fraction <= 1.0)) throw FormatError("--p0-fraction must be in [0,1]");
    if (params.nodes > (std::size_t{1} << 30)) throw FormatError("--nodes too large");

    std::mt19937_64 rng(params.seed);
    const std::size_t n = params.nodes;
    // 2^53 grid for the owner draw keeps it exact and portable.
    constexpr std::uint64_t kGrid = std::uint64_t{1} << 53;
    const auto p0_threshold = static_cast<std::uint64_t>(params.p0_fraction * static_cast<double>(kGrid));

    std::vector<Player> owner(n);
    std::vector<int> color(n);
    std::vector<std::vector<NodeId>> successors(n);
    std::vector<bool> used(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        owner[v] = draw_below(rng, kGrid) < p0_threshold ? Player::Even : Player::Odd;
        color[v] = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(params.colors)));
        const std::size_t max_degree = std::min(params.degree, n);
        const std::size_t out = 1 + draw_below(rng, max_degree);
        auto& succ = successors[v];
        while (succ.size() < out) {
            const auto t = static_cast<NodeId>(draw_below(rng, n));
            if (used[static_cast<std::size_t>(t)]) continue;
            used[static_cast<std::size_t>(t)] = true;
            succ.push_back(t);
        }
        for (NodeId t : succ) used[static_cast<std::size_t>(t)] = false;
    }
    return ParityGame(std::move(owner), std::move(color), std::move(successors));
}

ParityGame random_small_game(std::uint64_t seed, std::size_t max_nodes, int max_colors, std::size_t max_degree)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    GeneratorParams params;
    params.nodes = 1 + draw_below(rng, max_nodes);
    params.colors = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_colors)));
    params.degree = 1 + draw_below(rng, max_degree);
    params.p0_fraction = 0.5;
    params.seed = rng();
    return generate_game(params);
}

} // namespace nsi
