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

#include <cstdint>
#include <random>

namespace nsi {

/// Uniform draw from [0, bound) by rejection; identical on every platform.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

struct GeneratorParams {
    std::size_t nodes = 10;
    std::size_t degree = 2;
    int colors = 4;
    double p0_fraction = 0.5;
    std::uint64_t seed = 1;
};

/**
 * Random game: each node gets a uniform color in [0, colors), owner 0 with
 * probability p0_fraction, and between 1 and `degree` distinct uniformly
 * chosen successors. Deterministic in the seed. Throws FormatError on
 * out-of-range parameters.
 */
ParityGame generate_game(const GeneratorParams& params);

/// Small mixed game for cross-checking: 1..max_nodes nodes, <= max_colors colors, out-degree <= max_degree.
ParityGame random_small_game(std::uint64_t seed, std::size_t max_nodes = 8, int max_colors = 4,
                             std::size_t max_degree = 3);

} // namespace nsi
