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
#include "nsi/graph.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nsi;
using nsi::testing::brute_force_dominated;
using nsi::testing::literal_attractor;
using nsi::testing::make_game;

TEST_SUITE("graph") {

TEST_CASE("strongly connected components")
{
    GraphView g{{Player::Even, Player::Even, Player::Even, Player::Even},
                {0, 0, 0, 0},
                {{1}, {2}, {0, 3}, {}}};
    auto comps = strongly_connected_components(g);
    std::sort(comps.begin(), comps.end());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});
    CHECK(comps[1] == std::vector<NodeId>{3});

    auto restricted = strongly_connected_components(g, {true, true, false, true});
    CHECK(restricted.size() == 3);
}

TEST_CASE("one-dominated cycle detection on small cases")
{
    const auto odd_loop = make_game({{1, 1, {0}}}).view();
    CHECK(find_one_dominated_cycle_nodes(odd_loop) == std::vector<bool>{true});

    const auto even_loop = make_game({{1, 2, {0}}}).view();
    CHECK(find_one_dominated_cycle_nodes(even_loop) == std::vector<bool>{false});

    const auto mixed = make_game({{1, 1, {1}}, {1, 2, {0}}}).view();
    CHECK(find_one_dominated_cycle_nodes(mixed) == std::vector<bool>{false, false});

    // The odd cycle 0-1 hides inside an SCC whose top color 2 is even.
    const auto nested = make_game({{1, 1, {1}}, {1, 0, {0, 2}}, {1, 2, {1}}}).view();
    CHECK(find_one_dominated_cycle_nodes(nested) == std::vector<bool>{true, true, false});
}

TEST_CASE("dominated cycles match simple-cycle enumeration")
{
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const ParityGame game = random_small_game(seed, 7, 5, 3);
        const GraphView g = game.view();
        CHECK(dominated_cycle_nodes(g, Player::Odd) == brute_force_dominated(g, Player::Odd));
        CHECK(dominated_cycle_nodes(g, Player::Even) == brute_force_dominated(g, Player::Even));
    }
}

TEST_CASE("attractor examples")
{
    const auto g = make_game({{1, 0, {1}}, {0, 0, {0}}}).view();
    auto empty = attractor(g, Player::Odd, {false, false});
    CHECK(empty.member == std::vector<bool>{false, false});

    auto all = attractor(g, Player::Odd, {true, true});
    CHECK(all.rank == std::vector<int>{0, 0});

    // v0 -> v1 -> sink, both owned by player 1.
    GraphView chain{{Player::Odd, Player::Odd, Player::Even}, {0, 0, 0}, {{1}, {2}, {}}};
    auto a = attractor(chain, Player::Odd, {false, false, true});
    CHECK(a.member == std::vector<bool>{true, true, true});
    CHECK(a.rank == std::vector<int>{2, 1, 0});
    CHECK(a.strategy[0] == 1);
    CHECK(a.strategy[1] == 2);
}

TEST_CASE("attractor matches the set iteration and its strategy decreases rank")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const GraphView g = random_small_game(seed, 8, 4, 3).view();
        std::vector<bool> target(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) target[v] = rng() % 4 == 0;
        const Player player = seed % 2 ? Player::Odd : Player::Even;
        const auto fast = attractor(g, player, target);
        const auto slow = literal_attractor(g, player, target);
        for (std::size_t v = 0; v < g.size(); ++v) {
            CHECK(fast.member[v] == (slow[v] != -1));
            if (slow[v] != -1) CHECK(fast.rank[v] == slow[v]);
            if (fast.member[v] && fast.rank[v] > 0 && g.owner[v] == player) {
                CHECK(fast.rank[static_cast<std::size_t>(fast.strategy[v])] < fast.rank[v]);
            }
        }
        // Idempotent and monotone.
        CHECK(attractor(g, player, fast.member).member == fast.member);
        std::vector<bool> bigger = target;
        bigger[rng() % g.size()] = true;
        const auto grown = attractor(g, player, bigger);
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (fast.member[v]) CHECK(grown.member[v]);
        }
    }
}

TEST_CASE("reachability and induced views")
{
    GraphView g{{Player::Even, Player::Even, Player::Even}, {0, 0, 0}, {{1}, {1}, {0}}};
    CHECK(reachable_from(g, {true, false, false}) == std::vector<bool>{true, true, false});
    const auto sub = induced_view(g, {true, false, true});
    CHECK(sub.successors[0].empty());
    CHECK(sub.successors[2] == std::vector<NodeId>{0});
}

}
