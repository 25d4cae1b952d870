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

#include "nsi/errors.hpp"
#include "nsi/profile.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace nsi;
using nsi::testing::key_compare;
using nsi::testing::P;

namespace {

ColorProfile random_profile(std::mt19937_64& rng, std::size_t d, int spread = 3)
{
    std::uniform_int_distribution<int> pick(0, 19);
    const int kind = pick(rng);
    if (kind == 0) return ColorProfile::neg_inf(d);
    if (kind == 1) return ColorProfile::pos_inf(d);
    std::uniform_int_distribution<std::int64_t> count(-spread, spread);
    std::vector<std::int64_t> c(d);
    for (auto& x : c) x = count(rng);
    return ColorProfile::from_counts(c);
}

ColorProfile random_finite(std::mt19937_64& rng, std::size_t d, int spread = 3)
{
    std::uniform_int_distribution<std::int64_t> count(-spread, spread);
    std::vector<std::int64_t> c(d);
    for (auto& x : c) x = count(rng);
    return ColorProfile::from_counts(c);
}

int sign(std::strong_ordering o)
{
    return o < 0 ? -1 : o > 0 ? 1 : 0;
}

} // namespace

TEST_SUITE("profile") {

TEST_CASE("compare follows the highest differing color")
{
    CHECK(compare(P({0, 0, 0}), P({1, 0, 0})) < 0);
    CHECK(compare(P({0, 1, 0}), P({0, 0, 0})) < 0);
    CHECK(compare(ColorProfile::neg_inf(3), P({-5, -5, -5})) < 0);
    CHECK(compare(P({2, 7, 1}), P({2, 7, 1})) == 0);
    CHECK(compare(ColorProfile::pos_inf(3), P({100, 0, 100})) > 0);
    CHECK(compare(ColorProfile::pos_inf(2), ColorProfile::pos_inf(2)) == 0);
}

TEST_CASE("compare rejects mismatched dimensions")
{
    CHECK_THROWS_AS((void)compare(P({0, 0}), P({0, 0, 0})), DimensionError);
    CHECK_THROWS_AS((void)compare(ColorProfile::pos_inf(2), ColorProfile::pos_inf(3)), DimensionError);
}

TEST_CASE("add and subtract")
{
    CHECK(add(P({1, 0, 2}), P({0, 3, 0})) == P({1, 3, 2}));
    CHECK(add(ColorProfile::zero(3), P({4, -1, 2})) == P({4, -1, 2}));
    CHECK(add(ColorProfile::pos_inf(3), P({5, 5, 5})).is_pos_inf());
    CHECK(add(P({5, 5, 5}), ColorProfile::neg_inf(3)).is_neg_inf());
    CHECK_THROWS_AS(add(ColorProfile::pos_inf(3), ColorProfile::neg_inf(3)), ArithmeticError);

    CHECK(subtract(P({2, 1, 0}), P({1, 1, 0})) == P({1, 0, 0}));
    CHECK(subtract(P({3, 2, 1}), P({3, 2, 1})) == ColorProfile::zero(3));
    const ColorProfile diff = subtract(P({0, 1, 0}), P({0, 0, 1}));
    CHECK(diff == P({0, 1, -1}));
    CHECK(key_compare(diff, ColorProfile::zero(3)) < 0);
    CHECK(diff < ColorProfile::zero(3));
    CHECK_THROWS_AS(subtract(ColorProfile::pos_inf(3), P({0, 0, 0})), ArithmeticError);
    CHECK_THROWS_AS(subtract(P({0, 0, 0}), ColorProfile::neg_inf(3)), ArithmeticError);
}

TEST_CASE("overflow is reported")
{
    const auto big = P({std::numeric_limits<std::int64_t>::max()});
    CHECK_THROWS_AS(add(big, P({1})), ArithmeticError);
}

TEST_CASE("unit profile and path value")
{
    CHECK(unit_profile(3, 1) == P({0, 1, 0}));
    CHECK(unit_profile(1, 0) == P({1}));
    CHECK(unit_profile(4, 3) == P({0, 0, 0, 1}));
    CHECK_THROWS_AS(unit_profile(3, 3), DimensionError);
    CHECK_THROWS_AS(unit_profile(3, -1), DimensionError);

    CHECK(path_value(2, std::vector<int>{}) == ColorProfile::zero(2));
    CHECK(path_value(2, std::vector<int>{0, 1, 1}) == P({1, 2}));
    const ColorProfile even_loop = path_value(3, std::vector<int>{2});
    CHECK(even_loop == P({0, 0, 1}));
    CHECK(even_loop > ColorProfile::zero(3));
    CHECK_THROWS_AS(path_value(2, std::vector<int>{2}), DimensionError);
}

TEST_CASE("rendering")
{
    CHECK(P({0, 1, -1}).to_string() == "(0,1,-1)");
    CHECK(ColorProfile::neg_inf(2).to_string() == "-inf");
    CHECK(ColorProfile::pos_inf(2).to_string() == "+inf");
}

TEST_CASE("compare agrees with the sort-key oracle")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const std::size_t d = 1 + rng() % 5;
        const auto a = random_profile(rng, d);
        const auto b = random_profile(rng, d);
        CHECK(sign(compare(a, b)) == key_compare(a, b));
    }
}

TEST_CASE("addition is monotone and subtraction inverts it")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t d = 1 + rng() % 5;
        const auto a = random_finite(rng, d);
        const auto b = random_finite(rng, d);
        const auto c = random_finite(rng, d);
        if (a < b) CHECK(a + c < b + c);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("a cycle beats the zero profile iff its top color is even")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t d = 1 + rng() % 6;
        std::vector<int> colors(1 + rng() % 7);
        for (auto& c : colors) c = static_cast<int>(rng() % d);
        const int top = *std::max_element(colors.begin(), colors.end());
        const auto value = path_value(d, colors);
        if (top % 2 == 0) {
            CHECK(value > ColorProfile::zero(d));
        } else {
            CHECK(value < ColorProfile::zero(d));
        }
    }
}

}
