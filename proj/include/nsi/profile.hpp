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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nsi {

/**
 * A color profile: either -inf, +inf, or a vector of d signed counts where
 * entry k counts occurrences of color k along a finite play.
 *
 * Profiles are totally ordered from player 0's point of view. Between finite
 * profiles the highest differing color decides: more of an even color is
 * better, more of an odd color is worse.
 *
 * Every profile carries its dimension d, including the infinities, so that
 * mixing profiles of different games is caught early.
 */
class ColorProfile {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    ColorProfile() = default;

    static ColorProfile zero(std::size_t dimension);
    static ColorProfile neg_inf(std::size_t dimension);
    static ColorProfile pos_inf(std::size_t dimension);
    static ColorProfile from_counts(std::vector<std::int64_t> counts);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    std::size_t dimension() const { return dimension_; }

    /// Counts of a finite profile; empty for the infinities.
    std::span<const std::int64_t> counts() const { return counts_; }

    /// "(c0,c1,...)", "-inf" or "+inf".
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const ColorProfile& a, const ColorProfile& b);
    friend bool operator==(const ColorProfile& a, const ColorProfile& b);

private:
    ColorProfile(Kind kind, std::size_t dimension, std::vector<std::int64_t> counts)
        : kind_(kind), dimension_(dimension), counts_(std::move(counts)) {}

    Kind kind_ = Kind::Finite;
    std::size_t dimension_ = 0;
    std::vector<std::int64_t> counts_;
};

/// Total order on profiles. Throws DimensionError on mismatched dimensions.
std::strong_ordering compare(const ColorProfile& a, const ColorProfile& b);

/// Componentwise sum; infinities absorb finite values. +inf + -inf throws ArithmeticError.
ColorProfile add(const ColorProfile& a, const ColorProfile& b);

/// Componentwise difference of two finite profiles.
ColorProfile subtract(const ColorProfile& a, const ColorProfile& b);

/// Profile of a single node with the given color.
ColorProfile unit_profile(std::size_t dimension, int color);

/// Profile counting the colors of a finite sequence of nodes.
ColorProfile path_value(std::size_t dimension, std::span<const int> colors);

inline ColorProfile operator+(const ColorProfile& a, const ColorProfile& b) { return add(a, b); }
inline ColorProfile operator-(const ColorProfile& a, const ColorProfile& b) { return subtract(a, b); }

} // namespace nsi
