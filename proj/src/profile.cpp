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

#include "nsi/profile.hpp"

#include "nsi/errors.hpp"

#include <sstream>

namespace nsi {

namespace {

void check_same_dimension(const ColorProfile& a, const ColorProfile& b)
{
    if (a.dimension() != b.dimension()) {
        throw DimensionError("profile dimension mismatch: " + std::to_string(a.dimension()) + " vs "
                             + std::to_string(b.dimension()));
    }
}

int rank_of(ColorProfile::Kind kind)
{
    switch (kind) {
    case ColorProfile::Kind::NegInf: return 0;
    case ColorProfile::Kind::Finite: return 1;
    case ColorProfile::Kind::PosInf: return 2;
    }
    return 1;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("profile count overflow");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw ArithmeticError("profile count overflow");
    return out;
}

} // namespace

ColorProfile ColorProfile::zero(std::size_t dimension)
{
    return ColorProfile(Kind::Finite, dimension, std::vector<std::int64_t>(dimension, 0));
}

ColorProfile ColorProfile::neg_inf(std::size_t dimension)
{
    return ColorProfile(Kind::NegInf, dimension, {});
}

ColorProfile ColorProfile::pos_inf(std::size_t dimension)
{
    return ColorProfile(Kind::PosInf, dimension, {});
}

ColorProfile ColorProfile::from_counts(std::vector<std::int64_t> counts)
{
    if (counts.empty()) throw DimensionError("profile dimension must be at least 1");
    const std::size_t d = counts.size();
    return ColorProfile(Kind::Finite, d, std::move(counts));
}

std::string ColorProfile::to_string() const
{
    if (kind_ == Kind::NegInf) return "-inf";
    if (kind_ == Kind::PosInf) return "+inf";
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (k) out << ',';
        out << counts_[k];
    }
    out << ')';
    return out.str();
}

std::strong_ordering compare(const ColorProfile& a, const ColorProfile& b)
{
    check_same_dimension(a, b);
    if (a.kind() != b.kind() || !a.is_finite()) return rank_of(a.kind()) <=> rank_of(b.kind());

    auto ca = a.counts();
    auto cb = b.counts();
    for (std::size_t k = ca.size(); k-- > 0;) {
        if (ca[k] == cb[k]) continue;
        if (k % 2 == 0) return ca[k] <=> cb[k];
        return cb[k] <=> ca[k];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ColorProfile& a, const ColorProfile& b)
{
    return compare(a, b);
}

bool operator==(const ColorProfile& a, const ColorProfile& b)
{
    return compare(a, b) == std::strong_ordering::equal;
}

ColorProfile add(const ColorProfile& a, const ColorProfile& b)
{
    check_same_dimension(a, b);
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
        throw ArithmeticError("undefined profile sum +inf + -inf");
    }
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;

    std::vector<std::int64_t> sum(a.counts().begin(), a.counts().end());
    auto cb = b.counts();
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = checked_add(sum[k], cb[k]);
    return ColorProfile::from_counts(std::move(sum));
}

ColorProfile subtract(const ColorProfile& a, const ColorProfile& b)
{
    check_same_dimension(a, b);
    if (!a.is_finite() || !b.is_finite()) {
        throw ArithmeticError("profile difference with infinite operand: " + a.to_string() + " - " + b.to_string());
    }
    std::vector<std::int64_t> diff(a.counts().begin(), a.counts().end());
    auto cb = b.counts();
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = checked_sub(diff[k], cb[k]);
    return ColorProfile::from_counts(std::move(diff));
}

ColorProfile unit_profile(std::size_t dimension, int color)
{
    if (color < 0 || static_cast<std::size_t>(color) >= dimension) {
        throw DimensionError("color " + std::to_string(color) + " out of range for " + std::to_string(dimension)
                             + " colors");
    }
    std::vector<std::int64_t> counts(dimension, 0);
    counts[static_cast<std::size_t>(color)] = 1;
    return ColorProfile::from_counts(std::move(counts));
}

ColorProfile path_value(std::size_t dimension, std::span<const int> colors)
{
    if (dimension == 0) throw DimensionError("profile dimension must be at least 1");
    std::vector<std::int64_t> counts(dimension, 0);
    for (int c : colors) {
        if (c < 0 || static_cast<std::size_t>(c) >= dimension) {
            throw DimensionError("color " + std::to_string(c) + " out of range for " + std::to_string(dimension)
                                 + " colors");
        }
        ++counts[static_cast<std::size_t>(c)];
    }
    return ColorProfile::from_counts(std::move(counts));
}

} // namespace nsi
