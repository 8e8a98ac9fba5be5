#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "burstcore/errors.hpp"

namespace burstcore {

// Exact rational density value: `sum` units of degree spread over `len`
// timestamps. Doubles as the threshold type (δ) and as a slope on the
// cumulative sum curve. All ordering goes through integer cross
// multiplication — no floating point anywhere near a comparison. Degree sums
// are bounded by n·|T| so the 128-bit intermediate products cannot overflow.
struct Density {
    std::int64_t sum = 0;   // total degree over the window (≥ 0)
    std::int64_t len = 1;   // window length in timestamps (≥ 1)

    constexpr Density() = default;
    constexpr Density(std::int64_t s, std::int64_t l) : sum(s), len(l) {}

    friend constexpr std::weak_ordering operator<=>(const Density& a, const Density& b) {
        const __int128 lhs = static_cast<__int128>(a.sum) * b.len;
        const __int128 rhs = static_cast<__int128>(b.sum) * a.len;
        if (lhs < rhs) return std::weak_ordering::less;
        if (lhs > rhs) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }
    friend constexpr bool operator==(const Density& a, const Density& b) {
        return (a <=> b) == std::weak_ordering::equivalent;
    }

    // Exact comparison of an integer degree against this value (deg vs sum/len).
    constexpr bool degree_below(std::int64_t deg) const {
        return static_cast<__int128>(deg) * len < static_cast<__int128>(sum);
    }
    constexpr bool degree_at_most(std::int64_t deg) const {
        return static_cast<__int128>(deg) * len <= static_cast<__int128>(sum);
    }

    // Lowest-terms copy; value-neutral since all comparisons cross-multiply.
    Density reduced() const {
        std::int64_t g = std::gcd(sum, len);
        if (g == 0) return Density(0, 1);
        return Density(sum / g, len / g);
    }

    double value() const { return static_cast<double>(sum) / static_cast<double>(len); }

    std::string str() const { return std::to_string(sum) + "/" + std::to_string(len); }
};

// Parses an exact positive rational from "p/q", a decimal like "1.5", or a
// plain integer. The result is reduced. Rejects zero, negatives, and junk.
Density parse_density(const std::string& text);

}  // namespace burstcore
