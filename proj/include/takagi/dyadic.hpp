#pragma once

#include "takagi/real.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace takagi {

/// Binary expansion of a point of [0, 1): a finite prefix followed by an
/// optional repeating block. Canonical form: the minimal period, and never
/// the all-ones period (expansions ending in 111... are rewritten by
/// carrying). Conversion to and from exact rationals is exact.
class DyadicExpansion {
public:
    DyadicExpansion() = default;

    static DyadicExpansion from_rational(const Rat& x);
    /// Throws NonCanonicalExpansion for an all-ones period. The result is
    /// normalized (minimal period, shortest prefix).
    static DyadicExpansion from_digits(std::vector<std::uint8_t> prefix,
                                       std::vector<std::uint8_t> period);
    /// "0.0110", "0.01(10)", ".1"
    static DyadicExpansion parse(const std::string& s);

    Rat to_rational() const;
    const std::vector<std::uint8_t>& prefix_digits() const { return prefix_; }
    const std::vector<std::uint8_t>& period_digits() const { return period_; }
    bool is_finite() const { return period_.empty(); }

    /// 0-based digit after the binary point; 0 past the end when finite.
    std::uint8_t digit(std::size_t i) const;
    /// The first len digits.
    std::vector<std::uint8_t> digits(std::size_t len) const;

    bool operator==(const DyadicExpansion& other) const = default;

    std::string to_string() const;

private:
    std::vector<std::uint8_t> prefix_;
    std::vector<std::uint8_t> period_;
};

}  // namespace takagi
