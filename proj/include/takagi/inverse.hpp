#pragma once

#include "takagi/dyadic.hpp"
#include "takagi/realpoint.hpp"
#include "takagi/signseq.hpp"

#include <optional>
#include <vector>

namespace takagi {

/// Recovering v in (1/4, 1/2) from a known global-maximum point of T_v:
/// reflect to [0, 1/2], read the digits into a unitary series
/// (c_n = 1 - 2 x_{n+1}), find the sign-changing roots of its sum on
/// (1/2, 1) with negative derivative, and keep the single root whose
/// consistent function makes the series intermediate; then v = w/2.
struct InverseOutcome {
    enum class Status { Found, NoRoot, RootNotIntermediate };
    struct Found {
        RealPoint v;
        RealPoint w;
        SignSeq f;
    };

    Status status = Status::NoRoot;
    std::optional<Found> found;
    std::vector<RealPoint> roots;   // every candidate examined
    bool approximate = false;       // built from a truncated digit prefix
    std::size_t precision_used = 0; // digits of x_max consumed
};

/// The unitary series read off the digits of x_max (already in [0, 1/2]):
/// c_n = 1 - 2 x_{n+1}; the sum is 1/(1-x) - 2 (x_1 + x_2 x + ...).
SignSeq series_from_point(const DyadicExpansion& x_max);

/// Exact numerator polynomial of the sum of series_from_point(x) over the
/// denominator 1 - t^m (m = period length; 1 for finite expansions).
RatPoly series_numerator(const DyadicExpansion& x_max);

/// Roots of the series' sum on (1/2, 1) at which the derivative is
/// negative. Only sign-changing roots are found.
std::vector<RealPoint> candidate_roots(const DyadicExpansion& x_max,
                                       const Rat& width_tol = Rat(1, pow2(96)));

/// Step 5: keep the root whose consistent function has the series as an
/// intermediate series (prefix comparison through check_len).
InverseOutcome select_consistent_root(const std::vector<RealPoint>& roots, const SignSeq& f,
                                      std::size_t check_len);

/// The whole algorithm for an exactly known maximum point.
InverseOutcome invert_max_point(const DyadicExpansion& x_max, std::size_t check_len = 128);
InverseOutcome invert_max_point(const Rat& x_max, std::size_t check_len = 128);

/// Best-effort variant for a truncated digit prefix (unknown tail): roots
/// of the truncated partial sum, intermediacy checked over the known
/// digits only; the outcome is tagged approximate.
InverseOutcome invert_truncated(const std::vector<std::uint8_t>& digits);

}  // namespace takagi
