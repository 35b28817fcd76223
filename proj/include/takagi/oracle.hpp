#pragma once

#include "takagi/consistency.hpp"
#include "takagi/extrema.hpp"
#include "takagi/realpoint.hpp"

#include <cstdint>
#include <vector>

namespace takagi {

/// Brute-force grid extremization of T_v over [0,1]: uniform scan, cluster
/// detection within a value slack, then local refinement of each cluster.
/// Statistical-grade (no certified bounds); used to cross-check the
/// closed-form machinery.
struct GridExtremum {
    double value = 0;
    std::vector<double> argpoints;  // refined cluster representatives
};

GridExtremum grid_extremum(double v, ExtrKind kind, std::size_t grid_size = 1u << 18,
                           unsigned refine_rounds = 3);

/// Best T_v value achievable within [x0 - radius, x0 + radius], refined to
/// the same depth grid_extremum uses. Verifies that a reported extremum
/// point has near-optimal points next to it.
double local_extremum_near(double v, ExtrKind kind, double x0, double radius);

/// Digit-wise reconstruction of the consistent (or anti-consistent) sign
/// prefix by re-evaluating every partial sum from scratch (Horner), with no
/// shared accumulator with consistency::construct. Terminates early when a
/// partial sum vanishes.
std::vector<std::int8_t> independent_consistent_prefix(const RealPoint& w, std::size_t max_len,
                                                       Mode mode = Mode::Consistent);

}  // namespace takagi
