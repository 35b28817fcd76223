#pragma once

#include "takagi/consistency.hpp"
#include "takagi/dyadic.hpp"
#include "takagi/realpoint.hpp"
#include "takagi/signseq.hpp"

#include <array>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace takagi {

enum class ExtrKind { Max, Min };

/// One extremum point, exact when the pipeline stayed exact, otherwise a
/// high-precision approximation together with the known digit prefix.
struct PointVal {
    Real approx;
    std::optional<Rat> exact;
    std::vector<std::uint8_t> digit_prefix;  // binary digits when inexact

    static PointVal of_rat(const Rat& q);
};

struct TwoPoints {
    PointVal x_minus, x_plus;  // x_plus = 1 - x_minus
};
struct OnePoint {};  // x = 1/2
struct FourPoints {
    std::array<PointVal, 4> xs;
};
/// All points whose binary expansion is a free concatenation of `block`
/// and its bitwise complement; Hausdorff dimension 1/(N+1).
struct BlockCantor {
    std::string block, complement;
    Rat hausdorff_dim;
    Rat inf, sup, sup_left_half;
};
/// x = 1/2 +- (P(1/2)/4 + 2^-(N+2) - y 2^-(N+1)) over every point y of the
/// opposite extremum set (kept symbolic when that set is infinite).
struct ShiftedMinSet {
    Rat a_n, b_n;
    unsigned n = 0;  // shift scale 2^-(N+1)
    std::shared_ptr<const struct ExtremumSetBox> reference;
};

using ExtremumSet = std::variant<TwoPoints, OnePoint, FourPoints, BlockCantor, ShiftedMinSet>;
struct ExtremumSetBox {
    ExtremumSet set;
};

enum class Branch {
    MinEndpoints,      // v in (-1/2, 1): min 0 at {0, 1}
    MinBlockCantor,    // v = -1/2: blocks 00/11
    MinPairAlt,        // v in (-1, -1/2): {1/5, 4/5}
    MaxAltGeom,        // v in (1/2, 1): {1/3, 2/3}
    MaxKahane,         // v = 1/2: blocks 01/10
    MaxCenter,         // v in [-1/2, 1/4]: {1/2}
    MaxKBand,          // v in (v_{k-1}, v_k): two points
    MaxKBandBoundary,  // v = v_k: four points
    MaxSeries,         // v in (1/4, 1/2), 2v consistent with a series
    MaxBlockCantor,    // v in (1/4, 1/2), 2v consistent with a polynomial
    SeriesTruncated,   // series construction stopped early; error widened
};
std::string branch_name(Branch b);

struct ExtremumReport {
    RealPoint v_point = RealPoint::rational(Rat(0));
    Real v;
    ExtrKind kind = ExtrKind::Max;
    Real value;
    Real value_err;
    std::optional<Rat> value_exact;
    ExtremumSet set;
    Branch branch = Branch::MaxCenter;
    std::optional<unsigned> N;  // degree for polynomial branches, or band k
};

/// Points of a set, for reporting: finite sets in full, Cantor sets by
/// {inf, sup of the left half, sup}.
std::vector<PointVal> representative_points(const ExtremumSet& set);

/// x-(v) = 1/2 - F(1/2)/4 and its digits x_n = (1 - c_{n-1})/2, where F is
/// the consistent (max) or anti-consistent (min) series of 2v.
TwoPoints extremum_points_from_series(const SignSeq& f, std::size_t digit_len = 256);

/// T_v at the extremum points, via the double series
/// 1/(2(1-v)) - (1/4) sum_n c_n (2v)^n sum_{p>=n} c_p/2^p, with a rigorous
/// truncation bound <= tol.
std::pair<Real, Real> value_from_series(const SignSeq& f, const Real& v, const Real& tol);

/// Plateau [a_N, b_N] of S_{v,N} and its extremal value as an exact
/// polynomial in v:
/// a_N = 1/2 - P(1/2)/4 - 2^-(N+2), b_N = a_N + 2^-(N+1),
/// M_{v,N} = (1-v^{N+1})/(2(1-v)) - (1/4) sum_{n<=N} c_n (2v)^n sum_{i=n}^{N} c_i/2^i.
struct PolyBand {
    Rat a, b;
    RatPoly value_of_v;
};
PolyBand band_from_polynomial(const SignSeq& p);

/// The Cantor-set branch for v^{N+1} > 0: block digits, inf/sup from the
/// attached series at 1/2, value M_{v,N}/(1 - v^{N+1}).
BlockCantor assemble_blockcantor(const SignSeq& p);

/// The shifted branch for v^{N+1} < 0: points from every opposite extremum
/// point y, value M_{v,N} + v^{N+1} m_v.
ExtremumSet assemble_shifted(const SignSeq& p, const ExtremumSet& opposite);

struct ExtremumOptions {
    double tol = 1e-12;
    std::size_t max_len = 256;    // construction budget
    std::size_t digit_len = 256;  // reported digits for series branches
};

/// Global maximum or minimum of T_v on [0,1] for -1 < v < 1.
ExtremumReport global_extremum(const RealPoint& v, ExtrKind kind,
                               const ExtremumOptions& opts = {});

}  // namespace takagi
