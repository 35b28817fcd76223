#pragma once

#include "takagi/poly.hpp"
#include "takagi/real.hpp"

#include <memory>
#include <string>
#include <variant>

namespace takagi {

/// A real number given exactly (rational), as the unique root of a
/// polynomial inside an isolating interval, or as a finite-precision float.
///
/// The whole consistency construction is a cascade of sign tests, so the
/// central operation is sign_of(): exact for the first two kinds, and
/// thresholded (throwing SignAmbiguous) for the float kind.
class RealPoint {
public:
    struct Rational {
        Rat q;
    };
    /// poly has exactly one root in (lo, hi); poly(lo) and poly(hi) are
    /// nonzero and of opposite sign. The interval shrinks on demand.
    struct Algebraic {
        RatPoly poly;
        std::shared_ptr<std::pair<Rat, Rat>> interval;
    };
    struct Floating {
        Real x;
        unsigned prec_bits;
    };

    static RealPoint rational(Rat q) { return RealPoint(Rational{std::move(q)}); }
    static RealPoint algebraic(RatPoly poly, Rat lo, Rat hi);
    static RealPoint floating(Real x, unsigned prec_bits = 0);

    /// Parses "p/q" / integer as Rational, decimal or scientific as Floating.
    static RealPoint parse(const std::string& s);

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_algebraic() const { return std::holds_alternative<Algebraic>(v_); }
    bool is_floating() const { return std::holds_alternative<Floating>(v_); }
    const Rat& rational_value() const { return std::get<Rational>(v_).q; }
    const RatPoly& defining_poly() const { return std::get<Algebraic>(v_).poly; }
    /// Current isolating interval of an Algebraic point.
    std::pair<Rat, Rat> algebraic_interval() const {
        return *std::get<Algebraic>(v_).interval;
    }

    /// Sign of p at this point: -1, 0, +1. Exact for Rational/Algebraic.
    int sign_of(const RatPoly& p) const;

    /// Sign of (this - q).
    int compare(const Rat& q) const;

    /// Approximation at the current working precision.
    Real to_real() const;
    double to_double() const;

    /// For Algebraic: shrink the isolating interval below `width`.
    void refine_below(const Rat& width) const;

    std::string to_string() const;

private:
    template <class K>
    explicit RealPoint(K k) : v_(std::move(k)) {}
    std::variant<Rational, Algebraic, Floating> v_;
};

}  // namespace takagi
