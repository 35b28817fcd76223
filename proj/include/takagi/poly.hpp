#pragma once

#include "takagi/real.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace takagi {

/// Closed rational interval, used for certified sign evaluation.
struct RatInterval {
    Rat lo, hi;

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rat width() const { return hi - lo; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const Rat& c, const RatInterval& a);

/// Dense polynomial with exact rational coefficients, ascending order.
/// Trailing zero coefficients are trimmed; the zero polynomial has
/// an empty coefficient vector.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(const Rat& c);
    /// Builds c0 + c1 x + ... from a +/-1 sign prefix.
    static RatPoly from_signs(const std::vector<std::int8_t>& signs);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const;

    Rat eval(const Rat& x) const;
    Real eval(const Real& x) const;
    double eval(double x) const;
    RatInterval eval(const RatInterval& x) const;

    RatPoly derivative() const;
    RatPoly& negate();

    /// p(s*x)
    RatPoly scale_arg(const Rat& s) const;
    /// p(x^k)
    RatPoly compose_pow(unsigned k) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    bool operator==(const RatPoly& other) const { return c_ == other.c_; }

    /// Euclidean remainder a mod b; b must be nonzero.
    static RatPoly remainder(RatPoly a, const RatPoly& b);
    static std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b);
    /// Monic gcd (constant 1 when coprime).
    static RatPoly gcd(RatPoly a, RatPoly b);
    /// p / gcd(p, p'): same roots, all simple.
    RatPoly square_free() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Narrows a bracketing interval [lo,hi] with sign(p(lo)) != sign(p(hi))
/// down to the requested width by bisection. If a midpoint hits the root
/// exactly, the returned interval is degenerate ([r,r]).
struct Bracket {
    Rat lo, hi;
    bool exact = false;  // lo == hi == root
};
Bracket bisect_root(const RatPoly& p, Rat lo, Rat hi, const Rat& width_tol);

/// Sign-change scan over (lo,hi) with `probes` uniform points followed by
/// bisection of each bracket. Only simple (sign-changing) roots are found.
std::vector<Bracket> isolate_roots(const RatPoly& p, const Rat& lo, const Rat& hi,
                                   unsigned probes, const Rat& width_tol);

}  // namespace takagi
