#pragma once

#include "takagi/dyadic.hpp"
#include "takagi/extrema.hpp"

#include <string>
#include <vector>

namespace takagi {

/// First L binary digits of the constant chi = 0.0110100110010110..._2
/// (x_1 = 0, x_{2k} = 1 - x_k, x_{2k+1} = x_{k+1}) together with the exact
/// truncated value; |value - chi| <= 2^-L.
struct ChiResult {
    Rat value;
    std::string digits;
};
ChiResult chi(std::size_t precision_digits);

/// chi by the product formula 1/2 - (1/4) prod_{n>=0} (1 - 2^-2^n),
/// truncated after `factors` factors (converges doubly exponentially).
Rat chi_product_formula(unsigned factors);

/// Digit doubling: each 0 becomes 01, each 1 becomes 10. Strictly
/// increasing on [0, 1); rational in, rational out.
DyadicExpansion h_map(const DyadicExpansion& x);
/// n-fold H; for x in [0, 1/2) the result is within 2^-2^n of chi.
DyadicExpansion h_iterate(DyadicExpansion x, unsigned n);

/// Verifies E_v = H(E_{2v^2}) for v in (1/(2 sqrt 2), 1/2): both sides are
/// computed independently and compared pointwise.
struct TransportCheck {
    std::vector<Real> mapped;  // H applied to the points of E_{2v^2}
    std::vector<Real> direct;  // points of E_v
    Real max_diff;
    bool ok = false;
};
TransportCheck transport_ev(const RealPoint& v, const Real& tol,
                            const ExtremumOptions& opts = {});

}  // namespace takagi
