#include "takagi/selfsimilar.hpp"

#include <algorithm>

namespace takagi {

ChiResult chi(std::size_t precision_digits) {
    if (precision_digits < 1) throw std::invalid_argument("chi: at least one digit");
    std::vector<std::uint8_t> x(precision_digits + 1);
    x[1] = 0;
    for (std::size_t i = 2; i <= precision_digits; ++i)
        x[i] = (i % 2 == 0) ? static_cast<std::uint8_t>(1 - x[i / 2]) : x[(i + 1) / 2];

    ChiResult res;
    Rat acc(0);
    std::string digits;
    digits.reserve(precision_digits);
    for (std::size_t i = 1; i <= precision_digits; ++i) {
        digits.push_back(x[i] ? '1' : '0');
        if (x[i]) acc += Rat(1, pow2(static_cast<unsigned>(i)));
    }
    res.value = acc;
    res.digits = std::move(digits);
    return res;
}

Rat chi_product_formula(unsigned factors) {
    // factors beyond 16 change the value by less than 2^-65536
    if (factors > 16) factors = 16;
    Rat prod(1);
    for (unsigned n = 0; n < factors; ++n) {
        unsigned e = 1u << n;
        prod *= Rat(1) - Rat(1, pow2(e));
    }
    return Rat(1, 2) - prod / 4;
}

DyadicExpansion h_map(const DyadicExpansion& x) {
    std::vector<std::uint8_t> prefix, period;
    prefix.reserve(2 * x.prefix_digits().size());
    for (auto d : x.prefix_digits()) {
        prefix.push_back(d);
        prefix.push_back(static_cast<std::uint8_t>(1 - d));
    }
    for (auto d : x.period_digits()) {
        period.push_back(d);
        period.push_back(static_cast<std::uint8_t>(1 - d));
    }
    if (period.empty()) period = {0, 1};  // trailing zeros become 0101...
    return DyadicExpansion::from_digits(std::move(prefix), std::move(period));
}

DyadicExpansion h_iterate(DyadicExpansion x, unsigned n) {
    for (unsigned i = 0; i < n; ++i) x = h_map(x);
    return x;
}

namespace {

/// 2v^2 as an exact point where possible. For D(v) = 0 split into even and
/// odd parts, D(x) = E(x^2) + x O(x^2); then E(y/2)^2 - (y/2) O(y/2)^2
/// vanishes at y = 2v^2.
RealPoint two_v_squared(const RealPoint& v) {
    if (v.is_rational()) {
        const Rat& q = v.rational_value();
        return RealPoint::rational(2 * q * q);
    }
    if (v.is_algebraic()) {
        const auto& d = v.defining_poly().coeffs();
        std::vector<Rat> even, odd;
        for (std::size_t i = 0; i < d.size(); ++i)
            (i % 2 == 0 ? even : odd).push_back(d[i]);
        RatPoly e{std::move(even)}, o{std::move(odd)};
        RatPoly eh = e.scale_arg(Rat(1, 2));
        RatPoly oh = o.scale_arg(Rat(1, 2));
        RatPoly r = eh * eh - RatPoly({Rat(0), Rat(1, 2)}) * oh * oh;
        auto [lo, hi] = v.algebraic_interval();
        if (lo >= 0) {
            try {
                return RealPoint::algebraic(std::move(r), 2 * lo * lo, 2 * hi * hi);
            } catch (const std::invalid_argument&) {
                // interval not isolating for the derived polynomial
            }
        }
    }
    Real x = v.to_real();
    return RealPoint::floating(2 * x * x);
}

}  // namespace

TransportCheck transport_ev(const RealPoint& v, const Real& tol, const ExtremumOptions& opts) {
    // 8 v^2 - 1 > 0 and v < 1/2: the open interval (1/(2 sqrt2), 1/2)
    if (v.sign_of(RatPoly({Rat(-1), Rat(0), Rat(8)})) <= 0 || v.compare(Rat(1, 2)) >= 0)
        throw std::invalid_argument("transport holds on (1/(2 sqrt 2), 1/2)");

    RealPoint u = two_v_squared(v);
    ExtremumReport ru = global_extremum(u, ExtrKind::Max, opts);
    ExtremumReport rv = global_extremum(v, ExtrKind::Max, opts);

    TransportCheck chk;
    for (const auto& p : representative_points(ru.set)) {
        DyadicExpansion e = p.exact ? DyadicExpansion::from_rational(*p.exact)
                                    : DyadicExpansion::from_digits(p.digit_prefix, {});
        chk.mapped.push_back(to_real(h_map(e).to_rational()));
    }
    for (const auto& p : representative_points(rv.set)) chk.direct.push_back(p.approx);
    std::sort(chk.mapped.begin(), chk.mapped.end());
    std::sort(chk.direct.begin(), chk.direct.end());

    chk.max_diff = Real(0);
    if (chk.mapped.size() != chk.direct.size()) {
        chk.ok = false;
        chk.max_diff = Real(1);
        return chk;
    }
    for (std::size_t i = 0; i < chk.mapped.size(); ++i)
        chk.max_diff = std::max(chk.max_diff, Real(abs(chk.mapped[i] - chk.direct[i])));
    chk.ok = chk.max_diff <= tol;
    return chk;
}

}  // namespace takagi
