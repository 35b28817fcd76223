#include "takagi/realpoint.hpp"

#include <optional>
#include <sstream>

namespace takagi {

namespace {
int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
}  // namespace

RealPoint RealPoint::algebraic(RatPoly poly, Rat lo, Rat hi) {
    if (lo >= hi) throw std::invalid_argument("algebraic point: empty interval");
    poly = poly.square_free();
    int slo = sgn(poly.eval(lo)), shi = sgn(poly.eval(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("algebraic point: endpoints must bracket a sign change");
    Algebraic a{std::move(poly),
                std::make_shared<std::pair<Rat, Rat>>(std::move(lo), std::move(hi))};
    return RealPoint(std::move(a));
}

RealPoint RealPoint::floating(Real x, unsigned prec_bits) {
    if (prec_bits == 0) prec_bits = precision_bits();
    return RealPoint(Floating{std::move(x), prec_bits});
}

RealPoint RealPoint::parse(const std::string& s) {
    if (s.find('/') != std::string::npos) return rational(parse_rational(s));
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        return rational(parse_rational(s));
    }
    (void)precision_bits();
    return floating(Real(s));
}

void RealPoint::refine_below(const Rat& width) const {
    if (!is_algebraic()) return;
    const auto& a = std::get<Algebraic>(v_);
    Rat& lo = a.interval->first;
    Rat& hi = a.interval->second;
    int slo = sgn(a.poly.eval(lo));
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(a.poly.eval(mid));
        if (sm == 0) {
            // the root itself is rational; pin the interval around it
            Rat eps = (hi - lo) / 4;
            while (eps > width / 4) eps /= 2;
            lo = mid - eps;
            hi = mid + eps;
            break;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
}

int RealPoint::sign_of(const RatPoly& p) const {
    if (p.is_zero()) return 0;
    if (is_rational()) return sgn(p.eval(rational_value()));

    if (is_floating()) {
        const auto& f = std::get<Floating>(v_);
        Real val = p.eval(f.x);
        // scale the threshold with the magnitude of the terms involved
        Real scale(1);
        Real xp(1), ax = abs(f.x);
        for (const auto& c : p.coeffs()) {
            scale += abs(Real(c)) * xp;
            xp *= ax;
        }
        unsigned bits = f.prec_bits > 16 ? f.prec_bits - 8 : 8;
        Real eps = scale / Real(pow2(bits));
        if (abs(val) <= eps)
            throw SignAmbiguous("sign of polynomial at floating point below threshold 2^-" +
                                std::to_string(bits));
        return val > 0 ? 1 : -1;
    }

    const auto& a = std::get<Algebraic>(v_);
    RatPoly r = (p.degree() >= a.poly.degree()) ? RatPoly::remainder(p, a.poly) : p;
    if (r.is_zero()) return 0;

    Rat& lo = a.interval->first;
    Rat& hi = a.interval->second;

    auto refine_once = [&]() -> std::optional<int> {
        int slo = sgn(a.poly.eval(lo));
        Rat mid = (lo + hi) / 2;
        int sm = sgn(a.poly.eval(mid));
        if (sm == 0) return sgn(r.eval(mid));  // the root is exactly mid
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
        return std::nullopt;
    };

    for (int round = 0; round < 8; ++round) {
        RatInterval enc = r.eval(RatInterval{lo, hi});
        if (!enc.contains_zero()) return enc.lo > 0 ? 1 : -1;
        if (auto s = refine_once()) return *s;
    }

    // r(w) = 0 iff gcd(D, r) vanishes at w, i.e. changes sign on the
    // isolating interval (w is the only root of D there, and D is kept
    // square-free).
    RatPoly g = RatPoly::gcd(a.poly, r);
    if (g.degree() >= 1 && sgn(g.eval(lo)) * sgn(g.eval(hi)) < 0) return 0;

    for (;;) {
        RatInterval enc = r.eval(RatInterval{lo, hi});
        if (!enc.contains_zero()) return enc.lo > 0 ? 1 : -1;
        if (auto s = refine_once()) return *s;
    }
}

int RealPoint::compare(const Rat& q) const {
    if (is_rational()) {
        const Rat& x = rational_value();
        return x > q ? 1 : (x < q ? -1 : 0);
    }
    return sign_of(RatPoly({-q, Rat(1)}));
}

Real RealPoint::to_real() const {
    (void)precision_bits();
    if (is_rational()) return Real(rational_value());
    if (is_floating()) return std::get<Floating>(v_).x;
    const auto& a = std::get<Algebraic>(v_);
    Rat width = Rat(1, pow2(precision_bits() + 4));
    refine_below(width);
    return Real((a.interval->first + a.interval->second) / 2);
}

double RealPoint::to_double() const { return static_cast<double>(to_real()); }

std::string RealPoint::to_string() const {
    if (is_rational()) return rat_to_string(rational_value());
    if (is_floating()) return real_to_string(std::get<Floating>(v_).x);
    std::ostringstream os;
    const auto& a = std::get<Algebraic>(v_);
    os << "root of " << a.poly.to_string() << " in (" << a.interval->first << ", "
       << a.interval->second << ")";
    return os.str();
}

}  // namespace takagi
