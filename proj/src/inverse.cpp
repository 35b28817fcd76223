#include "takagi/inverse.hpp"

#include "takagi/consistency.hpp"

namespace takagi {

namespace {

DyadicExpansion reflect_if_needed(const DyadicExpansion& x) {
    Rat q = x.to_rational();
    if (q > Rat(1, 2)) return DyadicExpansion::from_rational(Rat(1) - q);
    return x;
}

RealPoint half_point(const RealPoint& w) {
    if (w.is_rational()) return RealPoint::rational(w.rational_value() / 2);
    if (w.is_algebraic()) {
        auto [lo, hi] = w.algebraic_interval();
        return RealPoint::algebraic(w.defining_poly().scale_arg(Rat(2)), lo / 2, hi / 2);
    }
    return RealPoint::floating(w.to_real() / 2);
}

}  // namespace

SignSeq series_from_point(const DyadicExpansion& x_max) {
    if (x_max.to_rational() > Rat(1, 2))
        throw std::invalid_argument("series_from_point: reflect x_max to [0, 1/2] first");
    DyadicExpansion x = x_max;
    return SignSeq::series({}, [x](std::size_t n) {
        return static_cast<std::int8_t>(1 - 2 * static_cast<int>(x.digit(n)));
    });
}

RatPoly series_numerator(const DyadicExpansion& x_max) {
    const auto& prefix = x_max.prefix_digits();
    const std::size_t p = prefix.size();
    const std::size_t m = x_max.period_digits().empty() ? 1 : x_max.period_digits().size();

    auto sign_at = [&](std::size_t n) { return Rat(1 - 2 * static_cast<int>(x_max.digit(n))); };

    // F = A(t) + t^p B(t)/(1-t^m) with A the prefix part, B the period block
    std::vector<Rat> a(p, Rat(0)), b(m, Rat(0));
    for (std::size_t n = 0; n < p; ++n) a[n] = sign_at(n);
    for (std::size_t j = 0; j < m; ++j) b[j] = sign_at(p + j);

    std::vector<Rat> one_minus(m + 1, Rat(0));
    one_minus[0] = Rat(1);
    one_minus[m] = Rat(-1);

    std::vector<Rat> shifted(p + m, Rat(0));
    for (std::size_t j = 0; j < m; ++j) shifted[p + j] = b[j];

    return RatPoly(std::move(a)) * RatPoly(std::move(one_minus)) + RatPoly(std::move(shifted));
}

std::vector<RealPoint> candidate_roots(const DyadicExpansion& x_max, const Rat& width_tol) {
    DyadicExpansion x = reflect_if_needed(x_max);
    RatPoly num = series_numerator(x);
    RatPoly dnum = num.derivative();

    const Rat delta(1, 1000000000);
    auto brackets = isolate_roots(num, Rat(1, 2) + delta, Rat(1) - delta, 2048, width_tol);

    std::vector<RealPoint> roots;
    for (const auto& b : brackets) {
        RealPoint w = b.exact ? RealPoint::rational(b.lo)
                              : RealPoint::algebraic(num, b.lo, b.hi);
        // F' at a root of the numerator has the sign of N' (the denominator
        // 1 - w^m is positive on (1/2, 1))
        if (w.sign_of(dnum) < 0) roots.push_back(std::move(w));
    }
    return roots;
}

InverseOutcome select_consistent_root(const std::vector<RealPoint>& roots, const SignSeq& f,
                                      std::size_t check_len) {
    InverseOutcome out;
    out.roots = roots;
    out.precision_used = check_len;
    if (roots.empty()) {
        out.status = InverseOutcome::Status::NoRoot;
        return out;
    }
    for (const auto& w : roots) {
        ConsistencyResult res = construct(w, Mode::Consistent, check_len);
        bool ok = res.terminated ? is_intermediate(f, res.func, check_len)
                                 : f.prefix(check_len) == res.func.prefix(check_len);
        if (ok) {
            out.status = InverseOutcome::Status::Found;
            out.found = InverseOutcome::Found{half_point(w), w, f};
            return out;
        }
    }
    out.status = InverseOutcome::Status::RootNotIntermediate;
    return out;
}

InverseOutcome invert_max_point(const DyadicExpansion& x_max, std::size_t check_len) {
    DyadicExpansion x = reflect_if_needed(x_max);
    SignSeq f = series_from_point(x);
    return select_consistent_root(candidate_roots(x), f, check_len);
}

InverseOutcome invert_max_point(const Rat& x_max, std::size_t check_len) {
    if (x_max < 0 || x_max > 1) throw std::invalid_argument("x_max in [0, 1]");
    Rat x = x_max > Rat(1, 2) ? Rat(1) - x_max : x_max;
    return invert_max_point(DyadicExpansion::from_rational(x), check_len);
}

InverseOutcome invert_truncated(const std::vector<std::uint8_t>& digits) {
    if (digits.empty()) throw std::invalid_argument("empty digit prefix");
    std::vector<std::uint8_t> d = digits;
    if (d[0] == 1)  // reflect: complement every digit of the prefix
        for (auto& bit : d) bit = static_cast<std::uint8_t>(1 - bit);

    const std::size_t L = d.size();
    std::vector<std::int8_t> signs(L);
    for (std::size_t n = 0; n < L; ++n) signs[n] = static_cast<std::int8_t>(1 - 2 * d[n]);

    RatPoly partial = RatPoly::from_signs(signs);
    const Rat delta(1, 1000000000);
    auto brackets =
        isolate_roots(partial, Rat(1, 2) + delta, Rat(1) - delta, 2048, Rat(1, pow2(96)));
    RatPoly dpart = partial.derivative();

    std::vector<RealPoint> roots;
    for (const auto& b : brackets) {
        RealPoint w = b.exact ? RealPoint::rational(b.lo)
                              : RealPoint::algebraic(partial, b.lo, b.hi);
        if (w.sign_of(dpart) < 0) roots.push_back(std::move(w));
    }

    InverseOutcome out;
    out.roots = roots;
    out.approximate = true;
    out.precision_used = L;
    if (roots.empty()) {
        out.status = InverseOutcome::Status::NoRoot;
        return out;
    }
    for (const auto& w : roots) {
        ConsistencyResult res = construct(w, Mode::Consistent, L);
        auto got = res.func.prefix(L);
        if (got.size() == L && std::equal(got.begin(), got.end(), signs.begin())) {
            out.status = InverseOutcome::Status::Found;
            out.found = InverseOutcome::Found{half_point(w), w,
                                              SignSeq::polynomial(std::move(signs))};
            return out;
        }
    }
    out.status = InverseOutcome::Status::RootNotIntermediate;
    return out;
}

}  // namespace takagi
