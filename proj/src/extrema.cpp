#include "takagi/extrema.hpp"

#include <algorithm>

namespace takagi {

namespace {

Real float_slack(const Real& scale) {
    unsigned bits = precision_bits();
    unsigned b = bits > 32 ? bits - 16 : 16;
    Real s = abs(scale) + 1;
    return s / Real(pow2(b));
}

/// 2v as an exact point: D(v) = 0 implies D(x/2) vanishes at 2v, with the
/// isolating interval doubled alongside.
RealPoint double_point(const RealPoint& v) {
    if (v.is_rational()) return RealPoint::rational(v.rational_value() * 2);
    if (v.is_algebraic()) {
        auto [lo, hi] = v.algebraic_interval();
        return RealPoint::algebraic(v.defining_poly().scale_arg(Rat(1, 2)), lo * 2, hi * 2);
    }
    return RealPoint::floating(v.to_real() * 2);
}

/// Double series evaluated from a fixed sign prefix only; the error covers
/// the completely unknown tail.
std::pair<Real, Real> value_from_prefix(const std::vector<std::int8_t>& pre, const Real& v) {
    const Real one(1);
    const std::size_t L = pre.size();
    std::vector<Rat> inner(L + 1, Rat(0));
    for (std::size_t p = L; p-- > 0;)
        inner[p] = inner[p + 1] + Rat(static_cast<int>(pre[p]), pow2(static_cast<unsigned>(p)));
    Real sum(0), pw(1), abs_sum(0);
    const Real two_v = 2 * v;
    for (std::size_t n = 0; n < L; ++n) {
        sum += static_cast<int>(pre[n]) * pw * Real(inner[n]);
        abs_sum += abs(pw);
        pw *= two_v;
    }
    Real value = one / (2 * (one - v)) - sum / 4;
    Real av = abs(v);
    Real tail = pow(av, static_cast<unsigned>(L)) / (2 * (one - av));
    Real err = tail + abs_sum / Real(pow2(static_cast<unsigned>(L))) / 4 + float_slack(value);
    return {value, err};
}

}  // namespace

PointVal PointVal::of_rat(const Rat& q) {
    PointVal p;
    p.approx = to_real(q);
    p.exact = q;
    return p;
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::MinEndpoints: return "min/endpoints";
        case Branch::MinBlockCantor: return "min/block-cantor";
        case Branch::MinPairAlt: return "min/two-points";
        case Branch::MaxAltGeom: return "max/two-thirds";
        case Branch::MaxKahane: return "max/kahane";
        case Branch::MaxCenter: return "max/center";
        case Branch::MaxKBand: return "max/k-band";
        case Branch::MaxKBandBoundary: return "max/k-band-boundary";
        case Branch::MaxSeries: return "max/series";
        case Branch::MaxBlockCantor: return "max/block-cantor";
        case Branch::SeriesTruncated: return "max/series-truncated";
    }
    return "?";
}

std::vector<PointVal> representative_points(const ExtremumSet& set) {
    std::vector<PointVal> out;
    if (auto* tp = std::get_if<TwoPoints>(&set)) {
        out.push_back(tp->x_minus);
        out.push_back(tp->x_plus);
    } else if (std::get_if<OnePoint>(&set)) {
        out.push_back(PointVal::of_rat(Rat(1, 2)));
    } else if (auto* fp = std::get_if<FourPoints>(&set)) {
        out.assign(fp->xs.begin(), fp->xs.end());
    } else if (auto* bc = std::get_if<BlockCantor>(&set)) {
        out.push_back(PointVal::of_rat(bc->inf));
        out.push_back(PointVal::of_rat(bc->sup_left_half));
        out.push_back(PointVal::of_rat(bc->sup));
    } else if (auto* sh = std::get_if<ShiftedMinSet>(&set)) {
        Rat scale(1, pow2(sh->n + 1));
        Rat base = Rat(1, 2) - sh->a_n;  // P(1/2)/4 + 2^-(N+2)
        for (const auto& y : representative_points(sh->reference->set)) {
            if (!y.exact) continue;
            Rat off = base - *y.exact * scale;
            out.push_back(PointVal::of_rat(Rat(1, 2) - off));
            out.push_back(PointVal::of_rat(Rat(1, 2) + off));
        }
    }
    return out;
}

TwoPoints extremum_points_from_series(const SignSeq& f, std::size_t digit_len) {
    TwoPoints tp;
    auto [vh, err] = value_at_half(f, digit_len);
    if (err == 0) {
        Rat xm = Rat(1, 2) - vh / 4;
        tp.x_minus = PointVal::of_rat(xm);
        tp.x_plus = PointVal::of_rat(Rat(1) - xm);
        return tp;
    }
    auto pre = f.prefix(digit_len);
    std::vector<std::uint8_t> digits(pre.size());
    Rat xm(0);
    for (std::size_t n = 0; n < pre.size(); ++n) {
        digits[n] = pre[n] < 0 ? 1 : 0;  // x_n = (1 - c_{n-1})/2
        if (digits[n]) xm += Rat(1, pow2(static_cast<unsigned>(n + 1)));
    }
    tp.x_minus.approx = to_real(xm);
    tp.x_minus.digit_prefix = digits;
    std::vector<std::uint8_t> comp(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) comp[i] = digits[i] ? 0 : 1;
    tp.x_plus.approx = to_real(Rat(1) - xm);
    tp.x_plus.digit_prefix = std::move(comp);
    return tp;
}

std::pair<Real, Real> value_from_series(const SignSeq& f, const Real& v, const Real& tol) {
    Real av = abs(v);
    if (!(av < 1)) throw std::invalid_argument("value_from_series: |v| < 1");
    const Real one(1);

    // outer cut K: |v|^{K+1} / (2(1-|v|)) <= tol/2
    std::size_t K = 0;
    if (v != 0) {
        Real bound = av / (2 * (one - av));
        const std::size_t cap = 1u << 22;
        while (bound > tol / 2) {
            bound *= av;
            if (++K > cap) throw TolNotReached("value_from_series: outer budget exhausted");
        }
    }
    bool wide = av > Real(0.5);  // |2v| > 1
    std::size_t L = K + 80 + (wide ? K : 0);

    auto pre = f.prefix(L + 1);
    // inner tails I_n = sum_{p=n}^{L} c_p 2^{-p}, backward
    std::vector<Rat> inner(pre.size() + 1, Rat(0));
    for (std::size_t p = pre.size(); p-- > 0;)
        inner[p] = inner[p + 1] + Rat(static_cast<int>(pre[p]), pow2(static_cast<unsigned>(p)));

    Real sum(0), pw(1);
    const Real two_v = 2 * v;
    for (std::size_t n = 0; n <= K && n < pre.size(); ++n) {
        sum += static_cast<int>(pre[n]) * pw * Real(inner[n]);
        pw *= two_v;
    }
    Real value = one / (2 * (one - v)) - sum / 4;

    // error: outer tail + inner truncation
    Real err = tol / 2;
    Real innercut = Real(static_cast<unsigned long>(K + 1)) / Real(pow2(static_cast<unsigned>(L)));
    if (wide) {
        Real scale(1);
        for (std::size_t i = 0; i < K; ++i) scale *= 2 * av;
        innercut *= scale;
    }
    err += innercut / 4 + float_slack(value);
    return {value, err};
}

PolyBand band_from_polynomial(const SignSeq& p) {
    if (!p.is_polynomial()) throw std::invalid_argument("band: polynomial required");
    const auto N = static_cast<unsigned>(p.degree());
    const unsigned n1 = N + 1;
    RatPoly poly = p.to_poly(n1);
    Rat ph = poly.eval(Rat(1, 2));

    PolyBand band;
    band.a = Rat(1, 2) - ph / 4 - Rat(1, pow2(n1 + 1));
    band.b = band.a + Rat(1, pow2(n1));

    // M(v) = sum_{n<=N} v^n [ 1/2 - (1/4) c_n 2^n T_n ], T_n = sum_{i=n}^N c_i 2^-i
    std::vector<Rat> tails(n1 + 1, Rat(0));
    for (std::size_t i = n1; i-- > 0;)
        tails[i] = tails[i + 1] + Rat(static_cast<int>(p.coeff(i)), pow2(static_cast<unsigned>(i)));
    std::vector<Rat> mc(n1, Rat(0));
    for (std::size_t n = 0; n < n1; ++n)
        mc[n] = Rat(1, 2) -
                Rat(static_cast<int>(p.coeff(n)) * pow2(static_cast<unsigned>(n)), 4) * tails[n];
    band.value_of_v = RatPoly(std::move(mc));
    return band;
}

BlockCantor assemble_blockcantor(const SignSeq& p) {
    if (!p.is_polynomial()) throw std::invalid_argument("block set: polynomial required");
    const auto n1 = static_cast<std::size_t>(p.degree()) + 1;
    BlockCantor bc;
    for (std::size_t n = 0; n < n1; ++n) {
        bc.block.push_back(p.coeff(n) < 0 ? '1' : '0');
        bc.complement.push_back(p.coeff(n) < 0 ? '0' : '1');
    }
    bc.hausdorff_dim = Rat(1, static_cast<unsigned long>(n1));
    bc.inf = Rat(1, 2) - attached_value_at_half(p, AttachSign::Plus) / 4;
    bc.sup_left_half = Rat(1, 2) - attached_value_at_half(p, AttachSign::Minus) / 4;
    bc.sup = Rat(1) - bc.inf;
    return bc;
}

ExtremumSet assemble_shifted(const SignSeq& p, const ExtremumSet& opposite) {
    if (!p.is_polynomial()) throw std::invalid_argument("shifted set: polynomial required");
    const auto N = static_cast<unsigned>(p.degree());
    PolyBand band = band_from_polynomial(p);

    ShiftedMinSet sh;
    sh.a_n = band.a;
    sh.b_n = band.b;
    sh.n = N;
    sh.reference = std::make_shared<ExtremumSetBox>(ExtremumSetBox{opposite});

    const bool finite = std::holds_alternative<TwoPoints>(opposite) ||
                        std::holds_alternative<OnePoint>(opposite) ||
                        std::holds_alternative<FourPoints>(opposite);
    if (!finite) return sh;

    std::vector<Rat> xs;
    Rat base = Rat(1, 2) - band.a;  // P(1/2)/4 + 2^-(N+2)
    Rat scale(1, pow2(N + 1));
    for (const auto& y : representative_points(opposite)) {
        if (!y.exact) return sh;  // fall back to the symbolic form
        Rat off = base - *y.exact * scale;
        xs.push_back(Rat(1, 2) - off);
        xs.push_back(Rat(1, 2) + off);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    if (xs.size() == 2) {
        TwoPoints tp;
        tp.x_minus = PointVal::of_rat(xs[0]);
        tp.x_plus = PointVal::of_rat(xs[1]);
        return tp;
    }
    if (xs.size() == 4) {
        FourPoints fp;
        for (std::size_t i = 0; i < 4; ++i) fp.xs[i] = PointVal::of_rat(xs[i]);
        return fp;
    }
    return sh;
}

namespace {

/// max over (v_{k-1}, v_k]:
/// 1/2 + (4v-1)/(5 2^{2k-1}(1-2v)) - 3 v^{2k+1}/(5 (1-v^2)(1-2v))
Rat kband_value_exact(const Rat& v, unsigned k) {
    Rat v2k1 = pow_rat(v, 2 * static_cast<long>(k) + 1);
    Rat t1 = (4 * v - 1) / (Rat(5) * pow2(2 * k - 1) * (1 - 2 * v));
    Rat t2 = 3 * v2k1 / (5 * (1 - v * v) * (1 - 2 * v));
    return Rat(1, 2) + t1 - t2;
}

Real kband_value_real(const Real& v, unsigned k) {
    Real v2k1 = pow(v, 2 * k + 1);
    Real t1 = (4 * v - 1) / (5 * Real(pow2(2 * k - 1)) * (1 - 2 * v));
    Real t2 = 3 * v2k1 / (5 * (1 - v * v) * (1 - 2 * v));
    return Real(0.5) + t1 - t2;
}

ExtremumReport base_report(const RealPoint& v, ExtrKind kind) {
    ExtremumReport r;
    r.v_point = v;
    r.v = v.to_real();
    r.kind = kind;
    r.value_err = Real(0);
    return r;
}

void set_exact_value(ExtremumReport& r, const Rat& value) {
    r.value_exact = value;
    r.value = to_real(value);
    r.value_err = Real(0);
}

ExtremumReport global_min(const RealPoint& v, const ExtremumOptions& opts);

ExtremumReport global_max(const RealPoint& v, const ExtremumOptions& opts) {
    ExtremumReport r = base_report(v, ExtrKind::Max);
    int c_half = v.compare(Rat(1, 2));

    if (c_half > 0) {  // (1/2, 1): consistent series of 2v sums to 1/(1+x)
        r.branch = Branch::MaxAltGeom;
        r.set = TwoPoints{PointVal::of_rat(Rat(1, 3)), PointVal::of_rat(Rat(2, 3))};
        if (v.is_rational()) {
            set_exact_value(r, Rat(1) / (3 * (1 - v.rational_value())));
        } else {
            r.value = 1 / (3 * (1 - r.v));
            r.value_err = float_slack(r.value);
        }
        return r;
    }

    if (c_half == 0) {  // v = 1/2: 2v consistent with 1 - x
        r.branch = Branch::MaxKahane;
        r.N = 1;
        SignSeq p = SignSeq::polynomial({1, -1});
        r.set = assemble_blockcantor(p);
        PolyBand band = band_from_polynomial(p);
        set_exact_value(r, band.value_of_v.eval(Rat(1, 2)) / (1 - Rat(1, 4)));
        return r;
    }

    int c_quarter = v.compare(Rat(1, 4));
    int c_mhalf = v.compare(Rat(-1, 2));

    if (c_quarter <= 0 && c_mhalf >= 0) {  // [-1/2, 1/4]
        r.branch = Branch::MaxCenter;
        r.set = OnePoint{};
        set_exact_value(r, Rat(1, 2));
        return r;
    }

    if (c_mhalf < 0) {  // (-1, -1/2): k-band of 2v in (-2, -1)
        RealPoint w = double_point(v);
        KBand band = locate_k_band(w);
        r.N = 2 * band.k;
        if (band.exact) {
            r.branch = Branch::MaxKBandBoundary;
            std::vector<std::int8_t> signs(2 * band.k + 1, -1);
            signs[0] = 1;
            SignSeq p = SignSeq::polynomial(std::move(signs));
            ExtremumReport minrep = global_min(v, opts);
            r.set = assemble_shifted(p, minrep.set);
        } else {
            r.branch = Branch::MaxKBand;
            Rat off(1, 5 * pow2(2 * band.k - 1));
            r.set = TwoPoints{PointVal::of_rat(Rat(1, 2) - off),
                              PointVal::of_rat(Rat(1, 2) + off)};
        }
        if (v.is_rational()) {
            set_exact_value(r, kband_value_exact(v.rational_value(), band.k));
        } else {
            r.value = kband_value_real(r.v, band.k);
            r.value_err = float_slack(r.value);
        }
        return r;
    }

    // (1/4, 1/2): construct the consistent function of 2v
    RealPoint w = double_point(v);
    ConsistencyResult res = construct(w, Mode::Consistent, opts.max_len);
    if (res.terminated) {
        r.branch = Branch::MaxBlockCantor;
        const auto N = static_cast<unsigned>(res.func.degree());
        r.N = N;
        r.set = assemble_blockcantor(res.func);
        PolyBand band = band_from_polynomial(res.func);
        if (v.is_rational()) {
            const Rat& vq = v.rational_value();
            set_exact_value(r, band.value_of_v.eval(vq) / (1 - pow_rat(vq, N + 1)));
        } else {
            r.value = band.value_of_v.eval(r.v) / (1 - pow(r.v, N + 1));
            r.value_err = float_slack(r.value);
        }
        return r;
    }

    r.branch = Branch::MaxSeries;
    try {
        r.set = extremum_points_from_series(res.func, opts.digit_len);
        auto [val, err] = value_from_series(res.func, r.v, Real(opts.tol));
        r.value = val;
        r.value_err = err;
    } catch (const SignAmbiguous&) {
        // construction signs ran out of float precision: report what is
        // materialized and widen the error by the unknown tail
        r.branch = Branch::SeriesTruncated;
        std::size_t L = res.func.materialized();
        r.set = extremum_points_from_series(res.func, L);
        auto [val, err] = value_from_prefix(res.func.prefix(L), r.v);
        r.value = val;
        r.value_err = err;
    }
    return r;
}

ExtremumReport global_min(const RealPoint& v, const ExtremumOptions& opts) {
    (void)opts;
    ExtremumReport r = base_report(v, ExtrKind::Min);
    int c = v.compare(Rat(-1, 2));

    if (c > 0) {  // (-1/2, 1): anti-consistent series sums to 1/(1-x)
        r.branch = Branch::MinEndpoints;
        r.set = TwoPoints{PointVal::of_rat(Rat(0)), PointVal::of_rat(Rat(1))};
        set_exact_value(r, Rat(0));
        return r;
    }
    if (c == 0) {  // v = -1/2: 2v anti-consistent with 1 + x
        r.branch = Branch::MinBlockCantor;
        r.N = 1;
        SignSeq p = SignSeq::polynomial({1, 1});
        r.set = assemble_blockcantor(p);
        set_exact_value(r, Rat(0));
        return r;
    }
    // (-1, -1/2): anti-consistent series sums to (1+x)/(1+x^2)
    r.branch = Branch::MinPairAlt;
    r.set = TwoPoints{PointVal::of_rat(Rat(1, 5)), PointVal::of_rat(Rat(4, 5))};
    if (v.is_rational()) {
        const Rat& q = v.rational_value();
        set_exact_value(r, (1 + 2 * q) / (5 * (1 - q * q)));
    } else {
        r.value = (1 + 2 * r.v) / (5 * (1 - r.v * r.v));
        r.value_err = float_slack(r.value);
    }
    return r;
}

}  // namespace

ExtremumReport global_extremum(const RealPoint& v, ExtrKind kind, const ExtremumOptions& opts) {
    if (v.compare(Rat(-1)) <= 0 || v.compare(Rat(1)) >= 0)
        throw std::invalid_argument("global_extremum: -1 < v < 1 required");
    return kind == ExtrKind::Max ? global_max(v, opts) : global_min(v, opts);
}

}  // namespace takagi
