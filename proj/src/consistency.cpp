#include "takagi/consistency.hpp"

#include <memory>

namespace takagi {

namespace {

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Incremental state of the sign construction, one subclass per point kind.
/// next() emits c_n for n = 1, 2, ...; sign_state() is the sign of the
/// current partial sum S_{n-1}(w) (0 means the construction terminates).
struct Stepper {
    virtual ~Stepper() = default;
    virtual int sign_state() = 0;
    virtual std::int8_t next() = 0;
};

struct RationalStepper : Stepper {
    Rat w, wp{1}, S{1};
    Mode mode;
    std::size_t n = 0;

    RationalStepper(Rat w, Mode m) : w(std::move(w)), mode(m) {}

    int sign_state() override { return sgn(S); }

    std::int8_t next() override {
        int s = sign_state();
        if (s == 0)
            throw std::logic_error("construction terminated past the materialized prefix");
        std::int8_t c = static_cast<std::int8_t>(mode == Mode::Consistent ? -s : s);
        ++n;
        wp *= w;
        S += Rat(static_cast<int>(c)) * wp;
        return c;
    }
};

struct AlgebraicStepper : Stepper {
    RealPoint w;
    RatPoly D;
    RatPoly R;   // S_{n-1} mod D
    RatPoly pi;  // x^{n-1} mod D
    Mode mode;
    std::optional<int> cached_sign;

    AlgebraicStepper(const RealPoint& w, Mode m)
        : w(w), D(w.defining_poly()), R(RatPoly::constant(Rat(1))),
          pi(RatPoly::constant(Rat(1))), mode(m) {}

    int sign_state() override {
        if (!cached_sign) cached_sign = w.sign_of(R);
        return *cached_sign;
    }

    std::int8_t next() override {
        int s = sign_state();
        if (s == 0)
            throw std::logic_error("construction terminated past the materialized prefix");
        std::int8_t c = static_cast<std::int8_t>(mode == Mode::Consistent ? -s : s);
        // pi <- (pi * x) mod D
        std::vector<Rat> shifted(pi.coeffs().size() + 1, Rat(0));
        for (std::size_t i = 0; i < pi.coeffs().size(); ++i) shifted[i + 1] = pi.coeffs()[i];
        pi = RatPoly(std::move(shifted));
        if (pi.degree() >= D.degree()) pi = RatPoly::remainder(pi, D);
        RatPoly term = pi;
        if (c < 0) term.negate();
        R = R + term;
        cached_sign.reset();
        return c;
    }
};

struct FloatStepper : Stepper {
    Real w, wp{1}, S{1}, sum_abs{1};
    unsigned bits;
    Mode mode;
    std::size_t n = 0;

    FloatStepper(Real w, unsigned bits, Mode m) : w(std::move(w)), bits(bits), mode(m) {}

    int sign_state() override {
        unsigned b = bits > 16 ? bits - 8 : 8;
        Real eps = sum_abs / Real(pow2(b));
        if (abs(S) <= eps)
            throw SignAmbiguous(
                "partial sum at term " + std::to_string(n) + " below threshold 2^-" +
                    std::to_string(b) + "; raise precision or supply the point exactly",
                n);
        return S > 0 ? 1 : -1;
    }

    std::int8_t next() override {
        int s = sign_state();
        std::int8_t c = static_cast<std::int8_t>(mode == Mode::Consistent ? -s : s);
        ++n;
        wp *= w;
        S += static_cast<int>(c) * wp;
        sum_abs += abs(wp);
        return c;
    }
};

std::unique_ptr<Stepper> make_stepper(const RealPoint& w, Mode mode) {
    if (w.is_rational()) return std::make_unique<RationalStepper>(w.rational_value(), mode);
    if (w.is_algebraic()) return std::make_unique<AlgebraicStepper>(w, mode);
    return std::make_unique<FloatStepper>(w.to_real(), precision_bits(), mode);
}

}  // namespace

ConsistencyResult construct(const RealPoint& w, Mode mode, std::size_t max_len) {
    if (max_len < 2) throw std::invalid_argument("construct: max_len >= 2");
    auto st = std::shared_ptr<Stepper>(make_stepper(w, mode));

    std::vector<std::int8_t> signs{1};
    while (signs.size() < max_len) {
        if (st->sign_state() == 0) {
            ConsistencyResult res;
            res.func = SignSeq::polynomial(std::move(signs));
            res.kind = mode;
            res.terminated = true;
            res.prefix_len = static_cast<std::size_t>(res.func.degree()) + 1;
            return res;
        }
        signs.push_back(st->next());
    }

    ConsistencyResult res;
    std::size_t produced = signs.size();
    res.func = SignSeq::series(std::move(signs), [st, produced](std::size_t i) {
        if (i < produced) throw std::logic_error("generator called out of order");
        return st->next();
    });
    res.kind = mode;
    res.terminated = false;
    res.prefix_len = produced;
    return res;
}

bool check_polynomial_criterion(const SignSeq& p, const RealPoint& w) {
    if (!p.is_polynomial()) throw std::invalid_argument("criterion needs a polynomial");
    const auto N = static_cast<std::size_t>(p.degree());
    RatPoly poly = p.to_poly(N + 1);
    if (w.sign_of(poly) != 0) return false;
    // tail c_k x^k + ... + c_N x^N, checked against the sign of c_k
    for (std::size_t k = 1; k <= N; ++k) {
        std::vector<Rat> tail(N + 1, Rat(0));
        for (std::size_t i = k; i <= N; ++i) tail[i] = Rat(static_cast<int>(p.coeff(i)));
        int s = w.sign_of(RatPoly(std::move(tail)));
        if (s * static_cast<int>(p.coeff(k)) <= 0) return false;
    }
    return true;
}

SignSeq catalog_anticonsistent(const RealPoint& w) {
    int c = w.compare(Rat(-1));
    if (c > 0) return SignSeq::from_closed_form(ClosedForm::geom());
    if (c == 0) return SignSeq::polynomial({1, 1});
    return SignSeq::from_closed_form(ClosedForm::pair_alt());
}

RatPoly ones_poly(unsigned n) {
    std::vector<Rat> c(n + 1, Rat(-1));
    c[0] = Rat(1);
    return RatPoly(std::move(c));
}

std::optional<SignSeq> catalog_consistent(const RealPoint& w) {
    int c1 = w.compare(Rat(1));
    if (c1 > 0) return SignSeq::from_closed_form(ClosedForm::alt_geom());
    if (c1 == 0) return SignSeq::polynomial({1, -1});
    if (w.compare(Rat(-1)) >= 0) {
        if (w.compare(Rat(1, 2)) <= 0) return SignSeq::from_closed_form(ClosedForm::two_to_one());
        return std::nullopt;  // (1/2, 1): no catalog entry
    }
    KBand band = locate_k_band(w);
    if (band.exact) {
        std::vector<std::int8_t> signs(2 * band.k + 1, -1);
        signs[0] = 1;
        return SignSeq::polynomial(std::move(signs));
    }
    return SignSeq::from_closed_form(ClosedForm::neg_k(band.k));
}

namespace {

/// Q_{2k+1}(t) = 1 - 2t + t^{2k+1}: increasing on t <= -1, root w_k.
/// w < w_k iff Q(w) < 0.
RatPoly q_poly(unsigned k) {
    std::vector<Rat> c(2 * k + 2, Rat(0));
    c[0] = Rat(1);
    c[1] = Rat(-2);
    c[2 * k + 1] = Rat(1);
    return RatPoly(std::move(c));
}

int q_sign_float(const Real& w, unsigned k) {
    // 1 - 2w + w^{2k+1} with the threshold of the working precision
    Real wp = pow(w, 2 * k + 1);
    Real val = 1 - 2 * w + wp;
    Real scale = 1 + 2 * abs(w) + abs(wp);
    unsigned bits = precision_bits() > 16 ? precision_bits() - 8 : 8;
    if (abs(val) <= scale / Real(pow2(bits)))
        throw SignAmbiguous("band test too close to a root w_k; raise precision");
    return val > 0 ? 1 : -1;
}

}  // namespace

KBand locate_k_band(const RealPoint& w, unsigned exact_cap) {
    if (w.compare(Rat(-1)) >= 0) throw std::invalid_argument("k-band is defined for w < -1");
    // exact sign tests while k is small
    for (unsigned k = 1; k <= exact_cap; ++k) {
        int s = w.sign_of(q_poly(k));
        if (s == 0) return {k, true};
        if (s < 0) return {k, false};  // w < w_k, and w >= w_{k-1} from the previous round
    }
    // far beyond the cap w is very close to -1; bracket k with the
    // asymptotics w_k ~ -1 - ln3/(2k) and finish with float sign tests
    Real wr = w.to_real();
    Real approx = log(Real(3)) / (-2 * (wr + 1));
    if (!(approx > 0)) throw std::logic_error("k-band asymptotic bracket failed");
    unsigned lo = exact_cap;  // w >= w_lo already established
    auto above = static_cast<unsigned long>(static_cast<double>(approx) * 2 + 16);
    unsigned hi = static_cast<unsigned>(above);
    while (q_sign_float(wr, hi) > 0) hi *= 2;  // ensure w < w_hi
    while (hi - lo > 1) {
        unsigned mid = lo + (hi - lo) / 2;
        if (q_sign_float(wr, mid) < 0)
            hi = mid;
        else
            lo = mid;
    }
    return {hi, false};
}

RealPoint locate_wk(unsigned k, const Rat& width_tol) {
    if (k < 1) throw std::invalid_argument("locate_wk: k >= 1");
    RatPoly p = ones_poly(2 * k);
    Bracket b = bisect_root(p, Rat(-2), Rat(-1), width_tol);
    if (b.exact) return RealPoint::rational(b.lo);
    return RealPoint::algebraic(std::move(p), b.lo, b.hi);
}

RealPoint locate_un(unsigned n, const Rat& width_tol) {
    if (n < 1) throw std::invalid_argument("locate_un: n >= 1");
    if (n == 1) return RealPoint::rational(Rat(1));
    RatPoly p = ones_poly(n);
    Bracket b = bisect_root(p, Rat(1, 2), Rat(3, 4), width_tol);
    if (b.exact) return RealPoint::rational(b.lo);
    return RealPoint::algebraic(std::move(p), b.lo, b.hi);
}

SignSeq sqrt_lift(const SignSeq& f) {
    if (f.is_polynomial()) {
        auto c = f.prefix(static_cast<std::size_t>(f.degree()) + 1);
        std::vector<std::int8_t> b(2 * c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            b[2 * k] = c[k];
            b[2 * k + 1] = static_cast<std::int8_t>(-c[k]);
        }
        return SignSeq::polynomial(std::move(b));
    }
    std::optional<ClosedForm> cf;
    if (f.closed_form()) cf = ClosedForm::sqrt_lift(*f.closed_form());
    SignSeq inner = f;
    return SignSeq::series({}, [inner](std::size_t i) {
        std::int8_t c = inner.coeff(i / 2);
        return static_cast<std::int8_t>(i % 2 == 0 ? c : -c);
    }, std::move(cf));
}

std::optional<unsigned> sign_run_bound(const RealPoint& w, unsigned cap) {
    if (w.compare(Rat(0)) <= 0) throw std::invalid_argument("sign_run_bound: w > 0");
    if (w.compare(Rat(1, 2)) <= 0) return std::nullopt;
    for (unsigned m = 1; m <= cap; ++m) {
        if (w.sign_of(ones_poly(m)) < 0) return m;
    }
    return std::nullopt;
}

namespace {

/// Numerator polynomial of a closed form (whose denominator has no roots on
/// (0, 1)), for exact vanishing tests.
RatPoly cf_numerator(const ClosedForm& cf) {
    switch (cf.kind) {
        case ClosedForm::Kind::Geom:
        case ClosedForm::Kind::AltGeom:
            return RatPoly::constant(Rat(1));
        case ClosedForm::Kind::PairAlt:
            return RatPoly({Rat(1), Rat(1)});
        case ClosedForm::Kind::TwoToOne:
            return RatPoly({Rat(1), Rat(-2)});
        case ClosedForm::Kind::NegK: {
            // (1-2x)(1+x^2) + 2x^{2k+1}
            std::vector<Rat> c(2 * cf.k + 2, Rat(0));
            c[0] = Rat(1);
            c[1] = Rat(-2);
            c[2] = Rat(1);
            c[3] += Rat(-2);
            c[2 * cf.k + 1] += Rat(2);
            return RatPoly(std::move(c));
        }
        case ClosedForm::Kind::SqrtLift: {
            RatPoly prod = RatPoly::constant(Rat(1));
            for (unsigned j = 0; j < cf.n; ++j) {
                std::vector<Rat> f(( std::size_t(1) << j) + 1, Rat(0));
                f[0] = Rat(1);
                f.back() = Rat(-1);
                prod = prod * RatPoly(std::move(f));
            }
            return prod * cf_numerator(*cf.inner).compose_pow(1u << cf.n);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Real residual_at_self(const SignSeq& f, const RealPoint& w, const Real& tol) {
    if (f.closed_form()) {
        if (w.sign_of(cf_numerator(*f.closed_form())) == 0) return Real(0);
        return abs(f.closed_form()->eval(w.to_real()));
    }
    if (f.is_polynomial()) {
        RatPoly p = f.to_poly(static_cast<std::size_t>(f.degree()) + 1);
        if (w.sign_of(p) == 0) return Real(0);
        return abs(p.eval(w.to_real()));
    }
    Real x = w.to_real();
    Real ax = abs(x);
    if (!(ax < 1)) throw std::invalid_argument("residual_at_self: |w| < 1 required");
    // prefix long enough that the geometric tail is below tol
    Real bound = ax / (1 - ax);
    std::size_t L = 0;
    const std::size_t capL = 1u << 22;
    while (bound > tol) {
        bound *= ax;
        if (++L > capL) throw TolNotReached("residual_at_self: prefix budget exhausted");
    }
    auto pre = f.prefix(L + 1);
    Real acc(0);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it)
        acc = acc * x + Real(static_cast<int>(*it));
    return abs(acc);
}

}  // namespace takagi
