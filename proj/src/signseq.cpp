#include "takagi/signseq.hpp"

#include <bit>
#include <sstream>

namespace takagi {

// ---------------------------------------------------------------- ClosedForm

ClosedForm ClosedForm::neg_k(unsigned k) {
    ClosedForm cf{Kind::NegK};
    cf.k = k;
    return cf;
}

ClosedForm ClosedForm::sqrt_lift(const ClosedForm& inner) {
    if (inner.kind == Kind::SqrtLift) {
        ClosedForm cf{Kind::SqrtLift};
        cf.n = inner.n + 1;
        cf.inner = inner.inner;
        return cf;
    }
    ClosedForm cf{Kind::SqrtLift};
    cf.n = 1;
    cf.inner = std::make_shared<const ClosedForm>(inner);
    return cf;
}

namespace {

template <class T>
T cf_eval(const ClosedForm& cf, const T& x) {
    const T one(1);
    switch (cf.kind) {
        case ClosedForm::Kind::Geom:
            return one / (one - x);
        case ClosedForm::Kind::AltGeom:
            return one / (one + x);
        case ClosedForm::Kind::PairAlt:
            return (one + x) / (one + x * x);
        case ClosedForm::Kind::TwoToOne:
            return (one - 2 * x) / (one - x);
        case ClosedForm::Kind::NegK: {
            T xp(1);
            for (unsigned i = 0; i < 2 * cf.k + 1; ++i) xp *= x;
            return (one - 2 * x) / (one - x) + 2 * xp / ((one - x) * (one + x * x));
        }
        case ClosedForm::Kind::SqrtLift: {
            T prod(1), xp = x;
            for (unsigned j = 0; j < cf.n; ++j) {
                prod *= (one - xp);
                xp *= xp;
            }
            return prod * cf_eval(*cf.inner, xp);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Rat ClosedForm::eval(const Rat& x) const { return cf_eval(*this, x); }
Real ClosedForm::eval(const Real& x) const { return cf_eval(*this, x); }

std::int8_t ClosedForm::coeff(std::size_t i) const {
    switch (kind) {
        case Kind::Geom:
            return 1;
        case Kind::AltGeom:
            return (i % 2 == 0) ? 1 : -1;
        case Kind::PairAlt:
            return (i % 4 <= 1) ? 1 : -1;
        case Kind::TwoToOne:
            return i == 0 ? 1 : -1;
        case Kind::NegK: {
            if (i == 0) return 1;
            if (i <= 2 * static_cast<std::size_t>(k)) return -1;
            std::size_t j = (i - 2 * k - 1) / 2;
            return (j % 2 == 0) ? 1 : -1;
        }
        case Kind::SqrtLift: {
            // prod_{j<n}(1-x^{2^j}) = sum over subsets: coefficient of x^m is
            // (-1)^popcount(m) for m < 2^n
            std::size_t block = std::size_t(1) << n;
            std::size_t q = i / block, m = i % block;
            int sign = (std::popcount(m) % 2 == 0) ? 1 : -1;
            return static_cast<std::int8_t>(sign * inner->coeff(q));
        }
    }
    throw std::logic_error("unreachable");
}

std::string ClosedForm::to_string() const {
    switch (kind) {
        case Kind::Geom:
            return "1/(1-x)";
        case Kind::AltGeom:
            return "1/(1+x)";
        case Kind::PairAlt:
            return "(1+x)/(1+x^2)";
        case Kind::TwoToOne:
            return "(1-2x)/(1-x)";
        case Kind::NegK:
            return "(1-2x)/(1-x) + 2x^" + std::to_string(2 * k + 1) + "/((1-x)(1+x^2))";
        case Kind::SqrtLift: {
            std::ostringstream os;
            for (unsigned j = 0; j < n; ++j) os << "(1-x^" << (std::size_t(1) << j) << ")";
            os << " * [" << inner->to_string() << "](x^" << (std::size_t(1) << n) << ")";
            return os.str();
        }
    }
    return "";
}

// ------------------------------------------------------------------ SignSeq

struct SignSeq::State {
    mutable std::mutex mu;
    std::vector<std::int8_t> coeffs;
    bool poly = false;
    Generator gen;
    std::optional<ClosedForm> cf;
};

SignSeq SignSeq::polynomial(std::vector<std::int8_t> signs) {
    if (signs.empty() || signs[0] != 1)
        throw std::invalid_argument("unitary sequence must start with +1");
    for (auto s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("unitary coefficients are +-1");
    SignSeq f;
    f.state_ = std::make_shared<State>();
    f.state_->coeffs = std::move(signs);
    f.state_->poly = true;
    return f;
}

SignSeq SignSeq::series(std::vector<std::int8_t> prefix, Generator gen,
                        std::optional<ClosedForm> cf) {
    if (!prefix.empty() && prefix[0] != 1)
        throw std::invalid_argument("unitary sequence must start with +1");
    SignSeq f;
    f.state_ = std::make_shared<State>();
    f.state_->coeffs = std::move(prefix);
    f.state_->poly = false;
    f.state_->gen = std::move(gen);
    f.state_->cf = std::move(cf);
    return f;
}

SignSeq SignSeq::from_closed_form(ClosedForm cf) {
    auto cfp = std::make_shared<const ClosedForm>(std::move(cf));
    return series({}, [cfp](std::size_t i) { return cfp->coeff(i); }, *cfp);
}

bool SignSeq::is_polynomial() const { return state_->poly; }

long SignSeq::degree() const {
    if (!state_->poly) return -1;
    std::lock_guard lk(state_->mu);
    return static_cast<long>(state_->coeffs.size()) - 1;
}

std::size_t SignSeq::materialized() const {
    std::lock_guard lk(state_->mu);
    return state_->coeffs.size();
}

const std::optional<ClosedForm>& SignSeq::closed_form() const { return state_->cf; }

void SignSeq::ensure(std::size_t len) const {
    std::lock_guard lk(state_->mu);
    if (state_->poly) return;
    auto& c = state_->coeffs;
    while (c.size() < len) {
        std::int8_t s = state_->gen(c.size());
        if (s != 1 && s != -1) throw std::logic_error("generator produced a non-unit sign");
        if (c.empty() && s != 1) throw std::logic_error("unitary sequence must start with +1");
        c.push_back(s);
    }
}

std::int8_t SignSeq::coeff(std::size_t i) const {
    {
        std::lock_guard lk(state_->mu);
        if (i < state_->coeffs.size()) return state_->coeffs[i];
        if (state_->poly) throw std::out_of_range("coefficient index past polynomial degree");
    }
    ensure(i + 1);
    std::lock_guard lk(state_->mu);
    return state_->coeffs[i];
}

int SignSeq::coeff_or_zero(std::size_t i) const {
    {
        std::lock_guard lk(state_->mu);
        if (i < state_->coeffs.size()) return state_->coeffs[i];
        if (state_->poly) return 0;
    }
    ensure(i + 1);
    std::lock_guard lk(state_->mu);
    return state_->coeffs[i];
}

std::vector<std::int8_t> SignSeq::prefix(std::size_t len) const {
    if (!state_->poly) ensure(len);
    std::lock_guard lk(state_->mu);
    auto& c = state_->coeffs;
    std::size_t n = std::min(len, c.size());
    return std::vector<std::int8_t>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
}

RatPoly SignSeq::to_poly(std::size_t len) const { return RatPoly::from_signs(prefix(len)); }

// --------------------------------------------------------------- operations

LexResult lex_compare(const SignSeq& f, const SignSeq& g, std::size_t max_len) {
    for (std::size_t i = 0; i < max_len; ++i) {
        int a = f.coeff_or_zero(i);
        int b = g.coeff_or_zero(i);
        if (a < b) return {LexOrder::Less, i};
        if (a > b) return {LexOrder::Greater, i};
    }
    return {LexOrder::EqualUpTo, max_len};
}

SignSeq attached_series(const SignSeq& p, AttachSign sign) {
    if (!p.is_polynomial()) {
        // attached series of a point consistent with a series is the series
        // itself
        return p;
    }
    auto block = p.prefix(static_cast<std::size_t>(p.degree()) + 1);
    const int s = sign == AttachSign::Plus ? 1 : -1;
    return SignSeq::series({}, [block, s](std::size_t i) {
        std::size_t len = block.size();
        std::size_t b = i / len, j = i % len;
        int v = block[j];
        return static_cast<std::int8_t>(b == 0 ? v : s * v);
    });
}

bool is_intermediate(const SignSeq& f, const SignSeq& p, std::size_t check_len) {
    if (!p.is_polynomial()) {
        // intermediate series of a series-consistent point equal the series
        auto a = f.prefix(check_len), b = p.prefix(check_len);
        return a == b;
    }
    auto block = p.prefix(static_cast<std::size_t>(p.degree()) + 1);
    const std::size_t len = block.size();
    for (std::size_t b = 0; b * len < check_len; ++b) {
        int s = (b == 0) ? 1 : 0;  // sign of block b, fixed by its first entry
        for (std::size_t j = 0; j < len && b * len + j < check_len; ++j) {
            int have = f.coeff_or_zero(b * len + j);
            if (have == 0) return false;
            if (s == 0)
                s = (have == block[j]) ? 1 : -1;
            else if (have != s * block[j])
                return false;
        }
    }
    return true;
}

std::optional<Rat> eval_exact(const SignSeq& f, const Rat& x) {
    if (f.closed_form()) return f.closed_form()->eval(x);
    if (f.is_polynomial()) return f.to_poly(static_cast<std::size_t>(f.degree()) + 1).eval(x);
    return std::nullopt;
}

Rat eval_prefix(const SignSeq& f, const Rat& x, std::size_t len) {
    auto pre = f.prefix(len);
    Rat acc(0);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) acc = acc * x + Rat(static_cast<int>(*it));
    return acc;
}

std::pair<Real, Real> eval(const SignSeq& f, const Real& x, const Real& abs_tol) {
    if (!(abs(x) < 1)) throw std::invalid_argument("eval: |x| < 1 required");
    if (f.closed_form()) return {f.closed_form()->eval(x), Real(0)};
    if (f.is_polynomial()) {
        auto poly = f.to_poly(static_cast<std::size_t>(f.degree()) + 1);
        return {poly.eval(x), Real(0)};
    }
    // tail bound |x|^{K+1} / (1-|x|) <= abs_tol
    Real ax = abs(x);
    Real bound = ax / (1 - ax);
    std::size_t K = 0;
    const std::size_t cap = 1u << 22;
    while (bound > abs_tol) {
        bound *= ax;
        if (++K > cap) throw TolNotReached("eval: series prefix budget exhausted");
    }
    auto pre = f.prefix(K + 1);
    Real acc(0);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it)
        acc = acc * x + Real(static_cast<int>(*it));
    return {acc, bound};
}

std::pair<Rat, Rat> value_at_half(const SignSeq& f, std::size_t len) {
    const Rat half(1, 2);
    if (f.closed_form()) return {f.closed_form()->eval(half), Rat(0)};
    if (f.is_polynomial())
        return {f.to_poly(static_cast<std::size_t>(f.degree()) + 1).eval(half), Rat(0)};
    return {eval_prefix(f, half, len), Rat(1, pow2(static_cast<unsigned>(len)))};
}

Rat attached_value_at_half(const SignSeq& p, AttachSign sign) {
    if (!p.is_polynomial()) throw std::invalid_argument("attached values need a polynomial");
    const auto n1 = static_cast<unsigned>(p.degree() + 1);
    Rat ph = p.to_poly(n1).eval(Rat(1, 2));
    Rat q = Rat(1, pow2(n1));  // (1/2)^{N+1}
    if (sign == AttachSign::Plus) return ph / (1 - q);
    return ph * (1 - 2 * q) / (1 - q);
}

// ---------------------------------------------------------------- rendering

std::string to_sign_string(const SignSeq& f, std::size_t len) {
    auto pre = f.prefix(len);
    std::string out;
    out.reserve(pre.size());
    for (auto s : pre) out.push_back(s > 0 ? '+' : '-');
    return out;
}

std::string to_polynomial_string(const SignSeq& f, std::size_t len) {
    auto pre = f.prefix(len);
    std::ostringstream os;
    for (std::size_t i = 0; i < pre.size(); ++i) {
        if (i == 0) {
            os << "1";
            continue;
        }
        os << (pre[i] > 0 ? " + " : " - ");
        os << "x";
        if (i > 1) os << "^" << i;
    }
    if (!f.is_polynomial()) os << " + ...";
    return os.str();
}

std::vector<std::int8_t> parse_sign_string(const std::string& s) {
    std::vector<std::int8_t> out;
    for (char ch : s) {
        if (ch == '+')
            out.push_back(1);
        else if (ch == '-')
            out.push_back(-1);
        else if (ch == ' ' || ch == '\t')
            continue;
        else
            throw std::invalid_argument("sign string: expected '+'/'-'");
    }
    if (out.empty() || out[0] != 1)
        throw std::invalid_argument("sign string must start with '+'");
    return out;
}

std::vector<std::int8_t> parse_polynomial_string(const std::string& s) {
    // accepts the to_polynomial_string() shape: 1 - x + x^2 - x^3 ...
    std::vector<std::int8_t> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i <= s.size()) {
        skip_ws();
        if (i >= s.size()) break;
        std::size_t power;
        if (s[i] == '1') {
            power = 0;
            ++i;
        } else if (s[i] == 'x') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                power = std::stoul(s.substr(start, i - start));
            }
        } else if (s[i] == '.') {
            break;  // trailing "..."
        } else {
            throw std::invalid_argument("polynomial string: unexpected character");
        }
        if (out.size() != power) throw std::invalid_argument("polynomial string: powers must ascend");
        out.push_back(static_cast<std::int8_t>(sign));
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] == '+')
            sign = 1;
        else if (s[i] == '-')
            sign = -1;
        else if (s[i] == '.')
            break;
        else
            throw std::invalid_argument("polynomial string: expected '+'/'-'");
        ++i;
    }
    if (out.empty() || out[0] != 1)
        throw std::invalid_argument("polynomial string must start with 1");
    return out;
}

}  // namespace takagi
