#include "takagi/poly.hpp"

#include <algorithm>
#include <sstream>

namespace takagi {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval operator*(const Rat& c, const RatInterval& a) {
    if (c >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) {
    RatPoly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

RatPoly RatPoly::from_signs(const std::vector<std::int8_t>& signs) {
    std::vector<Rat> c;
    c.reserve(signs.size());
    for (auto s : signs) c.emplace_back(static_cast<int>(s));
    return RatPoly(std::move(c));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Real RatPoly::eval(const Real& x) const {
    Real acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real(*it);
    return acc;
}

double RatPoly::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + static_cast<double>(*it);
    return acc;
}

RatInterval RatPoly::eval(const RatInterval& x) const {
    RatInterval acc{Rat(0), Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly& RatPoly::negate() {
    for (auto& a : c_) a = -a;
    return *this;
}

RatPoly RatPoly::scale_arg(const Rat& s) const {
    std::vector<Rat> out(c_);
    Rat p(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
        p *= s;
        out[i] *= p;
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::compose_pow(unsigned k) const {
    if (k == 0) return RatPoly::constant(eval(Rat(1)));
    std::vector<Rat> out(c_.empty() ? 0 : (c_.size() - 1) * k + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::remainder(RatPoly a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        Rat f = a.leading() / b.leading();
        long shift = a.degree() - db;
        for (long i = 0; i <= db; ++i)
            a.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
        a.trim();
    }
    return a;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(RatPoly a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const long db = b.degree();
    RatPoly q;
    if (!a.is_zero() && a.degree() >= db)
        q.c_.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    while (!a.is_zero() && a.degree() >= db) {
        Rat f = a.leading() / b.leading();
        long shift = a.degree() - db;
        q.c_[static_cast<std::size_t>(shift)] = f;
        for (long i = 0; i <= db; ++i)
            a.c_[static_cast<std::size_t>(i + shift)] -= f * b.c_[static_cast<std::size_t>(i)];
        a.trim();
    }
    q.trim();
    return {std::move(q), std::move(a)};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat lead = a.leading();
        for (auto& x : a.c_) x /= lead;
    }
    return a;
}

RatPoly RatPoly::square_free() const {
    if (degree() < 1) return *this;
    RatPoly g = gcd(*this, derivative());
    if (g.degree() < 1) return *this;
    return divmod(*this, g).first;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat& a = c_[i];
        if (a == 0) continue;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1) && i > 0;
        if (!unit) os << mag;
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

namespace {
int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
}  // namespace

Bracket bisect_root(const RatPoly& p, Rat lo, Rat hi, const Rat& width_tol) {
    int slo = sgn(p.eval(lo));
    int shi = sgn(p.eval(hi));
    if (slo == 0) return {lo, lo, true};
    if (shi == 0) return {hi, hi, true};
    if (slo == shi) throw std::invalid_argument("bisect_root: no sign change on bracket");
    while (hi - lo > width_tol) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(p.eval(mid));
        if (sm == 0) return {mid, mid, true};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi, false};
}

std::vector<Bracket> isolate_roots(const RatPoly& p, const Rat& lo, const Rat& hi,
                                   unsigned probes, const Rat& width_tol) {
    std::vector<Bracket> out;
    if (probes < 2 || p.degree() < 1) return out;
    Rat step = (hi - lo) / Rat(static_cast<long>(probes));
    Rat x0 = lo;
    int s0 = sgn(p.eval(x0));
    for (unsigned i = 1; i <= probes; ++i) {
        Rat x1 = (i == probes) ? hi : Rat(lo + step * Rat(static_cast<long>(i)));
        int s1 = sgn(p.eval(x1));
        if (s0 == 0) {
            out.push_back({x0, x0, true});
        } else if (s1 != 0 && s1 != s0) {
            out.push_back(bisect_root(p, x0, x1, width_tol));
        }
        x0 = x1;
        s0 = s1;
    }
    if (s0 == 0) out.push_back({x0, x0, true});
    return out;
}

}  // namespace takagi
