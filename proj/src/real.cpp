#include "takagi/real.hpp"

#include <cmath>
#include <sstream>

namespace takagi {

namespace {
thread_local unsigned g_precision_bits = 0;
}

void set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    g_precision_bits = bits;
    // boost counts precision in decimal digits
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

unsigned precision_bits() {
    if (g_precision_bits == 0) set_precision_bits(200);
    return g_precision_bits;
}

Rat pow_rat(const Rat& base, long exp) {
    if (exp < 0) return Rat(1) / pow_rat(base, -exp);
    Rat acc(1), b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Int pow2(unsigned exp) {
    Int r(1);
    return r << exp;
}

Int floor_rat(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

Real to_real(const Rat& q) {
    (void)precision_bits();  // make sure a default is installed
    return Real(q);
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string real_to_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

}  // namespace takagi
