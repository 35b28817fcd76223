#pragma once

#include "takagi/real.hpp"

#include <random>

namespace takagi::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x7a6b61676931ULL);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

inline long uniform_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

/// Random rational p/q in (lo, hi) with denominator up to max_den.
inline Rat random_rational(double lo, double hi, long max_den = 1000) {
    long q = uniform_int(2, max_den);
    long pl = static_cast<long>(lo * static_cast<double>(q)) + 1;
    long ph = static_cast<long>(hi * static_cast<double>(q));
    if (ph < pl) ph = pl;
    return Rat(uniform_int(pl, ph), q);
}

inline bool close(const Real& a, const Real& b, double tol) {
    return static_cast<double>(abs(a - b)) <= tol;
}

inline bool close(const Real& a, double b, double tol) { return close(a, Real(b), tol); }

}  // namespace takagi::test
