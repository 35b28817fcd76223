#pragma once

#include "takagi/real.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace takagi {

/// Evaluation request for T_v(x) = sum_{n>=0} v^n T_0(2^n x), |v| < 1.
struct EvalParams {
    double v = 0.5;
    double abs_tol = 1e-12;
    std::size_t max_terms = 10000;
};

/// Distance from x to the nearest integer. Periodic with period 1,
/// t0(x) = t0(1-x) = t0(-x), values in [0, 1/2].
inline double t0(double x) {
    double f = x - std::floor(x);
    return f <= 0.5 ? f : 1.0 - f;
}

inline Rat t0(const Rat& x) {
    Rat f = x - Rat(floor_rat(x));
    return f <= Rat(1, 2) ? f : Rat(1) - f;
}

inline Real t0(const Real& x) {
    Real f = x - floor(x);
    return f <= Real(0.5) ? f : Real(Real(1) - f);
}

namespace detail {

inline double dup(double x) {
    double y = x + x;
    return y >= 1 ? y - std::floor(y) : y;
}
inline Real dup(const Real& x) {
    Real y = x + x;
    return y >= 1 ? Real(y - floor(y)) : y;
}
inline Rat dup(const Rat& x) {
    Rat y = x + x;
    return y >= 1 ? Rat(y - Rat(floor_rat(y))) : y;
}

template <class T>
T pow_n(T b, std::size_t e) {
    T acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace detail

/// Partial sum with the tail bound |v|^{K+1} / (2(1-|v|)) <= abs_tol.
/// Returns (value, achieved tail bound). Throws TolNotReached when
/// max_terms is hit first.
template <class T>
std::pair<T, T> t_v(T x, const EvalParams& p) {
    if (!(std::abs(p.v) < 1.0)) throw std::invalid_argument("t_v: |v| must be < 1");
    if (p.v == 0.0) return {t0(x), T(0)};

    // smallest K with |v|^{K+1} <= 2 (1-|v|) tol
    double k_est = std::log(2.0 * (1.0 - std::abs(p.v)) * p.abs_tol) / std::log(std::abs(p.v));
    std::size_t K = k_est <= 1 ? 1 : static_cast<std::size_t>(std::ceil(k_est));
    bool reached = true;
    if (K > p.max_terms) {
        K = p.max_terms;
        reached = false;
    }

    T acc(0), vp(1), y = x;
    const T v = T(p.v);
    for (std::size_t n = 0; n <= K; ++n) {
        acc += vp * t0(y);
        vp *= v;
        y = detail::dup(y);
    }
    const T av = T(std::abs(p.v));
    T bound = detail::pow_n(av, K + 1) / (2 * (1 - av));
    if (!reached && !(bound <= T(p.abs_tol)))
        throw TolNotReached("t_v: max_terms reached with tail bound above abs_tol");
    return {acc, bound};
}

/// Exact finite sum  S_{v,N}(x) = sum_{k=0}^{N} v^k T_0(2^k x).
template <class T>
T s_vn(T x, T v, std::size_t N) {
    T acc(0), vp(1), y = x;
    for (std::size_t k = 0; k <= N; ++k) {
        acc += vp * t0(y);
        vp *= v;
        y = detail::dup(y);
    }
    return acc;
}

/// |T_v(x) - S_{v,N-1}(x) - v^N T_v(2^N x)|; identically small (a self test,
/// bounded by 3x the evaluation tail bound).
double functional_equation_residual(double x, std::size_t N, const EvalParams& p);
Real functional_equation_residual(const Real& x, std::size_t N, const EvalParams& p);

}  // namespace takagi
