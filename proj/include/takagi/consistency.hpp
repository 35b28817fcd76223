#pragma once

#include "takagi/realpoint.hpp"
#include "takagi/signseq.hpp"

#include <optional>

namespace takagi {

enum class Mode { Consistent, AntiConsistent };

/// Result of the inductive sign construction at a point w.
///
/// c_0 = 1; while the running partial sum S_n(w) is nonzero the next
/// coefficient is -sign(S_n(w)) (consistent) or +sign (anti-consistent);
/// S_n(w) = 0 terminates with the polynomial S_n.
struct ConsistencyResult {
    SignSeq func;
    Mode kind = Mode::Consistent;
    bool terminated = false;  // polynomial found
    std::size_t prefix_len = 0;
};

/// Runs the construction for up to max_len coefficients. The returned
/// series keeps its generator, so later operations may extend it further.
/// Throws SignAmbiguous for float points whose partial sum falls below the
/// decision threshold.
ConsistencyResult construct(const RealPoint& w, Mode mode, std::size_t max_len = 256);

/// P(w) = 0 and c_k (c_k w^k + ... + c_N w^N) > 0 for k = 1..N.
bool check_polynomial_criterion(const SignSeq& p, const RealPoint& w);

/// The anti-consistent function of any real point:
/// 1/(1-x) for w > -1, the polynomial 1+x at w = -1, (1+x)/(1+x^2) below.
SignSeq catalog_anticonsistent(const RealPoint& w);

/// The consistent function where a closed form is known:
/// 1/(1+x) for w > 1; 1-x at w = 1; (1-2x)/(1-x) on [-1, 1/2];
/// for w < -1 the k-family (P_{2k} exactly at w_k). Points of (1/2, 1)
/// have no catalog entry (use construct).
std::optional<SignSeq> catalog_consistent(const RealPoint& w);

/// 1 - x - x^2 - ... - x^n
RatPoly ones_poly(unsigned n);

/// The unique negative root w_k of 1 - t - ... - t^{2k}, inside (-2, -1).
/// w_k increases to -1 with w_k = -1 - ln3/(2k) + O(1/k^2).
RealPoint locate_wk(unsigned k, const Rat& width_tol = Rat(1, pow2(100)));

/// The unique positive root u_n of 1 - x - ... - x^n; u_1 = 1 and
/// u_n in (1/2, 1/sqrt2) for n >= 2, with u_n = 1/2 + 2^-(n+2) + O(n 4^-n).
RealPoint locate_un(unsigned n, const Rat& width_tol = Rat(1, pow2(100)));

/// Which band w falls into for w < -1: the k with w in (w_{k-1}, w_k],
/// w_0 = -inf. exact is set when w = w_k.
struct KBand {
    unsigned k;
    bool exact;
};
KBand locate_k_band(const RealPoint& w, unsigned exact_cap = 64);

/// Interleaves the consistent function of d in [1/2, 1) into the one of
/// sqrt(d): b_{2k} = c_k, b_{2k+1} = -c_k, matching (1-x) F(x^2).
SignSeq sqrt_lift(const SignSeq& f);

/// Longest possible run of identical signs in the function consistent with
/// w > 0: the smallest m with 1 - w - ... - w^m < 0, or nullopt (unbounded)
/// for w <= 1/2.
std::optional<unsigned> sign_run_bound(const RealPoint& w, unsigned cap = 1u << 20);

/// |F(w)| for F consistent with w in [1/2, 1); 0 exactly when the closed
/// form (or polynomial) vanishes at w, otherwise a truncated evaluation
/// with tail below tol.
Real residual_at_self(const SignSeq& f, const RealPoint& w, const Real& tol);

}  // namespace takagi
