#pragma once

#include "takagi/poly.hpp"
#include "takagi/real.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace takagi {

/// Closed-form sum of a unitary series on |x| < 1.
///
///   Geom      1/(1-x)                 all +1
///   AltGeom   1/(1+x)                 alternating +-
///   PairAlt   (1+x)/(1+x^2)           ++-- repeating
///   TwoToOne  (1-2x)/(1-x)            + then all -1
///   NegK(k)   (1-2x)/(1-x) + 2x^{2k+1}/((1-x)(1+x^2))
///   SqrtLift(inner, n)   prod_{j<n}(1-x^{2^j}) * inner(x^{2^n})
struct ClosedForm {
    enum class Kind { Geom, AltGeom, PairAlt, TwoToOne, NegK, SqrtLift };

    Kind kind = Kind::Geom;
    unsigned k = 0;                          // NegK
    unsigned n = 0;                          // SqrtLift
    std::shared_ptr<const ClosedForm> inner; // SqrtLift

    static ClosedForm geom() { return {Kind::Geom}; }
    static ClosedForm alt_geom() { return {Kind::AltGeom}; }
    static ClosedForm pair_alt() { return {Kind::PairAlt}; }
    static ClosedForm two_to_one() { return {Kind::TwoToOne}; }
    static ClosedForm neg_k(unsigned k);
    static ClosedForm sqrt_lift(const ClosedForm& inner);

    Rat eval(const Rat& x) const;
    Real eval(const Real& x) const;
    /// Coefficient of x^i in the expansion.
    std::int8_t coeff(std::size_t i) const;
    std::string to_string() const;
};

/// A unitary coefficient sequence: c_0 = +1, c_i in {-1,+1}. Either a
/// polynomial (fixed finite degree) or a series prefix that extends itself
/// on demand through a deterministic generator.
///
/// Values are cheap to copy (shared immutable-once-materialized state).
/// Concurrent reads of materialized prefixes are safe; extension is
/// serialized internally.
class SignSeq {
public:
    /// Called with the index to produce, strictly increasing from the
    /// current length; invoked under the extension lock.
    using Generator = std::function<std::int8_t(std::size_t)>;

    SignSeq() = default;

    static SignSeq polynomial(std::vector<std::int8_t> signs);
    static SignSeq series(std::vector<std::int8_t> prefix, Generator gen,
                          std::optional<ClosedForm> cf = std::nullopt);
    static SignSeq from_closed_form(ClosedForm cf);

    bool valid() const { return state_ != nullptr; }
    bool is_polynomial() const;
    /// Polynomial degree N (length N+1).
    long degree() const;
    std::size_t materialized() const;
    const std::optional<ClosedForm>& closed_form() const;

    /// c_i; extends series on demand; throws std::out_of_range past the end
    /// of a polynomial.
    std::int8_t coeff(std::size_t i) const;
    /// Like coeff(), but 0 past the end of a polynomial (power-series view).
    int coeff_or_zero(std::size_t i) const;
    /// First len coefficients (clamped to length for polynomials).
    std::vector<std::int8_t> prefix(std::size_t len) const;
    void ensure(std::size_t len) const;

    /// Partial-sum polynomial c_0 + ... + c_{len-1} x^{len-1}.
    RatPoly to_poly(std::size_t len) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

enum class LexOrder { Less, EqualUpTo, Greater };

struct LexResult {
    LexOrder order;
    std::size_t index;  // first differing index, or the compared length
};

/// Lexicographic comparison of power series (missing polynomial
/// coefficients count as 0), decided within max_len coefficients.
LexResult lex_compare(const SignSeq& f, const SignSeq& g, std::size_t max_len);

/// The two series P(x)(1 +- x^{N+1} +- x^{2(N+1)} ...) with all upper or
/// all lower signs: repeated +block for plus, first block then negated
/// blocks for minus.
enum class AttachSign { Plus, Minus };
SignSeq attached_series(const SignSeq& p, AttachSign sign);

/// Whether f decomposes into consecutive length-(N+1) blocks equal to
/// +-(c_0..c_N) of p, first block positive, through check_len coefficients.
bool is_intermediate(const SignSeq& f, const SignSeq& p, std::size_t check_len);

/// Exact value at rational x: closed form, or finite polynomial sum.
/// Empty when the sequence is a series without a closed form.
std::optional<Rat> eval_exact(const SignSeq& f, const Rat& x);

/// Exact partial sum of the first len terms at rational x.
Rat eval_prefix(const SignSeq& f, const Rat& x, std::size_t len);

/// (value, error bound) at |x| < 1: closed form when present (error 0),
/// otherwise a truncated sum with the geometric tail bound <= abs_tol.
std::pair<Real, Real> eval(const SignSeq& f, const Real& x, const Real& abs_tol);

/// (value, error bound) of f(1/2): exact (error 0) for polynomials and
/// closed forms, otherwise the len-term partial sum with error 2^-len.
std::pair<Rat, Rat> value_at_half(const SignSeq& f, std::size_t len);

/// exact F+(1/2) and F-(1/2) for a consistent polynomial:
/// P(1/2)/(1-2^-(N+1)) and P(1/2)(1-2^-N)/(1-2^-(N+1)).
Rat attached_value_at_half(const SignSeq& p, AttachSign sign);

std::string to_sign_string(const SignSeq& f, std::size_t len);
std::string to_polynomial_string(const SignSeq& f, std::size_t len);
std::vector<std::int8_t> parse_sign_string(const std::string& s);
std::vector<std::int8_t> parse_polynomial_string(const std::string& s);

}  // namespace takagi
