#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace takagi {

namespace mp = boost::multiprecision;

/// Exact arbitrary-precision rational.
using Rat = mp::mpq_rational;
using Int = mp::mpz_int;

/// Arbitrary-precision binary float; precision is set per thread, see
/// set_precision_bits().
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Sets the working precision of Real for the calling thread.
/// The default is 200 bits.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// RAII guard that restores the previous precision on scope exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits) : saved_(precision_bits()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { set_precision_bits(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// Requested tolerance could not be met within the term budget.
struct TolNotReached : std::runtime_error {
    explicit TolNotReached(const std::string& what) : std::runtime_error(what) {}
};

/// A sign decision fell below the float backend's decision threshold.
/// Raise the precision or supply the point exactly.
struct SignAmbiguous : std::runtime_error {
    explicit SignAmbiguous(const std::string& what, std::size_t index = SIZE_MAX)
        : std::runtime_error(what), index(index) {}
    std::size_t index;
};

/// A binary expansion with a forbidden all-ones period.
struct NonCanonicalExpansion : std::runtime_error {
    explicit NonCanonicalExpansion(const std::string& what) : std::runtime_error(what) {}
};

Rat pow_rat(const Rat& base, long exp);
Int pow2(unsigned exp);

/// floor() for exact rationals.
Int floor_rat(const Rat& x);

/// Parses "p/q" or a plain integer; throws std::invalid_argument otherwise.
Rat parse_rational(const std::string& s);

Real to_real(const Rat& q);

std::string rat_to_string(const Rat& q);
std::string real_to_string(const Real& x, unsigned digits = 20);

}  // namespace takagi
