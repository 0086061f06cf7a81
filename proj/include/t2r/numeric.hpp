#pragma once

// Exact integer / rational scaffolding shared by every module.  All "counts"
// in this library are arbitrary-precision; never trust a long for anything
// that scales with p^n n! or with Stirling growth.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace t2r {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Thrown on contract violations by the caller (bad n/p/k, malformed input).
// The CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a request exceeds a configured cap (group too large, matrix
// too large, table too large).  CLI exit code 3.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal exactness check fails (a "cannot happen" unless
// the mathematics or the code is wrong).  CLI exit code 1.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt pow_int(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// num/den as an already-canonical rational.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw UsageError("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const BigRat& q) { return q.get_den() == 1; }

// Asserting conversion used wherever theory promises an integer.
inline BigInt to_integer(const BigRat& q, const char* what) {
  if (!is_integral(q))
    throw InternalError(std::string(what) + ": expected integral value, got " +
                        q.get_str());
  return q.get_num();
}

// |G_{n,p}| = p^n n!, exact.
inline BigInt group_order(int n, int p) {
  if (n < 0 || p < 1) throw UsageError("group_order: need n >= 0, p >= 1");
  return pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(n)) *
         factorial(static_cast<unsigned long>(n));
}

// Deterministic, locale-independent decimal rendering of a rational with
// `digits` significant digits (round-half-even via GMP floor division on the
// scaled numerator, then normalized to scientific-free form when reasonable).
std::string rat_to_decimal(const BigRat& q, int digits = 12);

// Deterministic rendering of a double (shortest %.{digits}g, locale-free).
std::string double_to_decimal(double x, int digits = 12);

}  // namespace t2r
