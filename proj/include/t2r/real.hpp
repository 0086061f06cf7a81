#pragma once

// Minimal RAII wrapper over MPFR for the asymptotic estimates (Menon, limit
// profiles, closed-form mixing times).  160-bit mantissa, round-to-nearest.
// Only the handful of operations the toolkit needs; this is not a general
// numeric tower.

#include <mpfr.h>

#include <string>
#include <utility>

#include "t2r/numeric.hpp"

namespace t2r {

class Real {
 public:
  static constexpr mpfr_prec_t kPrecision = 160;

  Real() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  explicit Real(double d) { mpfr_init2(v_, kPrecision); mpfr_set_d(v_, d, MPFR_RNDN); }
  explicit Real(long i) { mpfr_init2(v_, kPrecision); mpfr_set_si(v_, i, MPFR_RNDN); }
  explicit Real(int i) : Real(static_cast<long>(i)) {}
  explicit Real(const BigInt& z) { mpfr_init2(v_, kPrecision); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  explicit Real(const BigRat& q) { mpfr_init2(v_, kPrecision); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kPrecision); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(int digits = 20) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return std::string(buf);
  }

  friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a) { Real r; mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend Real exp(const Real& a) { Real r; mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real log(const Real& a) { Real r; mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real abs(const Real& a) { Real r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }

  // log(n!) via lngamma(n+1); exact-argument convenience.
  static Real log_factorial(long n) {
    Real r;
    Real arg(n + 1);
    mpfr_lngamma(r.v_, arg.v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace t2r
