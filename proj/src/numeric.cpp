#include "t2r/numeric.hpp"

#include <cstdio>

namespace t2r {

namespace {

// Compare |num/den| with 10^e without building a float.
int cmp_pow10(const BigInt& num, const BigInt& den, long e) {
  if (e >= 0) return cmp(num, den * pow_int(10ul, static_cast<unsigned long>(e)));
  return cmp(num * pow_int(10ul, static_cast<unsigned long>(-e)), den);
}

}  // namespace

std::string rat_to_decimal(const BigRat& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  BigInt num = abs(BigInt(q.get_num()));
  BigInt den = q.get_den();
  const bool neg = sgn(q) < 0;

  // decimal exponent: 10^e <= num/den < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  while (cmp_pow10(num, den, e) < 0) --e;
  while (cmp_pow10(num, den, e + 1) >= 0) ++e;

  // round(num/den * 10^(digits-1-e)), half to even
  long shift = digits - 1 - e;
  BigInt sn = num, sd = den;
  if (shift >= 0)
    sn *= pow_int(10ul, static_cast<unsigned long>(shift));
  else
    sd *= pow_int(10ul, static_cast<unsigned long>(-shift));
  BigInt quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), sn.get_mpz_t(), sd.get_mpz_t());
  const int half = cmp(rem * 2, sd);
  if (half > 0 || (half == 0 && mpz_odd_p(quo.get_mpz_t()))) quo += 1;

  std::string ds = quo.get_str();
  if (static_cast<long>(ds.size()) > digits) {  // 999.9 -> 1000 spill
    ++e;
    ds.pop_back();
  }
  while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

  std::string out;
  if (neg) out.push_back('-');
  if (e >= -6 && e <= 18) {
    if (e >= 0) {
      if (static_cast<long>(ds.size()) <= e) {
        out += ds;
        out.append(static_cast<size_t>(e + 1 - ds.size()), '0');
      } else {
        out += ds.substr(0, static_cast<size_t>(e + 1));
        out.push_back('.');
        out += ds.substr(static_cast<size_t>(e + 1));
      }
    } else {
      out += "0.";
      out.append(static_cast<size_t>(-e - 1), '0');
      out += ds;
    }
  } else {
    out += ds.substr(0, 1);
    if (ds.size() > 1) {
      out.push_back('.');
      out += ds.substr(1);
    }
    out.push_back('e');
    out += std::to_string(e);
  }
  return out;
}

std::string double_to_decimal(double x, int digits) {
  if (digits < 1) digits = 1;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace t2r
