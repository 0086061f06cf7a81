#pragma once

// Stirling machinery: classical second/first kind, the p-deformed variants,
// the generalized numbers behind powers of the level sums, the row mode, and
// the asymptotic (Menon-style) estimate with its ball-in-box corollary.
//
// Conventions: {0,0} = [0,0] = 1; entries vanish outside 0 <= a <= k.
//   {k+1,a} = a {k,a} + {k,a-1}        (second kind)
//   [k+1,a] = k [k,a] + [k,a-1]        (first kind, unsigned)
//   {k,a}_p = p^(k-a) {k,a},  [k,a]_p = p^(k-a) [k,a]

#include <functional>
#include <iosfwd>
#include <vector>

#include "t2r/numeric.hpp"
#include "t2r/real.hpp"

namespace t2r {

using Stirling2Fn = std::function<BigInt(long, long)>;

// Memoized for k <= 512; row-streamed (O(k a) per call) beyond, up to the
// hard row cap of 20000.
BigInt stirling2(long k, long a);
BigInt stirling1(long k, long a);

// p-deformed values via the closed form p^(k-a) * classical.
BigInt stirling2_p(long k, long a, int p);
BigInt stirling1_p(long k, long a, int p);

// Same values built directly from the deformed recurrences
//   {k+1,a}_p = pa {k,a}_p + {k,a-1}_p,   [k+1,a]_p = pk [k,a]_p + [k,a-1]_p;
// exist so the closed form has an independent oracle.
BigInt stirling2_p_by_recurrence(long k, long a, int p);
BigInt stirling1_p_by_recurrence(long k, long a, int p);

// (x)_{a,p} = x(x-p)(x-2p)...(x-(a-1)p), as a value and as coefficients
// (ascending degree, length a+1).
BigRat falling_factorial_p(const BigRat& x, int a, int p);
std::vector<BigInt> falling_factorial_p_coeffs(int a, int p);

// S_{a,a}(k,b) = ((-1)^b / b!) sum_{i=a}^{b} (-1)^i C(b,i) (a! C(i,a))^k.
// Zero outside a <= b <= a k.  Requires a >= 1, k >= 1.  Integrality is
// asserted.  S_{1,1}(k,b) reduces to {k,b}.
BigInt generalized_stirling(int a, long k, int b);

// Leftmost argmax r_k of a -> {k,a}, with the unimodality of the row checked
// during the scan, plus the k/log k asymptote (NaN at k = 1).
struct ModeReport {
  long r_exact = 0;
  double asymptote = 0.0;
};
ModeReport stirling_mode(long k);

// Estimate of {k,n} as (n^k / n!) exp(-e^lambda) with
// lambda = log n - k/n + 1/(2n) - 1/(12 n^2).  The two booleans are finite-n
// surrogates for the asymptotic hypotheses (thresholds: n/sqrt(k) >= 2 and
// k/n - log sqrt(k) >= 1); they flag, never gate.
struct MenonEstimate {
  Real lambda;
  Real log_value;
  Real value;
  double n_over_sqrt_k = 0.0;
  double gap = 0.0;
  bool ratio_ok = false;
  bool gap_ok = false;
};
MenonEstimate menon_approx(long k, long n);

// P(no empty box with k balls in n boxes) = {k,n} n! / n^k, three ways:
// exact via Stirling, exact via inclusion-exclusion (the oracle), and the
// exp(-n e^{-k/n}) limit approximation.
BigRat ball_box_probability(long k, long n);
BigRat ball_box_inclusion_exclusion(long k, long n);
Real ball_box_limit(long k, long n);

// Forward row streaming of {k, a} for a <= amax: column truncation is exact
// because the recurrence never reads columns above a.
class Stirling2RowScan {
 public:
  explicit Stirling2RowScan(int amax, long row_cap = 20000);
  void advance_to(long k);  // forward only
  long k() const { return k_; }
  int amax() const { return amax_; }
  const BigInt& value(int a) const;

 private:
  int amax_;
  long row_cap_;
  long k_ = 0;
  BigInt zero_ = 0;
  std::vector<BigInt> row_;
};

// CSV rows "k,a,value" over the rectangle [kmin,kmax] x [amin,amax].
void write_stirling_csv(std::ostream& os, int kind, long kmin, long kmax,
                        int amin, int amax);

}  // namespace t2r
