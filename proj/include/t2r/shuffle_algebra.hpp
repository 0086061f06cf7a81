#pragma once

// Rational group-algebra elements over G_{n,p} and the top-to-random shuffle
// structure: the shuffle product of colored words, the level sums B_a (sums
// over all ways to shuffle a colored head block into the fixed tail), their
// convolution algebra, the orthogonal idempotents e_i, and the closed-form
// powers via (deformed/generalized) Stirling numbers.

#include <map>
#include <vector>

#include "t2r/colored_group.hpp"
#include "t2r/numeric.hpp"
#include "t2r/stirling.hpp"

namespace t2r {

class AlgebraElement {
 public:
  AlgebraElement(int n, int p) : n_(n), p_(p) {
    if (n < 0 || p < 1) throw UsageError("AlgebraElement: need n >= 0, p >= 1");
  }

  static AlgebraElement zero(int n, int p) { return AlgebraElement(n, p); }
  static AlgebraElement unit(int n, int p) {  // delta at the group identity
    AlgebraElement e(n, p);
    e.add(ColoredPermutation::identity(n, p), BigRat(1));
    return e;
  }

  int n() const { return n_; }
  int p() const { return p_; }
  const std::map<ColoredPermutation, BigRat>& terms() const { return terms_; }
  size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigRat coeff(const ColoredPermutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  void add(const ColoredPermutation& g, const BigRat& c);  // accumulates, prunes zeros

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& scale(const BigRat& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const BigRat& c, AlgebraElement a) { return a.scale(c); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  BigRat l1_norm() const;
  BigRat total_mass() const;  // sum of coefficients

 private:
  int n_, p_;
  std::map<ColoredPermutation, BigRat> terms_;
};

// All order-preserving interleavings of two letter sequences with disjoint
// value sets; C(|u|+|v|, |u|) words, each once, in lexicographic order of the
// chosen position sets for u.
std::vector<std::vector<ColoredLetter>> shuffle_product(
    const std::vector<ColoredLetter>& u, const std::vector<ColoredLetter>& v);

// |B_a| = C(n,a) p^a a!.
BigInt level_size(int a, int n, int p);

// B_0 = identity; B_a = sum_{alpha in G_{a,p}} alpha shuffled into the word
// (0,a+1)...(0,n); B_n = sum over the whole group (empty tail).
AlgebraElement build_B(int a, int n, int p);

// C_a(t): the terms of B_a whose word begins with the letter t, where t is
// either a colored value in [1,a] or the uncolored letter a+1 (a < n only).
AlgebraElement head_group(int a, ColoredLetter t, int n, int p);

// Convolution product: coefficient of w in x*y is sum over u v = w.
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);

// e_i = (1/i!) sum_{a=i}^{n} (-1)^{a-i} / (p^a (a-i)!) B_a; orthogonal
// idempotents summing to the unit.
AlgebraElement idempotent_e(int i, int n, int p);

// B_1^k = sum_a p^(k-a) {k,a} B_a, valid for every k >= 0.  The optional
// hook substitutes the {k,a} lookup (used by the verification harness to
// prove this identity is actually load-bearing).
AlgebraElement b1_power(long k, int n, int p, const Stirling2Fn& hook = nullptr);

// Two independent reconstructions of B_a from powers of B_1:
// the falling product B_1(B_1 - p)...(B_1 - (a-1)p), and the signed-Stirling
// expansion sum_i (-p)^(a-i) [a,i] B_1^i.
AlgebraElement Ba_by_falling_product(int a, int n, int p);
AlgebraElement Ba_by_signed_stirling(int a, int n, int p);

// B_a^k = sum_{b} p^(ka-b) S_{a,a}(k,b) B_b for k >= 1; k = 0 gives the unit.
AlgebraElement Ba_power(int a, long k, int n, int p);

// B_a^k = sum_{i=a}^n (p^a a! C(i,a))^k e_i, the spectral route; k >= 1.
AlgebraElement Ba_power_by_idempotents(int a, long k, int n, int p);

}  // namespace t2r
