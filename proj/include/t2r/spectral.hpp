#pragma once

// Spectral side of the transition operator: exact left-regular-representation
// matrices, exact characteristic polynomials, and the eigenvalue multiplicity
// reports for L(B_1) (eigenvalues 0, p, ..., np with multiplicity
// C(n,i) D_{n-i,p}) and L(B_a).
//
// Three independent routes produce the multiplicities:
//   "formula"  - the closed form C(n,i) D_{n-i,p};
//   "trace"    - exact traces of the idempotent projectors,
//                Trace L(e_i) = p^n n! * [identity coefficient of e_i];
//   "charpoly" - exact factorization of det(xI - L(B_1)) against the
//                candidate roots.  Below `berkowitz_cap` this runs the
//                general-purpose division-free algorithm on the dense matrix;
//                above it, a structured certificate: the annihilating product
//                prod_i (M - ipI) is verified to vanish exactly (hard error
//                otherwise), exact power traces + a Vandermonde solve pin the
//                multiplicities, and the result is re-checked by synthetic
//                division.

#include <string>
#include <utility>
#include <vector>

#include "t2r/shuffle_algebra.hpp"

namespace t2r {

class RegularMatrix {
 public:
  RegularMatrix(long order, int n, int p)
      : order_(order), n_(n), p_(p),
        a_(static_cast<size_t>(order) * static_cast<size_t>(order), BigRat(0)) {
    if (order < 0) throw UsageError("RegularMatrix: negative order");
  }

  long order() const { return order_; }
  int n() const { return n_; }
  int p() const { return p_; }

  BigRat& at(long r, long c) {
    return a_[static_cast<size_t>(r) * static_cast<size_t>(order_) + static_cast<size_t>(c)];
  }
  const BigRat& at(long r, long c) const {
    return a_[static_cast<size_t>(r) * static_cast<size_t>(order_) + static_cast<size_t>(c)];
  }

  BigRat row_sum(long r) const;
  BigRat col_sum(long c) const;
  BigRat trace() const;

 private:
  long order_;
  int n_, p_;
  std::vector<BigRat> a_;
};

// Basis = canonical enumeration order of G_{n,p}; L(x) acts by left
// multiplication, so entry (u, v) is the coefficient of g_u g_v^{-1} in x.
RegularMatrix left_regular_matrix(const AlgebraElement& x, std::uint64_t cap = 5000);

RegularMatrix multiply(const RegularMatrix& A, const RegularMatrix& B);

// Trace of L(x) without building the matrix: |G| * coefficient of identity.
BigRat trace_left_regular(const AlgebraElement& x);

// Exact monic char poly of det(xI - M), descending coefficients, by the
// division-free Berkowitz scheme.  Entries must be integers.
std::vector<BigInt> char_poly(const RegularMatrix& M, long order_cap = 200);

// Quotient of a monic descending-coefficient polynomial by (x - r).
std::vector<BigInt> synthetic_divide(const std::vector<BigInt>& poly, const BigInt& r,
                                     BigInt& remainder);

// Repeatedly divide by the candidate roots {0, p, ..., np}; returns the
// multiplicity of i*p at index i.  Any residue after the candidates are
// exhausted is a hard error: the candidate set must exhaust the polynomial.
std::vector<BigInt> factor_against_candidates(const std::vector<BigInt>& poly, int n, int p);

// Structured exact certificate for large orders; returns multiplicities of
// {0, p, ..., np} in det(xI - L(B_1)).
std::vector<BigInt> certified_multiplicities(int n, int p, std::uint64_t cap = 2000);

std::string factored_string(const std::vector<BigInt>& multiplicities, int p);

// prod_i (x - i p)^{m_i} expanded, descending coefficients.
std::vector<BigInt> expand_factored(const std::vector<BigInt>& multiplicities, int p);

struct EigenvalueEntry {
  int i = 0;               // fixed-point count labelling the eigenspace
  BigInt value;            // i * p
  BigInt multiplicity;
};

struct SpectrumReport {
  int n = 0, p = 0;
  std::string method;
  std::vector<EigenvalueEntry> eigenvalues;  // i = n down to 0
  std::vector<BigInt> char_poly_coeffs;      // descending; filled by charpoly
  std::string factored;
};

SpectrumReport multiplicity_report(int n, int p, const std::string& method,
                                   std::uint64_t matrix_cap = 2000,
                                   long berkowitz_cap = 150);

// Aggregated spectrum of L(B_a): p^a a! C(i,a) on the i-th eigenspace for
// i >= a, zero below; returned as (value, multiplicity) descending by value.
std::vector<std::pair<BigInt, BigInt>> ba_eigenvalues(int a, int n, int p);

}  // namespace t2r
