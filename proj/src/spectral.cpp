#include "t2r/spectral.hpp"

#include <algorithm>
#include <cstdlib>

namespace t2r {

BigRat RegularMatrix::row_sum(long r) const {
  BigRat s(0);
  for (long c = 0; c < order_; ++c) s += at(r, c);
  return s;
}

BigRat RegularMatrix::col_sum(long c) const {
  BigRat s(0);
  for (long r = 0; r < order_; ++r) s += at(r, c);
  return s;
}

BigRat RegularMatrix::trace() const {
  BigRat s(0);
  for (long r = 0; r < order_; ++r) s += at(r, r);
  return s;
}

RegularMatrix left_regular_matrix(const AlgebraElement& x, std::uint64_t cap) {
  const int n = x.n(), p = x.p();
  GroupEnumeration en(n, p, cap);  // throws ResourceError beyond cap
  const long N = static_cast<long>(en.size());
  RegularMatrix M(N, n, p);
  for (long v = 0; v < N; ++v) {
    const ColoredPermutation gv = en.element(static_cast<std::uint64_t>(v));
    for (const auto& [w, c] : x.terms()) {
      const long u = static_cast<long>(en.index_of(multiply(w, gv)));
      M.at(u, v) += c;
    }
  }
  return M;
}

RegularMatrix multiply(const RegularMatrix& A, const RegularMatrix& B) {
  if (A.order() != B.order()) throw UsageError("RegularMatrix multiply: size mismatch");
  const long N = A.order();
  RegularMatrix C(N, A.n(), A.p());
  for (long r = 0; r < N; ++r)
    for (long k = 0; k < N; ++k) {
      const BigRat& a = A.at(r, k);
      if (a == 0) continue;
      for (long c = 0; c < N; ++c) {
        const BigRat& b = B.at(k, c);
        if (b == 0) continue;
        C.at(r, c) += a * b;
      }
    }
  return C;
}

BigRat trace_left_regular(const AlgebraElement& x) {
  return BigRat(group_order(x.n(), x.p())) *
         x.coeff(ColoredPermutation::identity(x.n(), x.p()));
}

std::vector<BigInt> char_poly(const RegularMatrix& M, long order_cap) {
  const long N = M.order();
  if (N > order_cap)
    throw ResourceError("char_poly: order " + std::to_string(N) +
                        " beyond general-purpose cap " + std::to_string(order_cap));
  std::vector<BigInt> A(static_cast<size_t>(N) * static_cast<size_t>(N));
  for (long r = 0; r < N; ++r)
    for (long c = 0; c < N; ++c)
      A[static_cast<size_t>(r) * static_cast<size_t>(N) + static_cast<size_t>(c)] =
          to_integer(M.at(r, c), "char_poly entry");
  auto at = [&](long r, long c) -> const BigInt& {
    return A[static_cast<size_t>(r) * static_cast<size_t>(N) + static_cast<size_t>(c)];
  };

  // Berkowitz: iterate principal blocks, multiplying Toeplitz operators.
  std::vector<BigInt> vc{BigInt(1)};
  for (long r = 1; r <= N; ++r) {
    std::vector<BigInt> t(static_cast<size_t>(r) + 1);
    t[0] = 1;
    t[1] = -at(r - 1, r - 1);
    if (r >= 2) {
      std::vector<BigInt> s(static_cast<size_t>(r) - 1);
      for (long i = 0; i < r - 1; ++i) s[static_cast<size_t>(i)] = at(i, r - 1);
      for (long j = 2; j <= r; ++j) {
        BigInt dot(0);
        for (long i = 0; i < r - 1; ++i) dot += at(r - 1, i) * s[static_cast<size_t>(i)];
        t[static_cast<size_t>(j)] = -dot;
        if (j < r) {
          std::vector<BigInt> ns(static_cast<size_t>(r) - 1);
          for (long i = 0; i < r - 1; ++i) {
            BigInt acc(0);
            for (long l = 0; l < r - 1; ++l) acc += at(i, l) * s[static_cast<size_t>(l)];
            ns[static_cast<size_t>(i)] = std::move(acc);
          }
          s = std::move(ns);
        }
      }
    }
    std::vector<BigInt> nv(static_cast<size_t>(r) + 1);
    for (long i = 0; i <= r; ++i) {
      BigInt acc(0);
      for (long j = 0; j <= i; ++j) {
        const long idx = i - j;
        if (idx < static_cast<long>(vc.size()))
          acc += t[static_cast<size_t>(j)] * vc[static_cast<size_t>(idx)];
      }
      nv[static_cast<size_t>(i)] = std::move(acc);
    }
    vc = std::move(nv);
  }
  return vc;
}

std::vector<BigInt> synthetic_divide(const std::vector<BigInt>& poly, const BigInt& r,
                                     BigInt& remainder) {
  if (poly.empty()) throw UsageError("synthetic_divide: empty polynomial");
  std::vector<BigInt> q(poly.size() - 1);
  BigInt carry = poly[0];
  for (size_t i = 1; i < poly.size(); ++i) {
    q[i - 1] = carry;
    carry = poly[i] + r * carry;
  }
  remainder = carry;
  return q;
}

std::vector<BigInt> factor_against_candidates(const std::vector<BigInt>& poly, int n, int p) {
  if (poly.empty() || poly[0] != 1)
    throw UsageError("factor_against_candidates: polynomial must be monic");
  std::vector<BigInt> mult(static_cast<size_t>(n) + 1, BigInt(0));
  std::vector<BigInt> cur = poly;
  for (int i = n; i >= 0; --i) {
    const BigInt root = static_cast<long>(i) * p;
    while (cur.size() > 1) {
      BigInt rem;
      std::vector<BigInt> q = synthetic_divide(cur, root, rem);
      if (rem != 0) break;
      cur = std::move(q);
      mult[static_cast<size_t>(i)] += 1;
    }
  }
  if (cur.size() != 1 || cur[0] != 1)
    throw InternalError("factor_against_candidates: candidate roots 0,p,...,np do not "
                        "exhaust the characteristic polynomial");
  return mult;
}

std::vector<BigInt> certified_multiplicities(int n, int p, std::uint64_t cap) {
  if (n < 1 || p < 1) throw UsageError("certified_multiplicities: need n >= 1, p >= 1");
  const BigInt order = group_order(n, p);
  if (order > BigInt(static_cast<unsigned long>(cap)))
    throw ResourceError("certified_multiplicities: order beyond cap");
  const long N = static_cast<long>(order.get_ui());
  GroupEnumeration en(n, p, cap);

  // Sparse columns of M = L(B_1): column v holds the row indices of w g_v
  // over the support of B_1 (all coefficients are one).
  std::vector<std::vector<std::uint32_t>> cols(static_cast<size_t>(N));
  {
    const AlgebraElement B1 = build_B(1, n, p);
    std::vector<ColoredPermutation> supp;
    supp.reserve(B1.support_size());
    for (const auto& [g, c] : B1.terms()) {
      if (c != 1) throw InternalError("certified_multiplicities: non-unit B_1 coefficient");
      supp.push_back(g);
    }
    for (long v = 0; v < N; ++v) {
      const ColoredPermutation gv = en.element(static_cast<std::uint64_t>(v));
      auto& col = cols[static_cast<size_t>(v)];
      col.reserve(supp.size());
      for (const auto& w : supp)
        col.push_back(static_cast<std::uint32_t>(en.index_of(multiply(w, gv))));
    }
  }

  // Column-by-column passes entirely in machine integers; entries stay below
  // (2np)^(n+1), far under the guard.
  std::vector<long long> moments(static_cast<size_t>(n) + 1, 0);
  moments[0] = N;
  std::vector<long long> vec(static_cast<size_t>(N)), nxt(static_cast<size_t>(N));
  constexpr long long kGuard = 400000000000000000LL;
  auto apply_M = [&]() {
    std::fill(nxt.begin(), nxt.end(), 0LL);
    for (long v = 0; v < N; ++v) {
      const long long x = vec[static_cast<size_t>(v)];
      if (!x) continue;
      for (std::uint32_t u : cols[static_cast<size_t>(v)]) nxt[u] += x;
    }
  };
  for (long c0 = 0; c0 < N; ++c0) {
    // (prod_i (M - ipI)) e_c0 must vanish identically.
    std::fill(vec.begin(), vec.end(), 0LL);
    vec[static_cast<size_t>(c0)] = 1;
    for (int i = 0; i <= n; ++i) {
      apply_M();
      const long long shift = static_cast<long long>(i) * p;
      for (long v = 0; v < N; ++v) {
        nxt[static_cast<size_t>(v)] -= shift * vec[static_cast<size_t>(v)];
        if (std::llabs(nxt[static_cast<size_t>(v)]) > kGuard)
          throw InternalError("certified_multiplicities: overflow guard tripped");
      }
      vec.swap(nxt);
    }
    for (long v = 0; v < N; ++v)
      if (vec[static_cast<size_t>(v)] != 0)
        throw InternalError("certified_multiplicities: annihilating product of "
                            "(M - ipI) is nonzero; candidate spectrum is wrong");

    // power traces
    std::fill(vec.begin(), vec.end(), 0LL);
    vec[static_cast<size_t>(c0)] = 1;
    for (int j = 1; j <= n; ++j) {
      apply_M();
      vec.swap(nxt);
      moments[static_cast<size_t>(j)] += vec[static_cast<size_t>(c0)];
    }
  }

  // Vandermonde solve: sum_i m_i (ip)^j = trace(M^j), exact.
  const int m = n + 1;
  std::vector<std::vector<BigRat>> aug(static_cast<size_t>(m),
                                       std::vector<BigRat>(static_cast<size_t>(m) + 1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i)
      aug[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          BigRat(pow_int(BigInt(static_cast<long>(i) * p), static_cast<unsigned long>(j)));
    aug[static_cast<size_t>(j)][static_cast<size_t>(m)] =
        BigRat(BigInt(static_cast<long>(moments[static_cast<size_t>(j)])));
  }
  for (int colp = 0; colp < m; ++colp) {
    int pivot = -1;
    for (int r = colp; r < m; ++r)
      if (aug[static_cast<size_t>(r)][static_cast<size_t>(colp)] != 0) { pivot = r; break; }
    if (pivot < 0) throw InternalError("certified_multiplicities: singular moment system");
    std::swap(aug[static_cast<size_t>(colp)], aug[static_cast<size_t>(pivot)]);
    for (int r = 0; r < m; ++r) {
      if (r == colp) continue;
      if (aug[static_cast<size_t>(r)][static_cast<size_t>(colp)] == 0) continue;
      const BigRat f = aug[static_cast<size_t>(r)][static_cast<size_t>(colp)] /
                       aug[static_cast<size_t>(colp)][static_cast<size_t>(colp)];
      for (int c = colp; c <= m; ++c)
        aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * aug[static_cast<size_t>(colp)][static_cast<size_t>(c)];
    }
  }
  std::vector<BigInt> mult(static_cast<size_t>(m));
  BigInt total(0);
  for (int i = 0; i < m; ++i) {
    const BigRat mi = aug[static_cast<size_t>(i)][static_cast<size_t>(m)] /
                      aug[static_cast<size_t>(i)][static_cast<size_t>(i)];
    mult[static_cast<size_t>(i)] = to_integer(mi, "certified multiplicity");
    if (mult[static_cast<size_t>(i)] < 0)
      throw InternalError("certified_multiplicities: negative multiplicity");
    total += mult[static_cast<size_t>(i)];
  }
  if (total != BigInt(N))
    throw InternalError("certified_multiplicities: multiplicities do not sum to the order");

  // Round-trip through the synthetic-division path.
  const std::vector<BigInt> poly = expand_factored(mult, p);
  const std::vector<BigInt> again = factor_against_candidates(poly, n, p);
  if (again != mult)
    throw InternalError("certified_multiplicities: synthetic-division round trip failed");
  return mult;
}

std::string factored_string(const std::vector<BigInt>& multiplicities, int p) {
  const int n = static_cast<int>(multiplicities.size()) - 1;
  std::string out;
  for (int i = n; i >= 0; --i) {
    const BigInt& m = multiplicities[static_cast<size_t>(i)];
    if (m == 0) continue;
    const BigInt root = static_cast<long>(i) * p;
    if (root == 0)
      out += "x";
    else
      out += "(x-" + root.get_str() + ")";
    if (m != 1) out += "^" + m.get_str();
  }
  if (out.empty()) out = "1";
  return out;
}

std::vector<BigInt> expand_factored(const std::vector<BigInt>& multiplicities, int p) {
  std::vector<BigInt> poly{BigInt(1)};  // descending
  const int n = static_cast<int>(multiplicities.size()) - 1;
  for (int i = n; i >= 0; --i) {
    const BigInt root = static_cast<long>(i) * p;
    BigInt reps = multiplicities[static_cast<size_t>(i)];
    while (reps > 0) {
      std::vector<BigInt> next(poly.size() + 1);
      for (size_t j = 0; j < next.size(); ++j) {
        if (j < poly.size()) next[j] += poly[j];
        if (j >= 1) next[j] -= root * poly[j - 1];
      }
      poly = std::move(next);
      reps -= 1;
    }
  }
  return poly;
}

namespace {

std::vector<BigInt> formula_multiplicities(int n, int p) {
  std::vector<BigInt> mult(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    mult[static_cast<size_t>(i)] =
        binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)) *
        derangement_count(n - i, p);
  return mult;
}

std::vector<BigInt> trace_multiplicities(int n, int p) {
  // Trace L(e_i) = p^n n! * [identity coefficient of e_i]; every B_a contains
  // the identity exactly once, so the coefficient is the plain alternating sum.
  const BigInt order = group_order(n, p);
  std::vector<BigInt> mult(static_cast<size_t>(n) + 1);
  BigInt total(0);
  for (int i = 0; i <= n; ++i) {
    BigRat s(0);
    for (int a = i; a <= n; ++a) {
      BigRat term = make_rat(1, factorial(static_cast<unsigned long>(i)) *
                                    pow_int(static_cast<unsigned long>(p),
                                            static_cast<unsigned long>(a)) *
                                    factorial(static_cast<unsigned long>(a - i)));
      if ((a - i) % 2) term = -term;
      s += term;
    }
    mult[static_cast<size_t>(i)] = to_integer(BigRat(order) * s, "trace multiplicity");
    total += mult[static_cast<size_t>(i)];
  }
  if (total != order)
    throw InternalError("trace multiplicities do not sum to the group order");
  return mult;
}

}  // namespace

SpectrumReport multiplicity_report(int n, int p, const std::string& method,
                                   std::uint64_t matrix_cap, long berkowitz_cap) {
  if (n < 0 || p < 1) throw UsageError("multiplicity_report: need n >= 0, p >= 1");
  SpectrumReport rep;
  rep.n = n;
  rep.p = p;
  rep.method = method;

  std::vector<BigInt> mult;
  if (n == 0) {
    // Degenerate single-element group; no transition operator to factor.
    mult = {BigInt(1)};
  } else if (method == "formula") {
    mult = formula_multiplicities(n, p);
  } else if (method == "trace") {
    mult = trace_multiplicities(n, p);
  } else if (method == "charpoly") {
    const BigInt order = group_order(n, p);
    if (order > BigInt(static_cast<unsigned long>(matrix_cap)))
      throw ResourceError("multiplicity_report: order " + order.get_str() +
                          " beyond charpoly cap " + std::to_string(matrix_cap));
    const long N = static_cast<long>(order.get_ui());
    if (N <= berkowitz_cap) {
      const RegularMatrix M = left_regular_matrix(build_B(1, n, p), matrix_cap);
      rep.char_poly_coeffs = char_poly(M, berkowitz_cap);
      mult = factor_against_candidates(rep.char_poly_coeffs, n, p);
    } else {
      mult = certified_multiplicities(n, p, matrix_cap);
      rep.char_poly_coeffs = expand_factored(mult, p);
    }
  } else {
    throw UsageError("multiplicity_report: method must be formula|trace|charpoly");
  }

  rep.factored = factored_string(mult, p);
  const int top = static_cast<int>(mult.size()) - 1;
  for (int i = top; i >= 0; --i) {
    EigenvalueEntry e;
    e.i = i;
    e.value = static_cast<long>(i) * p;
    e.multiplicity = mult[static_cast<size_t>(i)];
    rep.eigenvalues.push_back(std::move(e));
  }
  return rep;
}

std::vector<std::pair<BigInt, BigInt>> ba_eigenvalues(int a, int n, int p) {
  if (a < 0 || a > n) throw UsageError("ba_eigenvalues: need 0 <= a <= n");
  if (p < 1) throw UsageError("ba_eigenvalues: p must be >= 1");
  if (a == 0)  // identity: one eigenvalue
    return {{BigInt(1), group_order(n, p)}};
  const std::vector<BigInt> mult = formula_multiplicities(n, p);
  std::vector<std::pair<BigInt, BigInt>> out;
  BigInt zero_mult(0);
  for (int i = 0; i < a; ++i) zero_mult += mult[static_cast<size_t>(i)];
  for (int i = n; i >= a; --i) {
    BigInt value = pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(a)) *
                   factorial(static_cast<unsigned long>(a)) *
                   binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(a));
    out.emplace_back(std::move(value), mult[static_cast<size_t>(i)]);
  }
  if (a >= 1) out.emplace_back(BigInt(0), zero_mult);
  return out;
}

}  // namespace t2r
