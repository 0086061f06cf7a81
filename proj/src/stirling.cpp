#include "t2r/stirling.hpp"

#include <cmath>
#include <mutex>
#include <ostream>

namespace t2r {

namespace {

constexpr long kMemoCap = 512;    // full-triangle memo up to here
constexpr long kRowCap = 20000;   // hard row cap for streamed values
constexpr int kColCap = 1000;     // hard column cap for streamed rows

// kind 2: {k+1,a} = a{k,a} + {k,a-1};  kind 1: [k+1,a] = k[k,a] + [k,a-1].
class MemoTriangle {
 public:
  explicit MemoTriangle(int kind) : kind_(kind) { rows_.push_back({BigInt(1)}); }

  const BigInt& at(long k, long a) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(rows_.size()) <= k) {
      const long kk = static_cast<long>(rows_.size()) - 1;  // last complete row
      const auto& prev = rows_.back();
      std::vector<BigInt> next(static_cast<size_t>(kk) + 2);
      next[0] = 0;
      for (long a2 = 1; a2 <= kk + 1; ++a2) {
        const BigInt& same = a2 <= kk ? prev[static_cast<size_t>(a2)] : zero_;
        next[static_cast<size_t>(a2)] =
            (kind_ == 2 ? BigInt(a2) : BigInt(kk)) * same + prev[static_cast<size_t>(a2) - 1];
      }
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<size_t>(k)][static_cast<size_t>(a)];
  }

 private:
  int kind_;
  std::mutex mu_;
  BigInt zero_ = 0;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt streamed_second(long k, long a) {
  Stirling2RowScan scan(static_cast<int>(a));
  scan.advance_to(k);
  return scan.value(static_cast<int>(a));
}

BigInt streamed_first(long k, long a) {
  if (a > kColCap) throw ResourceError("stirling1: column beyond cap");
  std::vector<BigInt> row(static_cast<size_t>(a) + 1);
  row[0] = 1;
  for (long kk = 0; kk < k; ++kk)
    for (long a2 = a; a2 >= 1; --a2)
      row[static_cast<size_t>(a2)] =
          BigInt(kk) * row[static_cast<size_t>(a2)] + row[static_cast<size_t>(a2) - 1];
  return row[static_cast<size_t>(a)];
}

void check_kA(long k, const char* who) {
  if (k < 0) throw UsageError(std::string(who) + ": k must be >= 0");
  if (k > kRowCap) throw ResourceError(std::string(who) + ": k beyond row cap 20000");
}

}  // namespace

BigInt stirling2(long k, long a) {
  check_kA(k, "stirling2");
  if (a < 0 || a > k) return 0;
  if (k <= kMemoCap) {
    static MemoTriangle memo(2);
    return memo.at(k, a);
  }
  return streamed_second(k, a);
}

BigInt stirling1(long k, long a) {
  check_kA(k, "stirling1");
  if (a < 0 || a > k) return 0;
  if (k <= kMemoCap) {
    static MemoTriangle memo(1);
    return memo.at(k, a);
  }
  return streamed_first(k, a);
}

BigInt stirling2_p(long k, long a, int p) {
  if (p < 1) throw UsageError("stirling2_p: p must be >= 1");
  if (a < 0 || a > k) return 0;
  return pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(k - a)) *
         stirling2(k, a);
}

BigInt stirling1_p(long k, long a, int p) {
  if (p < 1) throw UsageError("stirling1_p: p must be >= 1");
  if (a < 0 || a > k) return 0;
  return pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(k - a)) *
         stirling1(k, a);
}

namespace {

BigInt deformed_by_recurrence(long k, long a, int p, int kind) {
  if (p < 1) throw UsageError("deformed recurrence: p must be >= 1");
  check_kA(k, "deformed recurrence");
  if (a < 0 || a > k) return 0;
  std::vector<BigInt> row(static_cast<size_t>(a) + 1);
  row[0] = 1;
  for (long kk = 0; kk < k; ++kk) {
    for (long a2 = a; a2 >= 1; --a2) {
      const BigInt factor = kind == 2 ? BigInt(p) * a2 : BigInt(p) * kk;
      row[static_cast<size_t>(a2)] =
          factor * row[static_cast<size_t>(a2)] + row[static_cast<size_t>(a2) - 1];
    }
    row[0] = 0;  // {k,0}_p = 0 for k >= 1
  }
  return row[static_cast<size_t>(a)];
}

}  // namespace

BigInt stirling2_p_by_recurrence(long k, long a, int p) {
  return deformed_by_recurrence(k, a, p, 2);
}

BigInt stirling1_p_by_recurrence(long k, long a, int p) {
  return deformed_by_recurrence(k, a, p, 1);
}

BigRat falling_factorial_p(const BigRat& x, int a, int p) {
  if (a < 0) throw UsageError("falling_factorial_p: a must be >= 0");
  if (p < 1) throw UsageError("falling_factorial_p: p must be >= 1");
  BigRat r(1);
  for (int j = 0; j < a; ++j) r *= x - BigRat(static_cast<long>(j) * p);
  return r;
}

std::vector<BigInt> falling_factorial_p_coeffs(int a, int p) {
  if (a < 0) throw UsageError("falling_factorial_p_coeffs: a must be >= 0");
  if (p < 1) throw UsageError("falling_factorial_p_coeffs: p must be >= 1");
  std::vector<BigInt> c{BigInt(1)};  // ascending degree
  for (int j = 0; j < a; ++j) {
    std::vector<BigInt> next(c.size() + 1);
    const BigInt root = static_cast<long>(j) * p;
    for (size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] -= root * c[d];
    }
    c = std::move(next);
  }
  return c;
}

BigInt generalized_stirling(int a, long k, int b) {
  if (a < 1) throw UsageError("generalized_stirling: a must be >= 1");
  if (k < 1) throw UsageError("generalized_stirling: k must be >= 1");
  if (b < a || static_cast<long>(b) > static_cast<long>(a) * k) return 0;
  BigRat sum(0);
  for (int i = a; i <= b; ++i) {
    BigInt base = factorial(static_cast<unsigned long>(a)) *
                  binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(a));
    BigInt term = binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(i)) *
                  pow_int(base, static_cast<unsigned long>(k));
    if (i % 2) term = -term;
    sum += BigRat(term);
  }
  if (b % 2) sum = -sum;
  sum /= BigRat(factorial(static_cast<unsigned long>(b)));
  return to_integer(sum, "generalized_stirling");
}

ModeReport stirling_mode(long k) {
  if (k < 1) throw UsageError("stirling_mode: k must be >= 1");
  if (k > 5000) throw ResourceError("stirling_mode: k beyond mode-scan cap 5000");
  const int amax = static_cast<int>(std::min<long>(k, kColCap));
  Stirling2RowScan scan(amax);
  scan.advance_to(k);

  // Walk the row once: strictly increasing to the peak, a possible plateau of
  // length one, then strictly decreasing.  Anything else is a unimodality
  // violation and means the table is corrupt.
  long r = 1;
  bool descending = false;
  for (int a = 1; a < amax; ++a) {
    const int c = cmp(scan.value(a + 1), scan.value(a));
    if (c > 0) {
      if (descending)
        throw InternalError("stirling_mode: row not unimodal at k=" + std::to_string(k));
      r = a + 1;
    } else {
      if (c == 0 && descending)
        throw InternalError("stirling_mode: plateau after descent at k=" + std::to_string(k));
      descending = true;
    }
  }
  if (!descending && amax < k)
    throw ResourceError("stirling_mode: peak beyond column cap at k=" + std::to_string(k));

  ModeReport rep;
  rep.r_exact = r;
  rep.asymptote = k == 1 ? std::nan("") : static_cast<double>(k) / std::log(static_cast<double>(k));
  return rep;
}

MenonEstimate menon_approx(long k, long n) {
  if (k < 1 || n < 1) throw UsageError("menon_approx: need k >= 1, n >= 1");
  MenonEstimate est;
  const Real rn(n), rk(k);
  est.lambda = log(rn) - rk / rn + Real(1) / (Real(2) * rn) -
               Real(1) / (Real(12) * rn * rn);
  est.log_value = rk * log(rn) - Real::log_factorial(n) - exp(est.lambda);
  est.value = exp(est.log_value);
  est.n_over_sqrt_k = static_cast<double>(n) / std::sqrt(static_cast<double>(k));
  est.gap = static_cast<double>(k) / static_cast<double>(n) -
            0.5 * std::log(static_cast<double>(k));
  est.ratio_ok = est.n_over_sqrt_k >= 2.0;
  est.gap_ok = est.gap >= 1.0;
  return est;
}

BigRat ball_box_probability(long k, long n) {
  if (k < 0 || n < 1) throw UsageError("ball_box_probability: need k >= 0, n >= 1");
  if (n > kColCap) throw ResourceError("ball_box_probability: n beyond column cap");
  if (k < n) return BigRat(0);
  Stirling2RowScan scan(static_cast<int>(n));
  scan.advance_to(k);
  return make_rat(scan.value(static_cast<int>(n)) * factorial(static_cast<unsigned long>(n)),
                  pow_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

BigRat ball_box_inclusion_exclusion(long k, long n) {
  if (k < 0 || n < 1) throw UsageError("ball_box_inclusion_exclusion: need k >= 0, n >= 1");
  BigInt num(0);
  for (long j = 0; j <= n; ++j) {
    BigInt term = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                  pow_int(static_cast<unsigned long>(n - j), static_cast<unsigned long>(k));
    if (j % 2) term = -term;
    num += term;
  }
  return make_rat(num, pow_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

Real ball_box_limit(long k, long n) {
  if (k < 0 || n < 1) throw UsageError("ball_box_limit: need k >= 0, n >= 1");
  const Real rn(n), rk(k);
  return exp(-(rn * exp(-(rk / rn))));
}

Stirling2RowScan::Stirling2RowScan(int amax, long row_cap)
    : amax_(amax), row_cap_(row_cap) {
  if (amax < 0) throw UsageError("Stirling2RowScan: amax must be >= 0");
  if (amax > kColCap) throw ResourceError("Stirling2RowScan: amax beyond column cap 1000");
  row_.assign(static_cast<size_t>(amax) + 1, BigInt(0));
  row_[0] = 1;  // row k = 0
}

void Stirling2RowScan::advance_to(long k) {
  if (k < k_) throw UsageError("Stirling2RowScan: cannot rewind");
  if (k > row_cap_) throw ResourceError("Stirling2RowScan: k beyond row cap");
  while (k_ < k) {
    for (int a = amax_; a >= 1; --a)
      row_[static_cast<size_t>(a)] =
          BigInt(a) * row_[static_cast<size_t>(a)] + row_[static_cast<size_t>(a) - 1];
    row_[0] = 0;
    ++k_;
  }
}

const BigInt& Stirling2RowScan::value(int a) const {
  if (a < 0 || a > amax_) return zero_;
  return row_[static_cast<size_t>(a)];
}

void write_stirling_csv(std::ostream& os, int kind, long kmin, long kmax,
                        int amin, int amax) {
  if (kind != 1 && kind != 2) throw UsageError("write_stirling_csv: kind must be 1 or 2");
  if (kmin < 0 || kmax < kmin) throw UsageError("write_stirling_csv: bad k range");
  if (amin < 0 || amax < amin) throw UsageError("write_stirling_csv: bad a range");
  if (kmax > kRowCap) throw ResourceError("write_stirling_csv: kmax beyond row cap 20000");
  if (amax > kColCap) throw ResourceError("write_stirling_csv: amax beyond column cap 1000");

  os << "k,a,value\n";
  // One streamed pass, truncated at amax.
  std::vector<BigInt> row(static_cast<size_t>(amax) + 1, BigInt(0));
  row[0] = 1;
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) {
      for (int a = amax; a >= 1; --a)
        row[static_cast<size_t>(a)] =
            (kind == 2 ? BigInt(a) : BigInt(k - 1)) * row[static_cast<size_t>(a)] +
            row[static_cast<size_t>(a) - 1];
      row[0] = 0;
    }
    if (k >= kmin)
      for (int a = amin; a <= amax; ++a)
        os << k << ',' << a << ',' << row[static_cast<size_t>(a)].get_str() << '\n';
  }
}

}  // namespace t2r
