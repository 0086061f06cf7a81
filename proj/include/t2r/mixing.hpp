#pragma once

// Exact total-variation distance of the k-step top-to-random chain on G_{n,p}
// from uniform, the closed-form upper bound 1 - {k,n} n!/n^k, the mixing-time
// search, and both directions of the cutoff analysis.
//
// The distribution after k steps is (1/(np))^k B_1^k; its exact distance is
//   d_TV = sum_{a >= A} (y - x_a) (|B_a| - |B_{a-1}|),
//   x_a = (1/(np)^k) sum_{b=a}^{n} p^(k-b) {k,b},   y = 1/(p^n n!),
//   A = min{ a : y > x_a }   (n+1 when no index qualifies).
//
// Exact mode streams big-integer Stirling rows; log-space mode runs the same
// structure on log-domain doubles (all sums of positive terms, so log-add is
// stable) and is meant for n beyond a few hundred.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "t2r/numeric.hpp"
#include "t2r/stirling.hpp"

namespace t2r {

struct TVRecord {
  long k = 0;
  double c = 0.0;  // k/n - log n, from the actual integer k
  std::optional<BigRat> tv_exact;        // exact mode
  std::optional<BigRat> tv_upper_exact;  // exact mode
  double tv_exact_est = 0.0;             // decimal view (both modes)
  double tv_upper = 0.0;
  double tv_limit = 0.0;  // 1 - exp(-e^{-c}), candidate limit profile
  long threshold_A = 0;
  bool p_flag = false;       // p == 1: outside the bound's stated hypothesis
  bool lower_flag = false;   // set by cutoff_lower: surrogate sandwich held
  std::string mode = "exact";
};

// Exact-mode computations sharing one streamed Stirling row; query k values
// must be non-decreasing.
class TVSession {
 public:
  TVSession(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }

  BigRat tv_exact(long k);
  BigRat tv_upper(long k);
  long threshold_A(long k);
  std::vector<BigRat> x_values(long k);  // x_0 .. x_n
  TVRecord record(long k);

 private:
  void ensure(long k);
  struct Core {
    BigRat tv;
    BigRat upper;
    long A;
  };
  Core core(long k);
  int n_, p_;
  Stirling2RowScan scan_;
};

// Log-space counterpart; same recursion on log-domain doubles.
class LogTVSession {
 public:
  LogTVSession(int n, int p);
  TVRecord record(long k);  // k non-decreasing across calls

 private:
  void ensure(long k);
  int n_, p_;
  long k_ = 0;
  std::vector<double> logrow_;
};

// One-shot conveniences.
BigRat tv_exact(int n, int p, long k);
BigRat tv_upper_bound(int n, int p, long k);
long threshold_A(int n, int p, long k);

// Smallest k with tv_upper_bound(n,p,k) <= eps (the bound is non-increasing
// in k), plus the closed form n log n + n log(-1/log(1-eps)).
long mixing_time(int n, int p, double eps);
double mixing_time_closed_form(int n, double eps);

// Record at k = floor(n log n + c n).
TVRecord cutoff_upper(int n, int p, double c, bool exact_mode = true);

struct CutoffLowerReport {
  TVRecord point;     // at k = floor(n log n - c_n n)
  long X = 0;         // floor(n - log n)
  BigRat C_factor;    // (n!/n^k) sum_{b=X}^n p^(n-b) {k,b}
  BigRat D_factor;    // 1/((n-E+1)! p^(n-E+1)), E = max(A, X) per the case split
  BigRat surrogate;   // (1-C)(1-D), valid lower bound in both cases
  bool case1 = false;     // A <= X
  bool window_ok = false; // log(log(np) log n) <= c_n < log n
};
CutoffLowerReport cutoff_lower(int n, int p, double c_n, bool exact_mode = true);

// Curves and their frozen CSV schema
// k,c,tv_exact_num,tv_exact_den,tv_upper,tv_limit,threshold_A,mode
// (log-space rows print the float estimate in tv_exact_num, empty den).
std::vector<TVRecord> tv_curve(int n, int p, std::vector<long> ks, const std::string& mode);
std::vector<long> cutoff_grid(int n, double cmin, double cmax, double step);
void write_tv_csv(std::ostream& os, const std::vector<TVRecord>& records, int decimals = 12);

}  // namespace t2r
