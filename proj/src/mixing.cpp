#include "t2r/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "t2r/shuffle_algebra.hpp"  // level_size

namespace t2r {

namespace {

void check_np(int n, int p, const char* who) {
  if (n < 1) throw UsageError(std::string(who) + ": need n >= 1");
  if (p < 1) throw UsageError(std::string(who) + ": need p >= 1");
}

double actual_c(long k, int n) {
  return static_cast<double>(k) / n - std::log(static_cast<double>(n));
}

double limit_profile(double c) { return 1.0 - std::exp(-std::exp(-c)); }

double logaddexp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

}  // namespace

TVSession::TVSession(int n, int p) : n_(n), p_(p), scan_(n) {
  check_np(n, p, "TVSession");
}

void TVSession::ensure(long k) {
  if (k < 0) throw UsageError("TVSession: k must be >= 0");
  try {
    scan_.advance_to(k);
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + " (consider logspace mode)");
  }
}

TVSession::Core TVSession::core(long k) {
  ensure(k);
  Core out;
  const BigInt order = group_order(n_, p_);
  const BigRat y = make_rat(1, order);
  const BigInt npk = pow_int(BigInt(static_cast<long>(n_) * p_), static_cast<unsigned long>(k));

  // suffix sums S_a = sum_{b=a}^n p^(k-b) {k,b}; x_a = S_a/(np)^k
  std::vector<BigRat> x(static_cast<size_t>(n_) + 1);
  BigInt suffix(0);
  for (int a = n_; a >= 0; --a) {
    if (a <= k)
      suffix += pow_int(static_cast<unsigned long>(p_), static_cast<unsigned long>(k - a)) *
                scan_.value(a);
    x[static_cast<size_t>(a)] = make_rat(suffix, npk);
  }

  long A = n_ + 1;
  for (int a = 0; a <= n_; ++a)
    if (y > x[static_cast<size_t>(a)]) {
      A = a;
      break;
    }

  BigRat tv(0);
  for (int a = static_cast<int>(A); a <= n_; ++a) {
    const BigInt delta =
        level_size(a, n_, p_) - (a >= 1 ? level_size(a - 1, n_, p_) : BigInt(0));
    tv += (y - x[static_cast<size_t>(a)]) * BigRat(delta);
  }

  if (k >= n_)
    out.upper = BigRat(1) - make_rat(scan_.value(n_) * factorial(static_cast<unsigned long>(n_)),
                                     pow_int(static_cast<unsigned long>(n_),
                                             static_cast<unsigned long>(k)));
  else
    out.upper = BigRat(1);
  out.tv = tv;
  out.A = A;
  return out;
}

BigRat TVSession::tv_exact(long k) { return core(k).tv; }
BigRat TVSession::tv_upper(long k) { return core(k).upper; }
long TVSession::threshold_A(long k) { return core(k).A; }

std::vector<BigRat> TVSession::x_values(long k) {
  ensure(k);
  const BigInt npk = pow_int(BigInt(static_cast<long>(n_) * p_), static_cast<unsigned long>(k));
  std::vector<BigRat> x(static_cast<size_t>(n_) + 1);
  BigInt suffix(0);
  for (int a = n_; a >= 0; --a) {
    if (a <= k)
      suffix += pow_int(static_cast<unsigned long>(p_), static_cast<unsigned long>(k - a)) *
                scan_.value(a);
    x[static_cast<size_t>(a)] = make_rat(suffix, npk);
  }
  return x;
}

TVRecord TVSession::record(long k) {
  Core c = core(k);
  TVRecord r;
  r.k = k;
  r.c = actual_c(k, n_);
  r.tv_exact = c.tv;
  r.tv_upper_exact = c.upper;
  r.tv_exact_est = c.tv.get_d();
  r.tv_upper = c.upper.get_d();
  r.tv_limit = limit_profile(r.c);
  r.threshold_A = c.A;
  r.p_flag = p_ == 1;
  r.mode = "exact";
  return r;
}

LogTVSession::LogTVSession(int n, int p) : n_(n), p_(p) {
  check_np(n, p, "LogTVSession");
  logrow_.assign(static_cast<size_t>(n) + 1, -std::numeric_limits<double>::infinity());
  logrow_[0] = 0.0;  // {0,0} = 1
}

void LogTVSession::ensure(long k) {
  if (k < k_) throw UsageError("LogTVSession: k values must be non-decreasing");
  while (k_ < k) {
    for (int a = n_; a >= 1; --a)
      logrow_[static_cast<size_t>(a)] =
          logaddexp(std::log(static_cast<double>(a)) + logrow_[static_cast<size_t>(a)],
                    logrow_[static_cast<size_t>(a) - 1]);
    logrow_[0] = -std::numeric_limits<double>::infinity();
    ++k_;
  }
}

TVRecord LogTVSession::record(long k) {
  ensure(k);
  const double log_p = std::log(static_cast<double>(p_));
  const double log_np = std::log(static_cast<double>(n_) * p_);
  const double log_y = -(n_ * log_p + std::lgamma(static_cast<double>(n_) + 1));

  std::vector<double> log_x(static_cast<size_t>(n_) + 1);
  double ls = -std::numeric_limits<double>::infinity();
  for (int a = n_; a >= 0; --a) {
    if (a <= k)
      ls = logaddexp(ls, static_cast<double>(k - a) * log_p + logrow_[static_cast<size_t>(a)]);
    log_x[static_cast<size_t>(a)] = ls - static_cast<double>(k) * log_np;
  }

  long A = n_ + 1;
  for (int a = 0; a <= n_; ++a)
    if (log_y > log_x[static_cast<size_t>(a)]) {
      A = a;
      break;
    }

  double tv = 0.0;
  for (int a = static_cast<int>(A); a <= n_; ++a) {
    // log(|B_a| - |B_{a-1}|); the ratio |B_{a-1}|/|B_a| is 1/(p(n-a+1)).
    double log_Ba = std::lgamma(static_cast<double>(n_) + 1) -
                    std::lgamma(static_cast<double>(n_ - a) + 1) + a * log_p;
    double log_delta =
        a >= 1 ? log_Ba + std::log1p(-1.0 / (static_cast<double>(p_) * (n_ - a + 1))) : 0.0;
    tv += std::exp(log_y + log_delta) *
          (1.0 - std::exp(log_x[static_cast<size_t>(a)] - log_y));
  }

  TVRecord r;
  r.k = k;
  r.c = actual_c(k, n_);
  r.tv_exact_est = tv;
  r.tv_upper =
      k >= n_ ? -std::expm1(logrow_[static_cast<size_t>(n_)] +
                            std::lgamma(static_cast<double>(n_) + 1) -
                            static_cast<double>(k) * std::log(static_cast<double>(n_)))
              : 1.0;
  r.tv_limit = limit_profile(r.c);
  r.threshold_A = A;
  r.p_flag = p_ == 1;
  r.mode = "logspace";
  return r;
}

BigRat tv_exact(int n, int p, long k) { return TVSession(n, p).tv_exact(k); }
BigRat tv_upper_bound(int n, int p, long k) { return TVSession(n, p).tv_upper(k); }
long threshold_A(int n, int p, long k) { return TVSession(n, p).threshold_A(k); }

long mixing_time(int n, int p, double eps) {
  check_np(n, p, "mixing_time");
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("mixing_time: need 0 < eps < 1");
  // Compare against an exact rational ceiling of eps to keep the search exact:
  // use the dyadic value of the double, which is exact.
  BigRat eps_rat(eps);
  eps_rat.canonicalize();
  Stirling2RowScan scan(n);
  const BigInt nfact = factorial(static_cast<unsigned long>(n));
  for (long k = n;; ++k) {
    scan.advance_to(k);  // throws ResourceError at the row cap
    const BigRat bound =
        BigRat(1) - make_rat(scan.value(n) * nfact,
                             pow_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    if (bound <= eps_rat) return k;
  }
}

double mixing_time_closed_form(int n, double eps) {
  if (n < 1) throw UsageError("mixing_time_closed_form: need n >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw UsageError("mixing_time_closed_form: need 0 < eps < 1");
  const double nn = static_cast<double>(n);
  return nn * std::log(nn) + nn * std::log(-1.0 / std::log(1.0 - eps));
}

namespace {

long grid_k(int n, double c) {
  const double nn = static_cast<double>(n);
  const double v = std::floor(nn * std::log(nn) + c * nn);
  if (v < 0) return 0;
  return static_cast<long>(v);
}

}  // namespace

TVRecord cutoff_upper(int n, int p, double c, bool exact_mode) {
  check_np(n, p, "cutoff_upper");
  const long k = grid_k(n, c);
  if (exact_mode) return TVSession(n, p).record(k);
  return LogTVSession(n, p).record(k);
}

CutoffLowerReport cutoff_lower(int n, int p, double c_n, bool exact_mode) {
  check_np(n, p, "cutoff_lower");
  CutoffLowerReport rep;
  const long k = grid_k(n, -c_n);
  rep.X = static_cast<long>(std::floor(n - std::log(static_cast<double>(n))));

  if (exact_mode) {
    TVSession session(n, p);
    rep.point = session.record(k);
    const long A = rep.point.threshold_A;
    rep.case1 = A <= rep.X;

    // C = (n!/n^k) sum_{b=X}^n p^(n-b) {k,b}, exact; reuse the session row
    // through x_values is not possible (different scaling), so rebuild.
    Stirling2RowScan scan(n);
    scan.advance_to(k);
    BigInt csum(0);
    for (int b = std::max<long>(rep.X, 0); b <= n; ++b)
      csum += pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(n - b)) *
              scan.value(b);
    rep.C_factor = make_rat(factorial(static_cast<unsigned long>(n)) * csum,
                            pow_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));

    const long E = std::max(A, rep.X);  // case 1 uses X, case 2 uses A
    if (E <= n + 1 && E >= 0) {
      rep.D_factor = make_rat(
          1, factorial(static_cast<unsigned long>(n - E + 1)) *
                 pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(n - E + 1)));
    } else {
      rep.D_factor = BigRat(1);
    }
    rep.surrogate = (BigRat(1) - rep.C_factor) * (BigRat(1) - rep.D_factor);

    // Both cases of the analysis make the surrogate a true lower bound; a
    // violation would mean the exact machinery is broken.
    if (rep.point.tv_exact && *rep.point.tv_exact < rep.surrogate)
      throw InternalError("cutoff_lower: exact TV fell below the (1-C)(1-D) surrogate");
    rep.point.lower_flag = true;
  } else {
    rep.point = LogTVSession(n, p).record(k);
    rep.case1 = rep.point.threshold_A <= rep.X;
  }

  if (n >= 2 && static_cast<long>(n) * p >= 2) {
    const double lo =
        std::log(std::log(static_cast<double>(n) * p) * std::log(static_cast<double>(n)));
    rep.window_ok = c_n >= lo && c_n < std::log(static_cast<double>(n));
  }
  return rep;
}

std::vector<TVRecord> tv_curve(int n, int p, std::vector<long> ks, const std::string& mode) {
  check_np(n, p, "tv_curve");
  std::sort(ks.begin(), ks.end());
  std::vector<TVRecord> out;
  out.reserve(ks.size());
  if (mode == "exact") {
    TVSession session(n, p);
    for (long k : ks) out.push_back(session.record(k));
  } else if (mode == "logspace") {
    LogTVSession session(n, p);
    for (long k : ks) out.push_back(session.record(k));
  } else {
    throw UsageError("tv_curve: mode must be exact|logspace");
  }
  return out;
}

std::vector<long> cutoff_grid(int n, double cmin, double cmax, double step) {
  if (step <= 0) throw UsageError("cutoff_grid: step must be positive");
  std::vector<long> ks;
  if (cmin > cmax) return ks;
  const long count = static_cast<long>(std::floor((cmax - cmin) / step + 1e-9)) + 1;
  for (long i = 0; i < count; ++i) ks.push_back(grid_k(n, cmin + static_cast<double>(i) * step));
  return ks;
}

void write_tv_csv(std::ostream& os, const std::vector<TVRecord>& records, int decimals) {
  os << "k,c,tv_exact_num,tv_exact_den,tv_upper,tv_limit,threshold_A,mode\n";
  for (const auto& r : records) {
    os << r.k << ',' << double_to_decimal(r.c, decimals) << ',';
    if (r.tv_exact)
      os << r.tv_exact->get_num().get_str() << ',' << r.tv_exact->get_den().get_str();
    else
      os << double_to_decimal(r.tv_exact_est, decimals) << ',';
    os << ',' << double_to_decimal(r.tv_upper, decimals) << ','
       << double_to_decimal(r.tv_limit, decimals) << ',' << r.threshold_A << ',' << r.mode
       << '\n';
  }
}

}  // namespace t2r
