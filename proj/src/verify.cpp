#include "t2r/verify.hpp"

#include <cmath>
#include <sstream>

#include "t2r/colored_group.hpp"
#include "t2r/mixing.hpp"
#include "t2r/shuffle_algebra.hpp"
#include "t2r/spectral.hpp"

namespace t2r {

namespace {

struct Case {
  int n, p;
};

std::vector<Case> eligible(const VerifyOptions& opts, std::uint64_t extra_cap = 0) {
  std::vector<Case> cases;
  for (int n = 1; n <= opts.n_max; ++n)
    for (int p = 1; p <= opts.p_max; ++p) {
      const BigInt order = group_order(n, p);
      if (order > opts.group_cap) continue;
      if (extra_cap && order > extra_cap) continue;
      cases.push_back({n, p});
    }
  return cases;
}

long steps_for(const VerifyOptions& opts, int n) {
  return opts.k_max >= 0 ? opts.k_max : 2L * n + 2;
}

// Collects one named check; `body` appends failure witnesses.
class Check {
 public:
  Check(std::vector<CheckResult>& out, std::string name) : out_(out), name_(std::move(name)) {}

  void fail(const std::string& witness) {
    if (witnesses_.empty()) first_ = witness;
    witnesses_.push_back(witness);
  }

  bool ok() const { return witnesses_.empty(); }

  void done(long cases) {
    CheckResult r;
    r.name = name_;
    r.pass = witnesses_.empty();
    if (r.pass) {
      std::ostringstream os;
      os << cases << " case(s)";
      r.detail = os.str();
    } else {
      std::ostringstream os;
      os << witnesses_.size() << " failure(s); first: " << first_;
      r.detail = os.str();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
  std::string name_;
  std::vector<std::string> witnesses_;
  std::string first_;
};

std::string witness_np(int n, int p) {
  std::ostringstream os;
  os << "n=" << n << " p=" << p;
  return os.str();
}

std::string witness_npk(int n, int p, long k) {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << " k=" << k;
  return os.str();
}

}  // namespace

std::vector<CheckResult> verify_algebra(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<Case> cases = eligible(opts);

  {
    Check c(out, "level-sizes");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 0; a <= n; ++a, ++tally) {
        const AlgebraElement B = build_B(a, n, p);
        if (BigInt(static_cast<long>(B.support_size())) != level_size(a, n, p) ||
            B.total_mass() != BigRat(level_size(a, n, p)))
          c.fail(witness_np(n, p) + " a=" + std::to_string(a));
      }
    c.done(tally);
  }

  {
    Check c(out, "level-recursion");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      const AlgebraElement B1 = build_B(1, n, p);
      for (int a = 0; a <= n; ++a, ++tally) {
        const AlgebraElement lhs = convolve(build_B(a, n, p), B1);
        AlgebraElement rhs = build_B(a, n, p);
        rhs.scale(BigRat(static_cast<long>(p) * a));
        if (a < n) rhs += build_B(a + 1, n, p);
        if (lhs != rhs) c.fail(witness_np(n, p) + " a=" + std::to_string(a));
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "b1-power-stirling-expansion");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      const AlgebraElement B1 = build_B(1, n, p);
      AlgebraElement power = AlgebraElement::unit(n, p);
      for (long k = 0; k <= steps_for(opts, n); ++k, ++tally) {
        if (k > 0) power = convolve(power, B1);
        if (b1_power(k, n, p, opts.stirling2_hook) != power)
          c.fail(witness_npk(n, p, k));
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "level-reconstruction-falling-product");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 0; a <= n; ++a, ++tally)
        if (Ba_by_falling_product(a, n, p) != build_B(a, n, p))
          c.fail(witness_np(n, p) + " a=" + std::to_string(a));
    c.done(tally);
  }

  {
    Check c(out, "level-reconstruction-signed-stirling");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 0; a <= n; ++a, ++tally)
        if (Ba_by_signed_stirling(a, n, p) != build_B(a, n, p))
          c.fail(witness_np(n, p) + " a=" + std::to_string(a));
    c.done(tally);
  }

  {
    Check c(out, "idempotent-orthogonality");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      std::vector<AlgebraElement> es;
      for (int i = 0; i <= n; ++i) es.push_back(idempotent_e(i, n, p));
      AlgebraElement sum = AlgebraElement::zero(n, p);
      for (const auto& e : es) sum += e;
      if (sum != AlgebraElement::unit(n, p)) c.fail(witness_np(n, p) + " resolution-of-unit");
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j, ++tally) {
          const AlgebraElement prod = convolve(es[static_cast<size_t>(i)],
                                               es[static_cast<size_t>(j)]);
          const AlgebraElement want =
              i == j ? es[static_cast<size_t>(i)] : AlgebraElement::zero(n, p);
          if (prod != want)
            c.fail(witness_np(n, p) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }
    c.done(tally);
  }

  {
    Check c(out, "level-power-closed-form");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 0; a <= n; ++a) {
        const AlgebraElement Ba = build_B(a, n, p);
        AlgebraElement power = AlgebraElement::unit(n, p);
        for (long k = 0; k <= 3; ++k, ++tally) {
          if (k > 0) power = convolve(power, Ba);
          if (Ba_power(a, k, n, p) != power)
            c.fail(witness_np(n, p) + " a=" + std::to_string(a) + " k=" + std::to_string(k));
        }
      }
    c.done(tally);
  }

  {
    Check c(out, "head-letter-partition");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 1; a <= n; ++a, ++tally) {
        AlgebraElement sum = AlgebraElement::zero(n, p);
        for (int v = 1; v <= a; ++v)
          for (int col = 0; col < p; ++col) sum += head_group(a, {col, v}, n, p);
        if (a < n) sum += head_group(a, {0, a + 1}, n, p);
        if (sum != build_B(a, n, p)) c.fail(witness_np(n, p) + " a=" + std::to_string(a));
      }
    c.done(tally);
  }

  {
    Check c(out, "head-letter-product-collapse");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      const AlgebraElement B1 = build_B(1, n, p);
      for (int a = 1; a <= n; ++a) {
        for (int v = 1; v <= a; ++v)
          for (int col = 0; col < p; ++col) {
            ++tally;
            if (convolve(head_group(a, {col, v}, n, p), B1) != build_B(a, n, p))
              c.fail(witness_np(n, p) + " a=" + std::to_string(a) + " head=" +
                     std::to_string(v) + "~" + std::to_string(col));
          }
        if (a < n) {
          ++tally;
          if (convolve(head_group(a, {0, a + 1}, n, p), B1) != build_B(a + 1, n, p))
            c.fail(witness_np(n, p) + " a=" + std::to_string(a) + " head=tail");
        }
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "level-idempotent-expansion");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 0; a <= n; ++a) {
        const AlgebraElement Ba = build_B(a, n, p);
        AlgebraElement power = Ba;
        for (long k = 1; k <= 3; ++k, ++tally) {
          if (k > 1) power = convolve(power, Ba);
          if (Ba_power_by_idempotents(a, k, n, p) != power)
            c.fail(witness_np(n, p) + " a=" + std::to_string(a) + " k=" + std::to_string(k));
        }
      }
    c.done(tally);
  }

  return out;
}

std::vector<CheckResult> verify_spectral(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<Case> cases = eligible(opts, 5000);
  const std::vector<Case> dense = eligible(opts, 200);

  {
    Check c(out, "spectrum-formula-vs-trace");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      ++tally;
      const SpectrumReport f = multiplicity_report(n, p, "formula");
      const SpectrumReport t = multiplicity_report(n, p, "trace");
      bool same = f.eigenvalues.size() == t.eigenvalues.size();
      for (size_t i = 0; same && i < f.eigenvalues.size(); ++i)
        same = f.eigenvalues[i].value == t.eigenvalues[i].value &&
               f.eigenvalues[i].multiplicity == t.eigenvalues[i].multiplicity;
      if (!same) c.fail(witness_np(n, p));
    }
    c.done(tally);
  }

  {
    Check c(out, "spectrum-charpoly-route");
    long tally = 0;
    for (const auto& [n, p] : dense) {
      ++tally;
      const SpectrumReport f = multiplicity_report(n, p, "formula");
      // berkowitz below 60, structured certificate above: both paths covered
      const SpectrumReport cp = multiplicity_report(n, p, "charpoly", 2000, 60);
      bool same = f.eigenvalues.size() == cp.eigenvalues.size();
      for (size_t i = 0; same && i < f.eigenvalues.size(); ++i)
        same = f.eigenvalues[i].value == cp.eigenvalues[i].value &&
               f.eigenvalues[i].multiplicity == cp.eigenvalues[i].multiplicity;
      if (!same) c.fail(witness_np(n, p));
    }
    c.done(tally);
  }

  {
    Check c(out, "regular-representation-homomorphism");
    long tally = 0;
    for (const auto& [n, p] : dense) {
      ++tally;
      const AlgebraElement B1 = build_B(1, n, p);
      const AlgebraElement B2 = n >= 2 ? build_B(2, n, p) : build_B(0, n, p);
      const RegularMatrix L1 = left_regular_matrix(B1);
      const RegularMatrix L2 = left_regular_matrix(B2);
      const RegularMatrix lhs = multiply(L1, L2);
      const RegularMatrix rhs = left_regular_matrix(convolve(B1, B2));
      bool same = lhs.order() == rhs.order();
      for (long r = 0; same && r < lhs.order(); ++r)
        for (long col = 0; same && col < lhs.order(); ++col)
          same = lhs.at(r, col) == rhs.at(r, col);
      if (!same) c.fail(witness_np(n, p));
    }
    c.done(tally);
  }

  {
    Check c(out, "transition-row-col-sums");
    long tally = 0;
    for (const auto& [n, p] : dense) {
      ++tally;
      const RegularMatrix L1 = left_regular_matrix(build_B(1, n, p));
      const BigRat np(static_cast<long>(n) * p);
      for (long idx = 0; idx < L1.order(); ++idx)
        if (L1.row_sum(idx) != np || L1.col_sum(idx) != np) {
          c.fail(witness_np(n, p) + " index=" + std::to_string(idx));
          break;
        }
    }
    c.done(tally);
  }

  {
    Check c(out, "projector-trace-multiplicity");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int i = 0; i <= n; ++i) {
        ++tally;
        const BigRat tr = trace_left_regular(idempotent_e(i, n, p));
        const BigInt want = binomial(static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(i)) *
                            derangement_count(n - i, p);
        if (tr != BigRat(want)) c.fail(witness_np(n, p) + " i=" + std::to_string(i));
      }
    c.done(tally);
  }

  {
    Check c(out, "level-spectrum-mass-and-trace");
    long tally = 0;
    for (const auto& [n, p] : cases)
      for (int a = 0; a <= n; ++a) {
        ++tally;
        const auto spec = ba_eigenvalues(a, n, p);
        BigInt mass(0);
        BigInt weighted(0);
        for (const auto& [value, mult] : spec) {
          mass += mult;
          weighted += value * mult;
        }
        // trace of L(B_a) = |G| (the identity appears in B_a exactly once)
        if (mass != group_order(n, p) || weighted != group_order(n, p))
          c.fail(witness_np(n, p) + " a=" + std::to_string(a));
      }
    c.done(tally);
  }

  return out;
}

std::vector<CheckResult> verify_mixing(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<Case> cases = eligible(opts, 5000);

  {
    Check c(out, "tv-exact-vs-bruteforce");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      const GroupEnumeration enumeration(n, p);
      const AlgebraElement B1 = build_B(1, n, p);
      AlgebraElement power = AlgebraElement::unit(n, p);
      TVSession session(n, p);
      const BigRat uniform = make_rat(1, group_order(n, p));
      for (long k = 0; k <= steps_for(opts, n); ++k, ++tally) {
        if (k > 0) power = convolve(power, B1);
        const BigRat scale =
            make_rat(1, pow_int(BigInt(static_cast<long>(n) * p),
                                static_cast<unsigned long>(k)));
        BigRat dist(0);
        enumeration.for_each([&](std::uint64_t, const ColoredPermutation& g) {
          BigRat d = scale * power.coeff(g) - uniform;
          if (d < 0) d = -d;
          dist += d;
        });
        dist /= 2;
        if (dist != session.tv_exact(k)) c.fail(witness_npk(n, p, k));
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "threshold-definition");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      TVSession session(n, p);
      const BigRat y = make_rat(1, group_order(n, p));
      for (long k = 0; k <= steps_for(opts, n); ++k, ++tally) {
        const std::vector<BigRat> xs = session.x_values(k);
        long A = n + 1;
        for (long a = 0; a <= n; ++a)
          if (y > xs[static_cast<size_t>(a)]) {
            A = a;
            break;
          }
        if (A != session.threshold_A(k)) c.fail(witness_npk(n, p, k));
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "level-threshold-monotone");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      TVSession session(n, p);
      for (long k = 0; k <= steps_for(opts, n); ++k, ++tally) {
        const std::vector<BigRat> xs = session.x_values(k);
        for (size_t a = 1; a < xs.size(); ++a)
          if (xs[a] > xs[a - 1]) {
            c.fail(witness_npk(n, p, k) + " a=" + std::to_string(a));
            break;
          }
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "upper-bound-sandwich");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      TVSession session(n, p);
      BigRat prev(2);
      for (long k = 0; k <= steps_for(opts, n) + n; ++k, ++tally) {
        const BigRat tv = session.tv_exact(k);
        const BigRat ub = session.tv_upper(k);
        if (tv > ub) c.fail(witness_npk(n, p, k) + " exact>bound");
        if (ub > prev) c.fail(witness_npk(n, p, k) + " bound-not-monotone");
        prev = ub;
      }
    }
    c.done(tally);
  }

  {
    Check c(out, "mixing-time-definition");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      ++tally;
      const long t = mixing_time(n, p, 0.25);
      TVSession session(n, p);
      bool ok = session.tv_upper(t) <= BigRat(1, 4);
      if (t > 0) {
        TVSession before(n, p);
        ok = ok && before.tv_upper(t - 1) > BigRat(1, 4);
      }
      if (!ok) c.fail(witness_np(n, p) + " t=" + std::to_string(t));
    }
    c.done(tally);
  }

  {
    Check c(out, "logspace-agreement");
    long tally = 0;
    for (const auto& [n, p] : cases) {
      TVSession exact_session(n, p);
      LogTVSession log_session(n, p);
      const BigRat y = make_rat(1, group_order(n, p));
      for (long k = 0; k <= steps_for(opts, n); ++k, ++tally) {
        const TVRecord a = exact_session.record(k);
        const TVRecord b = log_session.record(k);
        bool a_ok = a.threshold_A == b.threshold_A;
        if (!a_ok) {
          // Floats cannot resolve y > x_a when the tie is mathematically
          // exact (n=1; p=1, n=2); such flips contribute (y-x_a) = 0 to the
          // distance.  Accept iff every disputed level is an exact tie.
          const std::vector<BigRat> xs = exact_session.x_values(k);
          a_ok = true;
          for (long lvl = std::min(a.threshold_A, b.threshold_A);
               lvl < std::max(a.threshold_A, b.threshold_A); ++lvl)
            if (lvl > n || xs[static_cast<size_t>(lvl)] != y) a_ok = false;
        }
        if (std::abs(a.tv_exact_est - b.tv_exact_est) > 1e-9 ||
            std::abs(a.tv_upper - b.tv_upper) > 1e-9 || !a_ok)
          c.fail(witness_npk(n, p, k));
      }
    }
    c.done(tally);
  }

  return out;
}

std::vector<CheckResult> verify_all(const VerifyOptions& opts) {
  std::vector<CheckResult> out = verify_algebra(opts);
  std::vector<CheckResult> s = verify_spectral(opts);
  out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  std::vector<CheckResult> m = verify_mixing(opts);
  out.insert(out.end(), std::make_move_iterator(m.begin()), std::make_move_iterator(m.end()));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace t2r
