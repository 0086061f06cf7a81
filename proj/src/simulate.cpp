#include "t2r/simulate.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include "t2r/mixing.hpp"
#include "t2r/shuffle_algebra.hpp"

namespace t2r {

const char kRngAlgorithm[] = "splitmix64/mulshift-v1";

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Splitmix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t Splitmix64::bounded(std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

Splitmix64 trajectory_rng(std::uint64_t seed, long trajectory) {
  return Splitmix64(
      mix64(seed + (static_cast<std::uint64_t>(trajectory) + 1) * 0x9e3779b97f4a7c15ULL));
}

ColoredPermutation move_element(int n, int p, int j, long i) {
  if (j < 0 || j >= p) throw UsageError("move_element: color shift out of range");
  if (i < 1 || i > n) throw UsageError("move_element: insert position out of range");
  std::vector<ColoredLetter> word;
  word.reserve(static_cast<size_t>(n));
  for (int v = 2; v <= i; ++v) word.push_back({0, v});
  word.push_back({j, 1});
  for (int v = static_cast<int>(i) + 1; v <= n; ++v) word.push_back({0, v});
  return ColoredPermutation(n, p, std::move(word));
}

ColoredPermutation step(const ColoredPermutation& state, int j, long i) {
  const int n = state.n();
  const int p = state.p();
  if (j < 0 || j >= p) throw UsageError("step: color shift out of range");
  if (i < 1 || i > n) throw UsageError("step: insert position out of range");
  std::vector<ColoredLetter> word = state.word();
  ColoredLetter top = word[0];
  top.color = (top.color + j) % p;
  word.erase(word.begin());
  word.insert(word.begin() + (i - 1), top);
  return ColoredPermutation(n, p, std::move(word));
}

namespace {

void run_block(const ChainConfig& cfg, const GroupEnumeration& enumeration, long lo, long hi,
               std::vector<long>& counts) {
  const int n = cfg.n;
  const int p = cfg.p;
  std::vector<int> vals(static_cast<size_t>(n)), cols(static_cast<size_t>(n));
  for (long t = lo; t < hi; ++t) {
    Splitmix64 rng = trajectory_rng(cfg.seed, t);
    for (int m = 0; m < n; ++m) {
      vals[static_cast<size_t>(m)] = m + 1;
      cols[static_cast<size_t>(m)] = 0;
    }
    for (long s = 0; s < cfg.k; ++s) {
      const int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(p)));
      const long i = static_cast<long>(rng.bounded(static_cast<std::uint64_t>(n))) + 1;
      const int v0 = vals[0];
      const int c0 = (cols[0] + j) % p;
      for (long m = 0; m < i - 1; ++m) {
        vals[static_cast<size_t>(m)] = vals[static_cast<size_t>(m) + 1];
        cols[static_cast<size_t>(m)] = cols[static_cast<size_t>(m) + 1];
      }
      vals[static_cast<size_t>(i) - 1] = v0;
      cols[static_cast<size_t>(i) - 1] = c0;
    }
    std::vector<ColoredLetter> word(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m)
      word[static_cast<size_t>(m)] = {cols[static_cast<size_t>(m)], vals[static_cast<size_t>(m)]};
    counts[enumeration.index_of(ColoredPermutation(n, p, std::move(word)))]++;
  }
}

}  // namespace

EmpiricalDistribution run(const ChainConfig& cfg, std::uint64_t group_cap) {
  if (cfg.trials < 1) throw UsageError("run: need trials >= 1");
  if (cfg.k < 0) throw UsageError("run: need k >= 0");
  if (cfg.threads < 1) throw UsageError("run: need threads >= 1");
  GroupEnumeration enumeration(cfg.n, cfg.p, group_cap);  // throws ResourceError over cap

  EmpiricalDistribution e;
  e.n = cfg.n;
  e.p = cfg.p;
  e.total = cfg.trials;
  e.counts.assign(enumeration.size(), 0);

  const int workers =
      static_cast<int>(std::min<long>(cfg.threads, std::max<long>(cfg.trials, 1)));
  if (workers <= 1) {
    run_block(cfg, enumeration, 0, cfg.trials, e.counts);
    return e;
  }

  std::vector<std::vector<long>> partial(
      static_cast<size_t>(workers), std::vector<long>(enumeration.size(), 0));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const long per = cfg.trials / workers;
  const long extra = cfg.trials % workers;
  long start = 0;
  for (int w = 0; w < workers; ++w) {
    const long len = per + (w < extra ? 1 : 0);
    pool.emplace_back(run_block, std::cref(cfg), std::cref(enumeration), start, start + len,
                      std::ref(partial[static_cast<size_t>(w)]));
    start += len;
  }
  for (auto& th : pool) th.join();
  for (const auto& part : partial)
    for (size_t idx = 0; idx < part.size(); ++idx) e.counts[idx] += part[idx];
  return e;
}

BigRat empirical_tv(const EmpiricalDistribution& e, const std::vector<BigRat>& reference) {
  if (reference.size() != e.counts.size())
    throw UsageError("empirical_tv: reference size mismatch");
  BigRat sum(0);
  for (size_t idx = 0; idx < e.counts.size(); ++idx) {
    BigRat d = make_rat(e.counts[idx], e.total) - reference[idx];
    if (d < 0) d = -d;
    sum += d;
  }
  return sum / 2;
}

BigRat empirical_tv_uniform(const EmpiricalDistribution& e) {
  const BigRat u = make_rat(1, group_order(e.n, e.p));
  BigRat sum(0);
  for (long c : e.counts) {
    BigRat d = make_rat(c, e.total) - u;
    if (d < 0) d = -d;
    sum += d;
  }
  return sum / 2;
}

BigRat empirical_tv_against(const EmpiricalDistribution& e, const AlgebraElement& law) {
  if (law.n() != e.n || law.p() != e.p)
    throw UsageError("empirical_tv_against: group mismatch");
  if (law.total_mass() != BigRat(1))
    throw UsageError("empirical_tv_against: reference mass is not 1");
  GroupEnumeration enumeration(e.n, e.p);
  std::vector<BigRat> reference(e.counts.size(), BigRat(0));
  for (const auto& [g, c] : law.terms()) reference[enumeration.index_of(g)] = c;
  return empirical_tv(e, reference);
}

SimulationReport simulate_report(const ChainConfig& cfg, std::uint64_t group_cap) {
  SimulationReport rep;
  rep.cfg = cfg;
  rep.dist = run(cfg, group_cap);
  rep.empirical = empirical_tv_uniform(rep.dist);
  rep.exact = tv_exact(cfg.n, cfg.p, cfg.k);
  BigRat d = rep.empirical - rep.exact;
  if (d < 0) d = -d;
  rep.abs_error = d.get_d();
  return rep;
}

void write_simulation_csv(std::ostream& os, const SimulationReport& rep, int decimals) {
  os << "k,trials,seed,empirical_tv,exact_tv,abs_error\n";
  os << rep.cfg.k << ',' << rep.cfg.trials << ',' << rep.cfg.seed << ','
     << rat_to_decimal(rep.empirical, decimals) << ',' << rat_to_decimal(rep.exact, decimals)
     << ',' << double_to_decimal(rep.abs_error, decimals) << '\n';
}

void write_histogram_csv(std::ostream& os, const EmpiricalDistribution& e) {
  GroupEnumeration enumeration(e.n, e.p);
  os << "word,count\n";
  for (std::uint64_t idx = 0; idx < enumeration.size(); ++idx)
    os << format_word(enumeration.element(idx)) << ',' << e.counts[idx] << '\n';
}

}  // namespace t2r
