#pragma once

// Monte Carlo simulation of the physical shuffle: take the top card, add a
// uniform color shift j in {0,...,p-1}, reinsert at a uniform position i in
// {1,...,n}.  One such move equals right multiplication by the corresponding
// generator, so k steps from the identity sample the distribution whose
// exact law the mixing module computes.
//
// Reproducibility contract: each trajectory owns an RNG substream derived
// from (seed, trajectory index) alone, so the result is byte-identical for
// any thread count.  The generator is named by kRngAlgorithm and recorded in
// run manifests.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "t2r/colored_group.hpp"
#include "t2r/numeric.hpp"

namespace t2r {

class AlgebraElement;

struct ChainConfig {
  int n = 3;
  int p = 2;
  long k = 0;
  long trials = 1;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct EmpiricalDistribution {
  int n = 0;
  int p = 0;
  long total = 0;
  std::vector<long> counts;  // indexed by canonical enumeration order
};

// "splitmix64/mulshift-v1": splitmix64 stream with 128-bit multiply-shift
// range reduction; substream state is the splitmix64 finalizer applied to
// seed + (trajectory+1) * 0x9e3779b97f4a7c15.
extern const char kRngAlgorithm[];

class Splitmix64 {
 public:
  explicit Splitmix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  // Uniform on {0, ..., bound-1} via (next() * bound) >> 64.
  std::uint64_t bounded(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

Splitmix64 trajectory_rng(std::uint64_t seed, long trajectory);

// The generator S_{i,j}: word (0,2)...(0,i) (j,1) (0,i+1)...(0,n).
ColoredPermutation move_element(int n, int p, int j, long i);

// One physical move applied to `state`; equals multiply(state, move_element).
ColoredPermutation step(const ColoredPermutation& state, int j, long i);

// `trials` trajectories of k steps from the identity.  Requires the group to
// fit under `group_cap` so states can be counted exactly.
EmpiricalDistribution run(const ChainConfig& cfg, std::uint64_t group_cap = 1000000);

// 1/2 sum |count/total - q| against a reference law on the same group.
BigRat empirical_tv(const EmpiricalDistribution& e, const std::vector<BigRat>& reference);
BigRat empirical_tv_uniform(const EmpiricalDistribution& e);
// Reference from an algebra element with total mass 1 (e.g. (1/(np))^k B_1^k).
BigRat empirical_tv_against(const EmpiricalDistribution& e, const AlgebraElement& law);

struct SimulationReport {
  ChainConfig cfg;
  EmpiricalDistribution dist;
  BigRat empirical;  // TV to uniform
  BigRat exact;      // exact TV of the k-step law to uniform
  double abs_error = 0.0;
};

SimulationReport simulate_report(const ChainConfig& cfg, std::uint64_t group_cap = 1000000);

// Frozen CSV schema: k,trials,seed,empirical_tv,exact_tv,abs_error
void write_simulation_csv(std::ostream& os, const SimulationReport& rep, int decimals = 12);
// Histogram dump: word,count over the whole group in canonical order.
void write_histogram_csv(std::ostream& os, const EmpiricalDistribution& e);

}  // namespace t2r
