#include <doctest.h>

#include "t2r/verify.hpp"

using namespace t2r;

TEST_CASE("the default battery is green") {
  VerifyOptions opts;
  const std::vector<CheckResult> results = verify_all(opts);
  CHECK(results.size() == 22);
  for (const CheckResult& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
  CHECK(all_passed(results));
}

TEST_CASE("section runners partition the battery") {
  VerifyOptions opts;
  opts.n_max = 2;
  CHECK(verify_algebra(opts).size() == 10);
  CHECK(verify_spectral(opts).size() == 6);
  CHECK(verify_mixing(opts).size() == 6);
}

TEST_CASE("a corrupted table is caught by exactly the check that reads it") {
  VerifyOptions opts;
  opts.stirling2_hook = [](long k, long a) {
    BigInt v = stirling2(k, a);
    if (k == 3 && a == 2) v += 1;
    return v;
  };
  const std::vector<CheckResult> results = verify_algebra(opts);
  CHECK(!all_passed(results));
  for (const CheckResult& r : results) {
    INFO(r.name, ": ", r.detail);
    if (r.name == "b1-power-stirling-expansion")
      CHECK(!r.pass);
    else
      CHECK(r.pass);
  }
}

TEST_CASE("empty and capped ranges pass vacuously") {
  VerifyOptions opts;
  opts.n_max = 0;
  CHECK(all_passed(verify_all(opts)));

  VerifyOptions tight;
  tight.n_max = 4;
  tight.p_max = 3;
  tight.group_cap = 50;  // only the smallest groups survive the filter
  CHECK(all_passed(verify_all(tight)));
}
