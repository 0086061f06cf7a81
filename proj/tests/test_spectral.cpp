#include <doctest.h>

#include <vector>

#include "t2r/spectral.hpp"

using namespace t2r;

namespace {

AlgebraElement delta(const ColoredPermutation& g) {
  AlgebraElement x(g.n(), g.p());
  x.add(g, BigRat(1));
  return x;
}

bool same_matrix(const RegularMatrix& A, const RegularMatrix& B) {
  if (A.order() != B.order()) return false;
  for (long r = 0; r < A.order(); ++r)
    for (long c = 0; c < A.order(); ++c)
      if (A.at(r, c) != B.at(r, c)) return false;
  return true;
}

}  // namespace

TEST_CASE("left regular representation is a homomorphism") {
  // identity maps to the identity matrix
  const RegularMatrix I = left_regular_matrix(AlgebraElement::unit(2, 2));
  for (long r = 0; r < I.order(); ++r)
    for (long c = 0; c < I.order(); ++c)
      CHECK(I.at(r, c) == (r == c ? 1 : 0));

  GroupEnumeration e(2, 2);
  e.for_each([&](std::uint64_t, const ColoredPermutation& g) {
    const RegularMatrix Lg = left_regular_matrix(delta(g));
    e.for_each([&](std::uint64_t, const ColoredPermutation& h) {
      const RegularMatrix Lh = left_regular_matrix(delta(h));
      CHECK(same_matrix(multiply(Lg, Lh), left_regular_matrix(delta(multiply(g, h)))));
    });
  });
}

TEST_CASE("trace shortcut agrees with the dense trace") {
  for (int a : {1, 2}) {
    const AlgebraElement B = build_B(a, 3, 2);
    CHECK(trace_left_regular(B) == left_regular_matrix(B).trace());
  }
  // |G| * identity coefficient: B_a always contains the identity word once
  CHECK(trace_left_regular(build_B(2, 4, 3)) == group_order(4, 3));
}

TEST_CASE("transition matrix of B_1 has constant line sums") {
  const RegularMatrix M = left_regular_matrix(build_B(1, 3, 2));
  for (long r = 0; r < M.order(); ++r) {
    CHECK(M.row_sum(r) == 6);
    CHECK(M.col_sum(r) == 6);
  }
}

TEST_CASE("characteristic polynomial on small knowns") {
  RegularMatrix one(1, 1, 1);
  one.at(0, 0) = BigRat(7);
  CHECK(char_poly(one) == std::vector<BigInt>{1, -7});

  RegularMatrix diag(2, 1, 1);
  diag.at(0, 0) = BigRat(2);
  diag.at(1, 1) = BigRat(3);
  CHECK(char_poly(diag) == std::vector<BigInt>{1, -5, 6});

  RegularMatrix swap2(2, 1, 1);
  swap2.at(0, 1) = BigRat(1);
  swap2.at(1, 0) = BigRat(1);
  CHECK(char_poly(swap2) == std::vector<BigInt>{1, 0, -1});

  RegularMatrix nil(2, 1, 1);
  nil.at(0, 1) = BigRat(1);
  CHECK(char_poly(nil) == std::vector<BigInt>{1, 0, 0});

  RegularMatrix frac(1, 1, 1);
  frac.at(0, 0) = make_rat(1, BigInt(2));
  CHECK_THROWS_AS(char_poly(frac), InternalError);

  RegularMatrix big(3, 1, 1);
  CHECK_THROWS_AS(char_poly(big, 2), ResourceError);
}

TEST_CASE("synthetic division") {
  BigInt rem;
  // (x-2)(x-3) / (x-2)
  CHECK(synthetic_divide({1, -5, 6}, BigInt(2), rem) == std::vector<BigInt>{1, -3});
  CHECK(rem == 0);
  CHECK(synthetic_divide({1, -5, 6}, BigInt(1), rem) == std::vector<BigInt>{1, -4});
  CHECK(rem == 2);
  CHECK_THROWS_AS(synthetic_divide({}, BigInt(0), rem), UsageError);
}

TEST_CASE("factoring against the candidate roots") {
  // (x-2)^2 x at p=2, n=1: candidates 0, 2
  // poly x^3 - 4x^2 + 4x
  CHECK(factor_against_candidates({1, -4, 4, 0}, 1, 2) == std::vector<BigInt>{1, 2});
  // x - 1 does not factor over {0, 2}
  CHECK_THROWS_AS(factor_against_candidates({1, -1}, 1, 2), InternalError);
  CHECK_THROWS_AS(factor_against_candidates({2, 0}, 1, 2), UsageError);  // not monic
}

TEST_CASE("the 48-element spectrum") {
  const RegularMatrix M = left_regular_matrix(build_B(1, 3, 2));
  const std::vector<BigInt> cp = char_poly(M);
  const std::vector<BigInt> mult{29, 15, 3, 1};
  CHECK(cp == expand_factored(mult, 2));
  CHECK(factor_against_candidates(cp, 3, 2) == mult);
  CHECK(factored_string(mult, 2) == "(x-6)(x-4)^3(x-2)^15x^29");
}

TEST_CASE("certificate route matches the dense route") {
  for (auto [n, p] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{2, 3}, std::pair{4, 1},
                      std::pair{3, 2}}) {
    const RegularMatrix M = left_regular_matrix(build_B(1, n, p));
    const std::vector<BigInt> dense = factor_against_candidates(char_poly(M), n, p);
    CHECK(certified_multiplicities(n, p) == dense);
  }
  CHECK_THROWS_AS(certified_multiplicities(8, 3, 2000), ResourceError);
}

TEST_CASE("the three report methods agree") {
  for (auto [n, p] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 1}}) {
    const SpectrumReport f = multiplicity_report(n, p, "formula");
    const SpectrumReport t = multiplicity_report(n, p, "trace");
    const SpectrumReport c = multiplicity_report(n, p, "charpoly");
    REQUIRE(f.eigenvalues.size() == static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < f.eigenvalues.size(); ++i) {
      CHECK(f.eigenvalues[i].value == t.eigenvalues[i].value);
      CHECK(f.eigenvalues[i].multiplicity == t.eigenvalues[i].multiplicity);
      CHECK(f.eigenvalues[i].multiplicity == c.eigenvalues[i].multiplicity);
    }
    CHECK(f.factored == c.factored);
    // total multiplicity and sum of eigenvalues both recover |G|
    BigInt total(0), weighted(0);
    for (const auto& ev : f.eigenvalues) {
      total += ev.multiplicity;
      weighted += ev.value * ev.multiplicity;
    }
    CHECK(total == group_order(n, p));
    CHECK(weighted == group_order(n, p));
  }
  CHECK_THROWS_AS(multiplicity_report(3, 2, "lucky-guess"), UsageError);
  CHECK_THROWS_AS(multiplicity_report(5, 2, "charpoly", 2000), ResourceError);
}

TEST_CASE("degenerate and vanishing cases") {
  const SpectrumReport zero = multiplicity_report(0, 2, "formula");
  REQUIRE(zero.eigenvalues.size() == 1);
  CHECK(zero.eigenvalues[0].multiplicity == 1);

  // colorless case: eigenvalue n-1 never appears (no element fixes exactly
  // n-1 points of an ordinary permutation)
  for (int n = 2; n <= 5; ++n) {
    const SpectrumReport rep = multiplicity_report(n, 1, "formula");
    bool found = false;
    for (const auto& ev : rep.eigenvalues)
      if (ev.i == n - 1) {
        found = true;
        CHECK(ev.multiplicity == 0);
      }
    CHECK(found);
  }
}

TEST_CASE("aggregated spectra of the higher levels") {
  const auto spec2 = ba_eigenvalues(2, 3, 2);
  REQUIRE(spec2.size() == 3);
  CHECK(spec2[0] == std::pair<BigInt, BigInt>{24, 1});
  CHECK(spec2[1] == std::pair<BigInt, BigInt>{8, 3});
  CHECK(spec2[2] == std::pair<BigInt, BigInt>{0, 44});

  const auto spec0 = ba_eigenvalues(0, 3, 2);
  REQUIRE(spec0.size() == 1);
  CHECK(spec0[0] == std::pair<BigInt, BigInt>{1, 48});

  // mass and trace: sum of multiplicities is |G|; the weighted sum is the
  // trace of L(B_a), which is |G| for every a
  for (int a = 0; a <= 3; ++a) {
    BigInt total(0), weighted(0);
    for (const auto& [v, m] : ba_eigenvalues(a, 3, 2)) {
      total += m;
      weighted += v * m;
    }
    CHECK(total == 48);
    CHECK(weighted == 48);
  }
}
