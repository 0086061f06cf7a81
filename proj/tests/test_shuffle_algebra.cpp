#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "t2r/shuffle_algebra.hpp"
#include "t2r/simulate.hpp"  // Splitmix64

using namespace t2r;

namespace {

// Independent recursive definition: u shuffle v = head(u)(tail(u) shuffle v)
// + head(v)(u shuffle tail(v)).
void shuffle_recursive(const std::vector<ColoredLetter>& u, const std::vector<ColoredLetter>& v,
                       std::vector<ColoredLetter>& prefix,
                       std::vector<std::vector<ColoredLetter>>& out) {
  if (u.empty() && v.empty()) {
    out.push_back(prefix);
    return;
  }
  if (!u.empty()) {
    prefix.push_back(u.front());
    std::vector<ColoredLetter> tail(u.begin() + 1, u.end());
    shuffle_recursive(tail, v, prefix, out);
    prefix.pop_back();
  }
  if (!v.empty()) {
    prefix.push_back(v.front());
    std::vector<ColoredLetter> tail(v.begin() + 1, v.end());
    shuffle_recursive(u, tail, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<ColoredLetter>> shuffle_oracle(const std::vector<ColoredLetter>& u,
                                                       const std::vector<ColoredLetter>& v) {
  std::vector<std::vector<ColoredLetter>> out;
  std::vector<ColoredLetter> prefix;
  shuffle_recursive(u, v, prefix, out);
  return out;
}

AlgebraElement delta(const ColoredPermutation& g) {
  AlgebraElement x(g.n(), g.p());
  x.add(g, BigRat(1));
  return x;
}

AlgebraElement conv_power(const AlgebraElement& x, long k) {
  AlgebraElement acc = AlgebraElement::unit(x.n(), x.p());
  for (long i = 0; i < k; ++i) acc = convolve(acc, x);
  return acc;
}

}  // namespace

TEST_CASE("shuffle product matches the recursive oracle") {
  // all letter splits of sizes (1..3, 0..4) over distinct values with colors
  Splitmix64 rng(5);
  for (int su = 0; su <= 3; ++su)
    for (int sv = 0; sv <= 4; ++sv) {
      // deterministic colored words on values 1..su and su+1..su+sv
      std::vector<ColoredLetter> u, v;
      for (int i = 1; i <= su; ++i)
        u.push_back({static_cast<int>(rng.bounded(3)), i});
      for (int i = su + 1; i <= su + sv; ++i)
        v.push_back({static_cast<int>(rng.bounded(3)), i});

      auto got = shuffle_product(u, v);
      auto want = shuffle_oracle(u, v);
      CHECK(got.size() == want.size());
      CHECK(got.size() ==
            static_cast<size_t>(
                binomial(static_cast<unsigned long>(su + sv), static_cast<unsigned long>(su))
                    .get_ui()));
      std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(), [](const ColoredLetter& x, const ColoredLetter& y) {
              return x.value != y.value ? x.value < y.value : x.color < y.color;
            });
      });
      auto got_sorted = got;
      std::sort(got_sorted.begin(), got_sorted.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(), [](const ColoredLetter& x, const ColoredLetter& y) {
              return x.value != y.value ? x.value < y.value : x.color < y.color;
            });
      });
      CHECK(got_sorted == want);
      // each interleaving appears exactly once
      std::set<std::vector<ColoredLetter>> dedup(got.begin(), got.end());
      CHECK(dedup.size() == got.size());
    }
  CHECK_THROWS_AS(shuffle_product({{0, 1}}, {{0, 1}}), UsageError);
}

TEST_CASE("the worked B_1 example") {
  // 1 sh 23 + 1bar sh 23 = 123 + 213 + 231 + 1bar23 + 2 1bar 3 + 23 1bar
  const AlgebraElement B1 = build_B(1, 3, 2);
  CHECK(B1.support_size() == 6);
  for (const char* w :
       {"1 2 3", "2 1 3", "2 3 1", "1~1 2 3", "2 1~1 3", "2 3 1~1"})
    CHECK(B1.coeff(parse_word(w, 2)) == 1);
}

TEST_CASE("level sums: sizes, masses, boundaries") {
  CHECK(build_B(0, 3, 2) == AlgebraElement::unit(3, 2));
  for (int a = 0; a <= 4; ++a) {
    const AlgebraElement B = build_B(a, 4, 3);
    CHECK(BigInt(static_cast<long>(B.support_size())) == level_size(a, 4, 3));
    CHECK(B.total_mass() == BigRat(level_size(a, 4, 3)));
  }
  // B_n sums the whole group with unit coefficients
  const AlgebraElement Bn = build_B(3, 3, 2);
  CHECK(Bn.support_size() == 48);
  GroupEnumeration e(3, 2);
  e.for_each([&](std::uint64_t, const ColoredPermutation& g) { CHECK(Bn.coeff(g) == 1); });
  CHECK_THROWS_AS(build_B(5, 4, 2), UsageError);
  CHECK_THROWS_AS(build_B(-1, 4, 2), UsageError);
}

TEST_CASE("support of each level nests into the next") {
  // |B_a - B_{a-1}| = |B_a| - |B_{a-1}| exactly, because B_{a-1}'s words all
  // reappear in B_a with coefficient 1
  for (int n = 1; n <= 4; ++n)
    for (int p = 1; p <= 3; ++p) {
      if (group_order(n, p) > 2000) continue;
      for (int a = 1; a <= n; ++a) {
        const AlgebraElement diff = build_B(a, n, p) - build_B(a - 1, n, p);
        CHECK(diff.l1_norm() == BigRat(level_size(a, n, p) - level_size(a - 1, n, p)));
      }
    }
  CHECK(AlgebraElement::zero(3, 2).l1_norm() == 0);
}

TEST_CASE("convolution") {
  // bilinear extension of multiply: delta_g * delta_h = delta_{gh}
  GroupEnumeration e(2, 2);
  e.for_each([&](std::uint64_t, const ColoredPermutation& g) {
    e.for_each([&](std::uint64_t, const ColoredPermutation& h) {
      CHECK(convolve(delta(g), delta(h)) == delta(multiply(g, h)));
    });
  });

  const AlgebraElement B1 = build_B(1, 3, 2);
  AlgebraElement want = B1;
  want.scale(BigRat(2));
  want += build_B(2, 3, 2);
  CHECK(convolve(B1, B1) == want);  // p*1*B_1 + B_2 at p=2

  CHECK(convolve(B1, AlgebraElement::unit(3, 2)) == B1);
  CHECK_THROWS_AS(convolve(B1, AlgebraElement::unit(4, 2)), UsageError);
}

TEST_CASE("level sums commute") {
  for (auto [n, p] : {std::pair{3, 2}, std::pair{2, 3}})
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        CHECK(convolve(build_B(a, n, p), build_B(b, n, p)) ==
              convolve(build_B(b, n, p), build_B(a, n, p)));
}

TEST_CASE("level recursion against the product") {
  for (auto [n, p] : {std::pair{4, 2}, std::pair{3, 3}}) {
    const AlgebraElement B1 = build_B(1, n, p);
    for (int a = 1; a < n; ++a) {
      AlgebraElement want = build_B(a, n, p);
      want.scale(BigRat(static_cast<long>(p) * a));
      want += build_B(a + 1, n, p);
      CHECK(convolve(build_B(a, n, p), B1) == want);
    }
    AlgebraElement top = build_B(n, n, p);
    top.scale(BigRat(static_cast<long>(p) * n));
    CHECK(convolve(build_B(n, n, p), B1) == top);
  }
}

TEST_CASE("idempotents") {
  const int n = 3, p = 2;
  std::vector<AlgebraElement> es;
  for (int i = 0; i <= n; ++i) es.push_back(idempotent_e(i, n, p));

  AlgebraElement sum = AlgebraElement::zero(n, p);
  for (const auto& e : es) sum += e;
  CHECK(sum == AlgebraElement::unit(n, p));

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      CHECK(convolve(es[static_cast<size_t>(i)], es[static_cast<size_t>(j)]) ==
            (i == j ? es[static_cast<size_t>(i)] : AlgebraElement::zero(n, p)));

  // e_n is the uniform distribution
  AlgebraElement uniform = build_B(n, n, p);
  uniform.scale(make_rat(1, group_order(n, p)));
  CHECK(es[static_cast<size_t>(n)] == uniform);
}

TEST_CASE("head groups") {
  // C_2(2bar) for p=2, n=4
  const AlgebraElement c = head_group(2, {1, 2}, 4, 2);
  CHECK(c.support_size() == 6);
  for (const char* w : {"2~1 1 3 4", "2~1 3 1 4", "2~1 3 4 1", "2~1 1~1 3 4", "2~1 3 1~1 4",
                        "2~1 3 4 1~1"})
    CHECK(c.coeff(parse_word(w, 2)) == 1);

  // partition of B_2 by heads
  AlgebraElement sum = AlgebraElement::zero(4, 2);
  for (int v = 1; v <= 2; ++v)
    for (int col = 0; col < 2; ++col) sum += head_group(2, {col, v}, 4, 2);
  sum += head_group(2, {0, 3}, 4, 2);
  CHECK(sum == build_B(2, 4, 2));

  // product collapse, k = 1, 2 at n=4, p=2
  const AlgebraElement B1 = build_B(1, 4, 2);
  for (int k = 1; k <= 2; ++k) {
    for (int v = 1; v <= k; ++v)
      for (int col = 0; col < 2; ++col)
        CHECK(convolve(head_group(k, {col, v}, 4, 2), B1) == build_B(k, 4, 2));
    CHECK(convolve(head_group(k, {0, k + 1}, 4, 2), B1) == build_B(k + 1, 4, 2));
  }

  CHECK_THROWS_AS(head_group(2, {0, 4}, 4, 2), UsageError);  // not a valid head
  CHECK_THROWS_AS(head_group(2, {2, 1}, 4, 2), UsageError);  // color out of range
}

TEST_CASE("powers of B_1 via the expansion") {
  const int n = 3, p = 2;
  const AlgebraElement B1 = build_B(1, n, p);
  for (long k = 0; k <= 6; ++k)
    CHECK(b1_power(k, n, p) == conv_power(B1, k));
  CHECK(b1_power(1, n, p) == B1);

  // spectral route: B_1^k = sum_i (p i)^k e_i (0^0 = 1 at k = 0)
  for (long k = 0; k <= 4; ++k) {
    AlgebraElement want = AlgebraElement::zero(n, p);
    for (int i = 0; i <= n; ++i) {
      BigRat lambda_k =
          k == 0 ? BigRat(1)
                 : BigRat(pow_int(BigInt(static_cast<long>(p) * i), static_cast<unsigned long>(k)));
      AlgebraElement e = idempotent_e(i, n, p);
      want += e.scale(lambda_k);
    }
    CHECK(b1_power(k, n, p) == want);
  }
}

TEST_CASE("the stirling hook is load-bearing") {
  const Stirling2Fn honest = [](long k, long a) { return stirling2(k, a); };
  CHECK(b1_power(4, 3, 2, honest) == b1_power(4, 3, 2));
  const Stirling2Fn corrupt = [](long k, long a) {
    BigInt v = stirling2(k, a);
    if (k == 4 && a == 2) v += 1;
    return v;
  };
  CHECK(b1_power(4, 3, 2, corrupt) != b1_power(4, 3, 2));
}

TEST_CASE("reconstructions of the levels from B_1") {
  for (int a = 1; a <= 3; ++a)
    CHECK(Ba_by_falling_product(a, 3, 2) == build_B(a, 3, 2));
  for (int a = 1; a <= 4; ++a)
    CHECK(Ba_by_signed_stirling(a, 4, 2) == build_B(a, 4, 2));
}

TEST_CASE("powers of higher levels") {
  const AlgebraElement B2 = build_B(2, 3, 2);
  for (long k = 1; k <= 4; ++k)
    CHECK(Ba_power(2, k, 3, 2) == conv_power(B2, k));
  CHECK(Ba_power(2, 0, 3, 2) == AlgebraElement::unit(3, 2));
  CHECK(Ba_power(3, 1, 3, 2) == build_B(3, 3, 2));
  // a = 1 reduces to the B_1 expansion
  for (long k = 0; k <= 5; ++k)
    CHECK(Ba_power(1, k, 3, 2) == b1_power(k, 3, 2));
}

TEST_CASE("levels expand over the idempotent basis") {
  const int n = 3, p = 2;
  for (int a = 0; a <= n; ++a)
    CHECK(Ba_power_by_idempotents(a, 1, n, p) == build_B(a, n, p));
  CHECK(Ba_power_by_idempotents(2, 3, n, p) == conv_power(build_B(2, n, p), 3));
  CHECK_THROWS_AS(Ba_power_by_idempotents(2, 0, n, p), UsageError);
}

TEST_CASE("the one-step law is a probability distribution") {
  AlgebraElement step = build_B(1, 4, 3);
  step.scale(make_rat(1, BigInt(12)));
  CHECK(step.total_mass() == 1);
  for (const auto& [g, c] : step.terms()) CHECK(c > 0);
}
