#include "t2r/shuffle_algebra.hpp"

#include <algorithm>

namespace t2r {

void AlgebraElement::add(const ColoredPermutation& g, const BigRat& c) {
  if (g.n() != n_ || g.p() != p_)
    throw UsageError("AlgebraElement::add: element from a different group");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n_ != n_ || o.p_ != p_) throw UsageError("AlgebraElement: mixed groups in +=");
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.n_ != n_ || o.p_ != p_) throw UsageError("AlgebraElement: mixed groups in -=");
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::scale(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

BigRat AlgebraElement::l1_norm() const {
  BigRat s(0);
  for (const auto& [g, c] : terms_) s += abs(c);
  return s;
}

BigRat AlgebraElement::total_mass() const {
  BigRat s(0);
  for (const auto& [g, c] : terms_) s += c;
  return s;
}

std::vector<std::vector<ColoredLetter>> shuffle_product(
    const std::vector<ColoredLetter>& u, const std::vector<ColoredLetter>& v) {
  {
    std::vector<int> vals;
    for (const auto& l : u) vals.push_back(l.value);
    for (const auto& l : v) vals.push_back(l.value);
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
      throw UsageError("shuffle_product: overlapping value sets");
  }
  const size_t a = u.size(), m = a + v.size();
  std::vector<std::vector<ColoredLetter>> out;
  if (a == 0) return {v};
  if (v.empty()) return {u};

  // Lexicographically enumerate the a-subsets of positions receiving u.
  std::vector<size_t> pos(a);
  for (size_t i = 0; i < a; ++i) pos[i] = i;
  while (true) {
    std::vector<ColoredLetter> w(m);
    size_t ui = 0, vi = 0;
    for (size_t i = 0; i < m; ++i) {
      if (ui < a && pos[ui] == i)
        w[i] = u[ui++];
      else
        w[i] = v[vi++];
    }
    out.push_back(std::move(w));
    // next combination
    size_t i = a;
    while (i > 0 && pos[i - 1] == m - a + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (size_t j = i; j < a; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

BigInt level_size(int a, int n, int p) {
  if (a < 0 || a > n) throw UsageError("level_size: need 0 <= a <= n");
  if (p < 1) throw UsageError("level_size: p must be >= 1");
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(a)) *
         pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(a)) *
         factorial(static_cast<unsigned long>(a));
}

AlgebraElement build_B(int a, int n, int p) {
  if (a < 0 || a > n) throw UsageError("build_B: need 0 <= a <= n");
  AlgebraElement out(n, p);
  if (a == 0) return AlgebraElement::unit(n, p);
  const BigInt expected = level_size(a, n, p);
  if (expected > 1000000)
    throw ResourceError("build_B: level size " + expected.get_str() + " exceeds cap");

  std::vector<ColoredLetter> tail;
  for (int v = a + 1; v <= n; ++v) tail.push_back({0, v});

  GroupEnumeration head(a, p);
  head.for_each([&](std::uint64_t, const ColoredPermutation& alpha) {
    for (auto& w : shuffle_product(alpha.word(), tail))
      out.add(ColoredPermutation(n, p, std::move(w)), BigRat(1));
  });

  if (BigInt(static_cast<unsigned long>(out.support_size())) != expected)
    throw InternalError("build_B: support size mismatch at a=" + std::to_string(a));
  return out;
}

AlgebraElement head_group(int a, ColoredLetter t, int n, int p) {
  if (a < 1 || a > n) throw UsageError("head_group: need 1 <= a <= n");
  const bool colored_head = t.value >= 1 && t.value <= a && t.color >= 0 && t.color < p;
  const bool tail_head = t.value == a + 1 && t.color == 0 && a < n;
  if (!colored_head && !tail_head)
    throw UsageError("head_group: head letter must be a colored value in [1,a] or uncolored a+1");
  AlgebraElement out(n, p);
  const AlgebraElement B = build_B(a, n, p);
  for (const auto& [g, c] : B.terms())
    if (g.word().front() == t) out.add(g, c);
  return out;
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.n() != y.n() || x.p() != y.p()) throw UsageError("convolve: mixed groups");
  AlgebraElement out(x.n(), x.p());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) out.add(multiply(u, v), cu * cv);
  return out;
}

AlgebraElement idempotent_e(int i, int n, int p) {
  if (i < 0 || i > n) throw UsageError("idempotent_e: need 0 <= i <= n");
  AlgebraElement out(n, p);
  for (int a = i; a <= n; ++a) {
    BigRat c = make_rat(1, factorial(static_cast<unsigned long>(i)) *
                               pow_int(static_cast<unsigned long>(p),
                                       static_cast<unsigned long>(a)) *
                               factorial(static_cast<unsigned long>(a - i)));
    if ((a - i) % 2) c = -c;
    AlgebraElement Ba = build_B(a, n, p);
    out += Ba.scale(c);
  }
  return out;
}

AlgebraElement b1_power(long k, int n, int p, const Stirling2Fn& hook) {
  if (k < 0) throw UsageError("b1_power: k must be >= 0");
  if (n < 1) throw UsageError("b1_power: need n >= 1");
  AlgebraElement out(n, p);
  const long amax = std::min<long>(n, k);
  for (long a = 0; a <= amax; ++a) {
    const BigInt s = hook ? hook(k, a) : stirling2(k, a);
    if (s == 0) continue;
    const BigInt c = pow_int(static_cast<unsigned long>(p),
                             static_cast<unsigned long>(k - a)) *
                     s;
    AlgebraElement Ba = build_B(static_cast<int>(a), n, p);
    out += Ba.scale(BigRat(c));
  }
  return out;
}

AlgebraElement Ba_by_falling_product(int a, int n, int p) {
  if (a < 0 || a > n) throw UsageError("Ba_by_falling_product: need 0 <= a <= n");
  if (a == 0) return AlgebraElement::unit(n, p);
  const AlgebraElement B1 = build_B(1, n, p);
  AlgebraElement acc = B1;
  for (int j = 1; j < a; ++j) {
    AlgebraElement factor = B1;
    AlgebraElement shift = AlgebraElement::unit(n, p);
    shift.scale(BigRat(-static_cast<long>(j) * p));
    factor += shift;
    acc = convolve(acc, factor);
  }
  return acc;
}

AlgebraElement Ba_by_signed_stirling(int a, int n, int p) {
  if (a < 0 || a > n) throw UsageError("Ba_by_signed_stirling: need 0 <= a <= n");
  AlgebraElement out(n, p);
  for (int i = 0; i <= a; ++i) {
    const BigInt s1 = stirling1(a, i);
    if (s1 == 0) continue;
    BigRat c(pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(a - i)) * s1);
    if ((a - i) % 2) c = -c;
    AlgebraElement pw = b1_power(i, n, p);
    out += pw.scale(c);
  }
  return out;
}

AlgebraElement Ba_power(int a, long k, int n, int p) {
  if (a < 0 || a > n) throw UsageError("Ba_power: need 0 <= a <= n");
  if (k < 0) throw UsageError("Ba_power: k must be >= 0");
  if (k == 0 || a == 0) return AlgebraElement::unit(n, p);
  AlgebraElement out(n, p);
  for (int b = a; b <= n; ++b) {
    if (static_cast<long>(b) > static_cast<long>(a) * k) break;
    const BigInt S = generalized_stirling(a, k, b);
    if (S == 0) continue;
    const BigInt c = pow_int(static_cast<unsigned long>(p),
                             static_cast<unsigned long>(static_cast<long>(a) * k - b)) *
                     S;
    AlgebraElement Bb = build_B(b, n, p);
    out += Bb.scale(BigRat(c));
  }
  return out;
}

AlgebraElement Ba_power_by_idempotents(int a, long k, int n, int p) {
  if (a < 0 || a > n) throw UsageError("Ba_power_by_idempotents: need 0 <= a <= n");
  if (k < 1) throw UsageError("Ba_power_by_idempotents: k must be >= 1");
  AlgebraElement out(n, p);
  const BigInt scale = pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(a)) *
                       factorial(static_cast<unsigned long>(a));
  for (int i = a; i <= n; ++i) {
    const BigInt lambda = scale * binomial(static_cast<unsigned long>(i),
                                           static_cast<unsigned long>(a));
    AlgebraElement e = idempotent_e(i, n, p);
    out += e.scale(BigRat(pow_int(lambda, static_cast<unsigned long>(k))));
  }
  return out;
}

}  // namespace t2r
