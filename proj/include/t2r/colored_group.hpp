#pragma once

// The colored permutation group G_{n,p} = C_p wr S_n.
//
// An element is stored in word form: position j (1-based) holds the letter
// (color, value) = (s_j, sigma(j)), i.e. the pair view (s, sigma) reads off
// componentwise.  Colors live in {0, ..., p-1}; values are a permutation of
// {1, ..., n}.  The group law follows the wreath convention
//   (t, tau)(s, sigma) = (sigma t + s, tau sigma),   (sigma t)_i = t_{sigma(i)},
// so `multiply(a, b)` applies b's recoloring/reshuffling to a on the right.
//
// ASCII notation for a word: space-separated tokens "v" (color 0) or "v~c",
// e.g. "4 1~1 2 3~2" for ((0,1,0,2), 4123) in G_{4,3}.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "t2r/numeric.hpp"

namespace t2r {

struct ColoredLetter {
  int color = 0;
  int value = 0;
  friend auto operator<=>(const ColoredLetter&, const ColoredLetter&) = default;
};

class ColoredPermutation {
 public:
  // Identity of G_{n,p}.
  ColoredPermutation(int n, int p);
  // From explicit word; validates the permutation/color constraints.
  ColoredPermutation(int n, int p, std::vector<ColoredLetter> word);

  static ColoredPermutation identity(int n, int p) { return ColoredPermutation(n, p); }

  int n() const { return n_; }
  int p() const { return p_; }
  const std::vector<ColoredLetter>& word() const { return word_; }

  // 1-based math-facing accessors: value(i) = sigma(i), color(i) = s_i.
  int value(int i) const { return word_[static_cast<size_t>(i) - 1].value; }
  int color(int i) const { return word_[static_cast<size_t>(i) - 1].color; }

  std::vector<int> perm() const;    // one-line sigma
  std::vector<int> colors() const;  // s vector

  bool is_identity() const;

  // Canonical order: lexicographic on (value sequence, then color sequence).
  friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b);
  friend bool operator<(const ColoredPermutation& a, const ColoredPermutation& b);

 private:
  int n_, p_;
  std::vector<ColoredLetter> word_;
};

ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b);
ColoredPermutation inverse(const ColoredPermutation& g);

// 1-based positions i with s_i = 0 and sigma(i) = i, ascending.
std::vector<int> fixed_points(const ColoredPermutation& g);

// Number of elements of G_{n,p} with no fixed point:
//   D_{n,p} = p^n n! sum_{k=0}^{n} (-1)^k / (p^k k!).
BigInt derangement_count(int n, int p);

// Enumeration of G_{n,p} in canonical order.  index = lex rank of the value
// sequence (Lehmer) * p^n + the color sequence read as a base-p numeral
// (position 1 most significant).  Construction fails if p^n n! exceeds `cap`.
class GroupEnumeration {
 public:
  GroupEnumeration(int n, int p, std::uint64_t cap = 1000000);

  int n() const { return n_; }
  int p() const { return p_; }
  std::uint64_t size() const { return size_; }

  ColoredPermutation element(std::uint64_t index) const;
  std::uint64_t index_of(const ColoredPermutation& g) const;

  void for_each(const std::function<void(std::uint64_t, const ColoredPermutation&)>& fn) const;

 private:
  int n_, p_;
  std::uint64_t size_;
  std::uint64_t color_radix_;  // p^n
};

// ASCII notation round-trip.  parse infers n from the token count.
std::string format_word(const ColoredPermutation& g);
ColoredPermutation parse_word(const std::string& text, int p);

// Overbar rendering for p <= 3 (combining macron / double overline);
// falls back to format_word otherwise.
std::string format_word_pretty(const ColoredPermutation& g);

}  // namespace t2r
