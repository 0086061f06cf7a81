#include "t2r/colored_group.hpp"

#include <algorithm>
#include <sstream>

namespace t2r {

namespace {

void check_params(int n, int p) {
  if (n < 0) throw UsageError("ColoredPermutation: n must be >= 0");
  if (p < 1) throw UsageError("ColoredPermutation: p must be >= 1");
}

}  // namespace

ColoredPermutation::ColoredPermutation(int n, int p) : n_(n), p_(p) {
  check_params(n, p);
  word_.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) word_.push_back({0, i});
}

ColoredPermutation::ColoredPermutation(int n, int p, std::vector<ColoredLetter> word)
    : n_(n), p_(p), word_(std::move(word)) {
  check_params(n, p);
  if (word_.size() != static_cast<size_t>(n))
    throw UsageError("ColoredPermutation: word length != n");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (const auto& l : word_) {
    if (l.value < 1 || l.value > n)
      throw UsageError("ColoredPermutation: value out of range [1,n]");
    if (seen[static_cast<size_t>(l.value)])
      throw UsageError("ColoredPermutation: duplicate value " + std::to_string(l.value));
    seen[static_cast<size_t>(l.value)] = 1;
    if (l.color < 0 || l.color >= p)
      throw UsageError("ColoredPermutation: color out of range [0,p)");
  }
}

std::vector<int> ColoredPermutation::perm() const {
  std::vector<int> v;
  v.reserve(word_.size());
  for (const auto& l : word_) v.push_back(l.value);
  return v;
}

std::vector<int> ColoredPermutation::colors() const {
  std::vector<int> v;
  v.reserve(word_.size());
  for (const auto& l : word_) v.push_back(l.color);
  return v;
}

bool ColoredPermutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (word_[static_cast<size_t>(i) - 1].color != 0 ||
        word_[static_cast<size_t>(i) - 1].value != i)
      return false;
  return true;
}

bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) {
  return a.n_ == b.n_ && a.p_ == b.p_ && a.word_ == b.word_;
}

bool operator<(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_)
    throw UsageError("ColoredPermutation: comparing elements of different groups");
  for (size_t i = 0; i < a.word_.size(); ++i) {
    if (a.word_[i].value != b.word_[i].value) return a.word_[i].value < b.word_[i].value;
  }
  for (size_t i = 0; i < a.word_.size(); ++i) {
    if (a.word_[i].color != b.word_[i].color) return a.word_[i].color < b.word_[i].color;
  }
  return false;
}

ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (a.n() != b.n() || a.p() != b.p())
    throw UsageError("multiply: elements of different groups");
  const int n = a.n(), p = a.p();
  std::vector<ColoredLetter> w;
  w.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int bv = b.value(j);
    w.push_back({(a.color(bv) + b.color(j)) % p, a.value(bv)});
  }
  return ColoredPermutation(n, p, std::move(w));
}

ColoredPermutation inverse(const ColoredPermutation& g) {
  const int n = g.n(), p = g.p();
  std::vector<int> inv_perm(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) inv_perm[static_cast<size_t>(g.value(i))] = i;
  std::vector<ColoredLetter> w;
  w.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int v = inv_perm[static_cast<size_t>(j)];
    w.push_back({(p - g.color(v)) % p, v});
  }
  return ColoredPermutation(n, p, std::move(w));
}

std::vector<int> fixed_points(const ColoredPermutation& g) {
  std::vector<int> fp;
  for (int i = 1; i <= g.n(); ++i)
    if (g.color(i) == 0 && g.value(i) == i) fp.push_back(i);
  return fp;
}

BigInt derangement_count(int n, int p) {
  check_params(n, p);
  BigRat sum(0);
  for (int k = 0; k <= n; ++k) {
    BigRat term = make_rat(1, pow_int(static_cast<unsigned long>(p),
                                      static_cast<unsigned long>(k)) *
                                  factorial(static_cast<unsigned long>(k)));
    if (k % 2) term = -term;
    sum += term;
  }
  return to_integer(BigRat(group_order(n, p)) * sum, "derangement_count");
}

GroupEnumeration::GroupEnumeration(int n, int p, std::uint64_t cap) : n_(n), p_(p) {
  check_params(n, p);
  BigInt order = group_order(n, p);
  if (order > BigInt(static_cast<unsigned long>(cap)))
    throw ResourceError("GroupEnumeration: p^n n! = " + order.get_str() +
                        " exceeds cap " + std::to_string(cap));
  size_ = order.get_ui();
  BigInt radix = pow_int(static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  color_radix_ = radix.get_ui();
}

ColoredPermutation GroupEnumeration::element(std::uint64_t index) const {
  if (index >= size_) throw UsageError("GroupEnumeration: index out of range");
  std::uint64_t perm_rank = index / color_radix_;
  std::uint64_t color_rank = index % color_radix_;

  // Lehmer unranking into the values, lexicographic order.
  std::vector<int> pool;
  pool.reserve(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) pool.push_back(i);
  std::vector<std::uint64_t> fact(static_cast<size_t>(n_) + 1, 1);
  for (int i = 1; i <= n_; ++i)
    fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i) - 1] * static_cast<std::uint64_t>(i);

  std::vector<ColoredLetter> w(static_cast<size_t>(n_));
  for (int pos = 0; pos < n_; ++pos) {
    const std::uint64_t f = fact[static_cast<size_t>(n_ - 1 - pos)];
    const auto digit = static_cast<size_t>(perm_rank / f);
    perm_rank %= f;
    w[static_cast<size_t>(pos)].value = pool[digit];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  for (int pos = n_ - 1; pos >= 0; --pos) {
    w[static_cast<size_t>(pos)].color = static_cast<int>(color_rank % static_cast<std::uint64_t>(p_));
    color_rank /= static_cast<std::uint64_t>(p_);
  }
  return ColoredPermutation(n_, p_, std::move(w));
}

std::uint64_t GroupEnumeration::index_of(const ColoredPermutation& g) const {
  if (g.n() != n_ || g.p() != p_)
    throw UsageError("GroupEnumeration: element from a different group");
  std::uint64_t perm_rank = 0;
  std::uint64_t f = 1;
  // Lehmer rank, right to left.
  for (int i = n_ - 1; i >= 0; --i) {
    const int vi = g.value(i + 1);
    int smaller_after = 0;
    for (int j = i + 1; j < n_; ++j)
      if (g.value(j + 1) < vi) ++smaller_after;
    perm_rank += static_cast<std::uint64_t>(smaller_after) * f;
    f *= static_cast<std::uint64_t>(n_ - i);
  }
  std::uint64_t color_rank = 0;
  for (int i = 1; i <= n_; ++i)
    color_rank = color_rank * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(g.color(i));
  return perm_rank * color_radix_ + color_rank;
}

void GroupEnumeration::for_each(
    const std::function<void(std::uint64_t, const ColoredPermutation&)>& fn) const {
  for (std::uint64_t i = 0; i < size_; ++i) {
    ColoredPermutation g = element(i);
    fn(i, g);
  }
}

std::string format_word(const ColoredPermutation& g) {
  std::ostringstream os;
  for (int i = 1; i <= g.n(); ++i) {
    if (i > 1) os << ' ';
    os << g.value(i);
    if (g.color(i) != 0) os << '~' << g.color(i);
  }
  return os.str();
}

ColoredPermutation parse_word(const std::string& text, int p) {
  if (p < 1) throw UsageError("parse_word: p must be >= 1");
  std::istringstream is(text);
  std::vector<ColoredLetter> w;
  std::string tok;
  while (is >> tok) {
    const auto tilde = tok.find('~');
    std::string vs = tok.substr(0, tilde);
    std::string cs = tilde == std::string::npos ? std::string("0") : tok.substr(tilde + 1);
    if (vs.empty() || cs.empty() ||
        vs.find_first_not_of("0123456789") != std::string::npos ||
        cs.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("parse_word: malformed token '" + tok + "'");
    ColoredLetter l;
    try {
      l.value = std::stoi(vs);
      l.color = std::stoi(cs);
    } catch (const std::exception&) {
      throw UsageError("parse_word: token out of range '" + tok + "'");
    }
    w.push_back(l);
  }
  const int n = static_cast<int>(w.size());
  return ColoredPermutation(n, p, std::move(w));  // ctor validates the rest
}

std::string format_word_pretty(const ColoredPermutation& g) {
  if (g.p() > 3) return format_word(g);
  static const char* kMacron = "\xcc\x84";          // U+0304 combining macron
  static const char* kDoubleOverline = "\xcc\xbf";  // U+033F
  std::ostringstream os;
  for (int i = 1; i <= g.n(); ++i) {
    if (i > 1) os << ' ';
    os << g.value(i);
    if (g.color(i) == 1) os << kMacron;
    if (g.color(i) == 2) os << kDoubleOverline;
  }
  return os.str();
}

}  // namespace t2r
