#include "freenil/hall.hpp"

#include "freenil/error.hpp"

#include <algorithm>
#include <gmpxx.h>

namespace freenil {

HallWord HallWord::leaf(unsigned generator) {
  if (generator == 0)
    throw PreconditionError("generator indices start at 1");
  auto n = std::make_shared<Node>();
  n->generator = generator;
  n->degree = 1;
  n->letters = {generator};
  return HallWord(std::move(n));
}

HallWord HallWord::pair(HallWord left, HallWord right) {
  auto n = std::make_shared<Node>();
  n->degree = left.degree() + right.degree();
  n->letters = left.letters();
  n->letters.insert(n->letters.end(), right.letters().begin(), right.letters().end());
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return HallWord(std::move(n));
}

std::string HallWord::to_string() const {
  if (is_leaf())
    return "x" + std::to_string(generator());
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

std::strong_ordering compare_generators(unsigned a, unsigned b) { return b <=> a; }

std::strong_ordering compare_words(const HallWord &a, const HallWord &b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  const auto &la = a.letters();
  const auto &lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i)
    if (auto c = compare_generators(la[i], lb[i]); c != 0)
      return c;
  // Same letters; leaves are then identical.
  if (a.is_leaf() || b.is_leaf())
    return a.is_leaf() == b.is_leaf() ? std::strong_ordering::equal
                                      : (a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater);
  if (auto c = compare_words(a.left(), b.left()); c != 0)
    return c;
  return compare_words(a.right(), b.right());
}

bool is_canonical(const HallWord &v) {
  if (v.is_leaf())
    return true;
  const HallWord v1 = v.left();
  const HallWord v2 = v.right();
  if (!is_canonical(v1) || !is_canonical(v2) || !(v1 > v2))
    return false;
  if (!v1.is_leaf())
    return v2 >= v1.right();
  return true;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

} // namespace

std::uint64_t witt_dimension(unsigned d, unsigned s) {
  if (d < 2 || s < 1)
    throw PreconditionError("witt_dimension requires d >= 2 and s >= 1");
  mpz_class total = 0;
  for (unsigned a = 1; a <= s; ++a) {
    if (s % a != 0)
      continue;
    const int mu = moebius(a);
    if (mu == 0)
      continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), d, s / a);
    total += mu * pw;
  }
  total /= s;
  if (!total.fits_ulong_p())
    throw PreconditionError("witt_dimension overflows 64 bits");
  return total.get_ui();
}

std::optional<std::size_t> HallBasis::index_of(const HallWord &w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w)
    return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t HallBasis::generator_position(unsigned g) const {
  if (g < 1 || g > d_)
    throw PreconditionError("generator x" + std::to_string(g) + " is not among x1..x" + std::to_string(d_));
  return d_ - g;
}

std::pair<std::size_t, std::size_t> HallBasis::degree_range(unsigned s) const {
  if (s < 1 || s > t_)
    throw PreconditionError("degree out of range 1.." + std::to_string(t_));
  return {degree_offsets_[s - 1], degree_offsets_[s]};
}

std::optional<std::size_t> HallBasis::pair_index(std::size_t i, std::size_t j) const {
  auto it = pair_index_.find({i, j});
  if (it == pair_index_.end())
    return std::nullopt;
  return it->second;
}

HallBasis hall_basis(unsigned d, unsigned t) {
  if (d < 2 || t < 1)
    throw PreconditionError("hall_basis requires d >= 2 and t >= 1");
  std::vector<std::vector<HallWord>> levels(t + 1);
  for (unsigned g = d; g >= 1; --g)
    levels[1].push_back(HallWord::leaf(g));
  for (unsigned n = 2; n <= t; ++n) {
    auto &level = levels[n];
    // Left factor from level n-k, right factor from level k.
    for (unsigned k = 1; k <= n / 2; ++k)
      for (const auto &v1 : levels[n - k])
        for (const auto &v2 : levels[k]) {
          auto w = HallWord::pair(v1, v2);
          if (is_canonical(w))
            level.push_back(std::move(w));
        }
    std::sort(level.begin(), level.end());
  }

  HallBasis b;
  b.d_ = d;
  b.t_ = t;
  b.degree_offsets_.push_back(0);
  for (unsigned n = 1; n <= t; ++n) {
    b.words_.insert(b.words_.end(), levels[n].begin(), levels[n].end());
    b.degree_offsets_.push_back(b.words_.size());
  }
  constexpr auto none = static_cast<std::size_t>(-1);
  b.factors_.assign(b.words_.size(), {none, none});
  for (std::size_t i = 0; i < b.words_.size(); ++i) {
    const auto &w = b.words_[i];
    if (w.is_leaf())
      continue;
    const auto l = b.index_of(w.left());
    const auto r = b.index_of(w.right());
    b.factors_[i] = {*l, *r};
    b.pair_index_[{*l, *r}] = i;
  }
  return b;
}

} // namespace freenil
