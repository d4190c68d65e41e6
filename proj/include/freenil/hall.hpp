#ifndef FREENIL_HALL_HPP
#define FREENIL_HALL_HPP

// Hall words over generators x1..xd and the Hall basis of the free
// t-step nilpotent Lie algebra.
//
// Generators are ordered x_d < x_{d-1} < ... < x_1. Words are ordered first
// by degree, then lexicographically on their flattened generator sequence,
// then structurally (left subtree, then right subtree).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freenil {

class HallWord {
public:
  static HallWord leaf(unsigned generator);
  static HallWord pair(HallWord left, HallWord right);

  bool is_leaf() const noexcept { return node_->generator != 0; }
  // 1-based generator index; only meaningful for leaves.
  unsigned generator() const noexcept { return node_->generator; }
  HallWord left() const { return HallWord(node_->left); }
  HallWord right() const { return HallWord(node_->right); }
  unsigned degree() const noexcept { return node_->degree; }
  const std::vector<unsigned> &letters() const noexcept { return node_->letters; }

  // Nested-bracket form, e.g. "[[x1,x2],x2]".
  std::string to_string() const;

private:
  struct Node {
    unsigned generator = 0;
    unsigned degree = 1;
    std::vector<unsigned> letters;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit HallWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// x_a < x_b iff a > b.
std::strong_ordering compare_generators(unsigned a, unsigned b);
std::strong_ordering compare_words(const HallWord &a, const HallWord &b);

inline std::strong_ordering operator<=>(const HallWord &a, const HallWord &b) { return compare_words(a, b); }
inline bool operator==(const HallWord &a, const HallWord &b) { return compare_words(a, b) == 0; }

bool is_canonical(const HallWord &v);

// (1/s) * sum_{a | s} mu(a) d^(s/a). Throws PreconditionError if d < 2 or s < 1.
std::uint64_t witt_dimension(unsigned d, unsigned s);

class HallBasis {
public:
  unsigned d() const noexcept { return d_; }
  unsigned t() const noexcept { return t_; }
  std::size_t size() const noexcept { return words_.size(); }
  const HallWord &operator[](std::size_t i) const { return words_[i]; }
  const std::vector<HallWord> &words() const noexcept { return words_; }

  std::optional<std::size_t> index_of(const HallWord &w) const;
  unsigned degree(std::size_t i) const { return words_[i].degree(); }
  // Basis position of the generator x_g (g in 1..d).
  std::size_t generator_position(unsigned g) const;
  // Half-open index range [first, last) of words of degree s.
  std::pair<std::size_t, std::size_t> degree_range(unsigned s) const;

  // For a non-leaf basis word, the basis indices of its two factors.
  std::pair<std::size_t, std::size_t> factors(std::size_t i) const { return factors_[i]; }
  // Index of the basis word [w_i, w_j] if it is a basis word.
  std::optional<std::size_t> pair_index(std::size_t i, std::size_t j) const;

private:
  friend HallBasis hall_basis(unsigned d, unsigned t);

  unsigned d_ = 0;
  unsigned t_ = 0;
  std::vector<HallWord> words_;
  std::vector<std::size_t> degree_offsets_;
  std::vector<std::pair<std::size_t, std::size_t>> factors_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
};

// Throws PreconditionError unless d >= 2 and t >= 1.
HallBasis hall_basis(unsigned d, unsigned t);

} // namespace freenil

#endif
