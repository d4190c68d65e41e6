#ifndef FREENIL_FREE_LIE_HPP
#define FREENIL_FREE_LIE_HPP

#include "freenil/exactlin.hpp"
#include "freenil/hall.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace freenil {

class FreeLieAlgebra;
using FreeAlgebraPtr = std::shared_ptr<const FreeLieAlgebra>;

// Sparse coordinates over the Hall basis: (basis index, coefficient), sorted
// by index, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// An element of n_{d,t}. Keeps its algebra alive.
class LieElement {
public:
  LieElement() = default;
  explicit LieElement(FreeAlgebraPtr algebra);
  LieElement(FreeAlgebraPtr algebra, std::span<const Scalar> dense);
  static LieElement basis_word(FreeAlgebraPtr algebra, std::size_t index);

  const FreeAlgebraPtr &algebra() const noexcept { return algebra_; }
  const std::map<std::size_t, Scalar> &coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }
  Scalar coefficient(std::size_t index) const;
  Vec dense() const;

  LieElement &operator+=(const LieElement &o);
  LieElement &operator-=(const LieElement &o);
  LieElement &operator*=(const Scalar &s);
  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
  friend LieElement operator*(const Scalar &s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
  friend bool operator==(const LieElement &a, const LieElement &b);

private:
  void check_same(const LieElement &o) const;

  FreeAlgebraPtr algebra_;
  std::map<std::size_t, Scalar> coords_;
};

// The free t-step nilpotent Lie algebra on x1..xd, in its Hall basis.
// Structure constants are computed on first use and cached; the cache is
// guarded, so a shared algebra can be used from several threads.
class FreeLieAlgebra {
public:
  static FreeAlgebraPtr build(unsigned d, unsigned t);

  unsigned d() const noexcept { return basis_.d(); }
  unsigned t() const noexcept { return basis_.t(); }
  std::size_t dim() const noexcept { return basis_.size(); }
  const HallBasis &basis() const noexcept { return basis_; }
  unsigned degree(std::size_t i) const { return basis_.degree(i); }

  // [w_i, w_j] in Hall coordinates.
  const SparseVec &bracket_basis(std::size_t i, std::size_t j) const;
  // Bilinear bracket of dense coordinate vectors.
  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  // Coordinate subspace of words of degree s.
  Subspace graded_component(unsigned s) const;
  // Words of degree >= 2, i.e. n^2.
  Subspace derived_algebra() const;

  // Number of structure constants computed so far (for tests).
  std::size_t cached_products() const;

private:
  explicit FreeLieAlgebra(HallBasis basis);
  const SparseVec &compute(std::size_t i, std::size_t j) const;

  HallBasis basis_;
  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::unique_ptr<SparseVec>> table_;
};

inline FreeAlgebraPtr build_free(unsigned d, unsigned t) { return FreeLieAlgebra::build(d, t); }

// Throws PreconditionError if either word is not canonical, or it does not
// belong to the algebra.
LieElement bracket_words(const FreeAlgebraPtr &a, const HallWord &u, const HallWord &v);
// Throws PreconditionError on an algebra mismatch.
LieElement bracket(const LieElement &x, const LieElement &y);

// Truncated free associative algebra: words of length <= t over generator
// indices, with rational coefficients.
using AssocElement = std::map<std::vector<unsigned>, Scalar>;

// Image of a Lie element under [u,v] -> uv - vu, computed from the word trees
// alone. Used as an independent check on bracket normalization.
AssocElement assoc_embed(const LieElement &x);
AssocElement assoc_embed(const HallWord &w, unsigned t);
AssocElement assoc_product(const AssocElement &a, const AssocElement &b, unsigned t);
AssocElement assoc_commutator(const AssocElement &a, const AssocElement &b, unsigned t);

} // namespace freenil

#endif
