#ifndef FREENIL_LIE_ALGEBRA_HPP
#define FREENIL_LIE_ALGEBRA_HPP

#include "freenil/exactlin.hpp"
#include "freenil/free_lie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace freenil {

// A finite-dimensional Lie algebra given by structure constants on a labeled
// basis. Only pairs (i,j) with i < j are stored; [e_j,e_i] = -[e_i,e_j] and
// omitted pairs are zero.
class AlgebraSpec {
public:
  using Constants = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  AlgebraSpec() = default;
  // Throws MalformedSpecError for i >= j, an index out of range, a product
  // vector of the wrong length, or an empty basis.
  AlgebraSpec(std::string name, std::vector<std::string> labels, Constants constants);

  const std::string &name() const noexcept { return name_; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  const Constants &constants() const noexcept { return constants_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  std::optional<std::size_t> index_of(const std::string &label) const;

  // [e_i, e_j] as a dense vector, any i, j.
  const Vec &bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  Constants constants_;
  std::vector<Vec> table_;
};

// The Hall-basis structure constants of n_{d,t}, labeled by word text.
AlgebraSpec spec_of(const FreeLieAlgebra &a);

// True iff the Jacobi identity holds on every basis triple.
bool validate_spec(const AlgebraSpec &a);

struct SeriesReport {
  // n^1, n^2, ..., ending with the zero subspace.
  std::vector<Subspace> terms;
  unsigned nilindex = 0;
  std::size_t type = 0;
  std::vector<std::size_t> dims() const;
};

// Throws PreconditionError if the series stalls before reaching zero.
SeriesReport lower_central_series(const AlgebraSpec &a);

// First-fit basis indices whose classes form a basis of n/n^2.
std::vector<std::size_t> extract_msg(const AlgebraSpec &a);

// Derivations as n x n matrices flattened row-major (entry (r,c) at r*n+c),
// obtained by solving the Leibniz conditions on all basis pairs.
Subspace derivations_direct(const AlgebraSpec &a);
std::vector<Mat> derivation_basis(const AlgebraSpec &a);

bool is_derivation_matrix(const AlgebraSpec &a, const Mat &m);
// Throws DimensionError unless m is n x n.
bool is_automorphism_matrix(const AlgebraSpec &a, const Mat &m);

// Lower central series of a Lie algebra of matrices spanned by `gens`.
// Returns the dimensions; the last entry is the dimension it stabilizes at.
std::vector<std::size_t> matrix_lie_series(const std::vector<Mat> &gens);

// Every derivation nilpotent. Decided as: Der(a) is a nilpotent Lie algebra
// and each basis derivation is a nilpotent matrix.
bool is_characteristically_nilpotent(const AlgebraSpec &a);

} // namespace freenil

#endif
