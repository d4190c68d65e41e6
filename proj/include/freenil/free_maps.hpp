#ifndef FREENIL_FREE_MAPS_HPP
#define FREENIL_FREE_MAPS_HPP

// Linear maps from the generator span u = <x1..xd> into n_{d,t}, and their
// unique extensions to derivations and endomorphisms of n_{d,t}.
//
// Matrices act on column vectors: column j holds the image of basis word j.

#include "freenil/exactlin.hpp"
#include "freenil/free_lie.hpp"

#include <vector>

namespace freenil {

class GeneratorMap {
public:
  // images[g-1] is the image of x_g.
  GeneratorMap(FreeAlgebraPtr algebra, std::vector<LieElement> images);
  static GeneratorMap zero(FreeAlgebraPtr algebra);
  static GeneratorMap identity(FreeAlgebraPtr algebra);
  static GeneratorMap scaled_identity(FreeAlgebraPtr algebra, const Scalar &lambda);
  // Seed matrix (dim x d): column c is the image of the generator at basis
  // position c, i.e. of x_{d-c}.
  static GeneratorMap from_seed_matrix(FreeAlgebraPtr algebra, const Mat &seed);
  // Seed matrix flattened row-major (length dim * d).
  static GeneratorMap from_coords(FreeAlgebraPtr algebra, std::span<const Scalar> coords);

  const FreeAlgebraPtr &algebra() const noexcept { return algebra_; }
  const LieElement &image(unsigned g) const { return images_.at(g - 1); }
  const std::vector<LieElement> &images() const noexcept { return images_; }

  Mat seed_matrix() const;
  Vec coords() const { return seed_matrix().entries(); }
  // The d x d block p_u o phi on u (basis-position order).
  Mat linear_part() const;

private:
  FreeAlgebraPtr algebra_;
  std::vector<LieElement> images_;
};

Mat extend_derivation(const GeneratorMap &phi);
Mat extend_homomorphism(const GeneratorMap &phi);
// Evaluates a homomorphism seed on one element.
Vec apply_homomorphism(const GeneratorMap &phi, std::span<const Scalar> x);

// p_u(phi(x_1)), ..., p_u(phi(x_d)) linearly independent.
bool is_automorphism_map(const GeneratorMap &phi);

bool is_derivation(const FreeLieAlgebra &a, const Mat &m);
bool is_multiplicative(const FreeLieAlgebra &a, const Mat &m);

// Multiplication by k on the degree-k component.
Mat grading_derivation(const FreeLieAlgebra &a);

struct DerDecomposition {
  Mat semisimple; // d_psi with psi in sl(u)
  Scalar id_coeff;
  Mat nilpotent;  // d_delta with delta: u -> n^2
};

// D = semisimple + id_coeff * grading_derivation + nilpotent.
// Throws PreconditionError if D is not a derivation.
DerDecomposition der_decomposition(const FreeAlgebraPtr &a, const Mat &D);

struct GlNlFactors {
  GeneratorMap nl_seed; // id_u + delta o alpha^{-1}
  GeneratorMap gl_seed; // alpha = p_u o phi
};

// extend_homomorphism(nl) * extend_homomorphism(gl) == extend_homomorphism(phi).
// Throws PreconditionError unless phi is an automorphism seed.
GlNlFactors factor_gl_nl(const GeneratorMap &phi);

// Derivation matrices of the elementary seeds, indexed like
// GeneratorMap::coords(). d_phi = sum_k coords(phi)[k] * result[k].
std::vector<Mat> elementary_derivations(const FreeAlgebraPtr &a);

} // namespace freenil

#endif
