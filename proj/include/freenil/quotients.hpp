#ifndef FREENIL_QUOTIENTS_HPP
#define FREENIL_QUOTIENTS_HPP

// Ideals of n_{d,t}, quotients n_{d,t}/T, and the transfer of derivations
// and automorphisms from n_{d,t} to its quotients.

#include "freenil/exactlin.hpp"
#include "freenil/free_lie.hpp"
#include "freenil/free_maps.hpp"
#include "freenil/lie_algebra.hpp"

#include <vector>

namespace freenil {

class Ideal {
public:
  // Throws PreconditionError unless the subspace is closed under brackets
  // with every basis word.
  Ideal(FreeAlgebraPtr algebra, Subspace space);

  const FreeAlgebraPtr &algebra() const noexcept { return algebra_; }
  const Subspace &space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool contains(const LieElement &x) const;
  // T subset n^2 and n^t not subset T.
  bool admits_quotient() const;

  friend bool operator==(const Ideal &a, const Ideal &b) {
    return a.algebra_ == b.algebra_ && a.space_ == b.space_;
  }

private:
  FreeAlgebraPtr algebra_;
  Subspace space_;
};

Ideal ideal_from_generators(const FreeAlgebraPtr &a, const std::vector<LieElement> &gens);

// Matrix (target dim x free dim) of the homomorphism x_i -> e_{msg[i-1]}.
// Throws PreconditionError on a bad generating set or nilindex mismatch.
Mat presentation_map(const FreeAlgebraPtr &a, const AlgebraSpec &target, const std::vector<std::size_t> &msg);
Ideal kernel_of_presentation(const FreeAlgebraPtr &a, const AlgebraSpec &target, const std::vector<std::size_t> &msg);

struct QuotientAlgebra {
  FreeAlgebraPtr source;
  Ideal ideal;
  // Basis indices of the Hall words chosen as coset representatives.
  std::vector<std::size_t> rep_indices;
  // Induced structure constants on the representatives, labeled f1..fk.
  AlgebraSpec spec;
  // k x dim: coordinates of x + T in the representative basis.
  Mat projection;
  // dim x k: representative j as a vector of n_{d,t}.
  Mat section;

  std::size_t dim() const noexcept { return rep_indices.size(); }
};

// Throws PreconditionError unless T subset n^2 and n^t not subset T.
QuotientAlgebra build_quotient(const Ideal &t);

// dim T == sum_s dim(T cap u^s).
bool is_homogeneous(const Ideal &t);

// Seeds phi (coordinates as in GeneratorMap::coords) with d_phi(T) in T.
Subspace der_preserving(const Ideal &t);
// Seeds phi with d_phi(n_{d,t}) in T.
Subspace der_into(const Ideal &t);

// Derivations of q.spec induced by a complement of der_into in der_preserving.
std::vector<Mat> induced_der_basis(const QuotientAlgebra &q);

struct AutMembership {
  bool is_automorphism = false;
  bool preserves_ideal = false;
  bool in_circ = false;
};

AutMembership aut_membership(const Mat &phi, const Ideal &t);

// The automorphism x + T -> Phi(x) + T of q.spec. Throws PreconditionError
// if Phi does not preserve the ideal.
Mat induce_automorphism(const Mat &phi, const QuotientAlgebra &q);

// A Phi in Aut_T n_{d,t} inducing `hat`. Throws PreconditionError unless
// `hat` is an automorphism of q.spec.
Mat lift_automorphism(const QuotientAlgebra &q, const Mat &hat);

// A presentation n_{d,t} -> target together with the induced isomorphism
// between the quotient's representative basis and the target basis.
struct Presentation {
  Ideal kernel;
  QuotientAlgebra quotient;
  // target dim x k, invertible: representative j -> theta(rep_j).
  Mat to_target;
  Mat from_target;

  // Conjugates a target matrix into the representative basis and back.
  Mat to_quotient_basis(const Mat &m) const { return from_target * m * to_target; }
  Mat to_target_basis(const Mat &m) const { return to_target * m * from_target; }
};

Presentation present(const FreeAlgebraPtr &a, const AlgebraSpec &target, const std::vector<std::size_t> &msg);

} // namespace freenil

#endif
