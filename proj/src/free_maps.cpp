#include "freenil/free_maps.hpp"

#include "freenil/error.hpp"

namespace freenil {

GeneratorMap::GeneratorMap(FreeAlgebraPtr algebra, std::vector<LieElement> images)
    : algebra_(std::move(algebra)), images_(std::move(images)) {
  if (images_.size() != algebra_->d())
    throw DimensionError("generator map needs one image per generator");
  for (auto &img : images_) {
    if (!img.algebra())
      img = LieElement(algebra_);
    else if (img.algebra() != algebra_)
      throw PreconditionError("generator image belongs to a different algebra");
  }
}

GeneratorMap GeneratorMap::zero(FreeAlgebraPtr algebra) {
  std::vector<LieElement> imgs(algebra->d(), LieElement(algebra));
  return GeneratorMap(algebra, std::move(imgs));
}

GeneratorMap GeneratorMap::identity(FreeAlgebraPtr algebra) { return scaled_identity(std::move(algebra), 1); }

GeneratorMap GeneratorMap::scaled_identity(FreeAlgebraPtr algebra, const Scalar &lambda) {
  std::vector<LieElement> imgs;
  for (unsigned g = 1; g <= algebra->d(); ++g)
    imgs.push_back(lambda * LieElement::basis_word(algebra, algebra->basis().generator_position(g)));
  return GeneratorMap(algebra, std::move(imgs));
}

GeneratorMap GeneratorMap::from_seed_matrix(FreeAlgebraPtr algebra, const Mat &seed) {
  const unsigned d = algebra->d();
  if (seed.rows() != algebra->dim() || seed.cols() != d)
    throw DimensionError("seed matrix must be dim x d");
  std::vector<LieElement> imgs;
  for (unsigned g = 1; g <= d; ++g)
    imgs.emplace_back(algebra, seed.column(algebra->basis().generator_position(g)));
  return GeneratorMap(algebra, std::move(imgs));
}

GeneratorMap GeneratorMap::from_coords(FreeAlgebraPtr algebra, std::span<const Scalar> coords) {
  const auto dim = algebra->dim();
  const auto d = algebra->d();
  return from_seed_matrix(algebra, Mat::unflatten(coords, dim, d));
}

Mat GeneratorMap::seed_matrix() const {
  Mat m(algebra_->dim(), algebra_->d());
  for (unsigned g = 1; g <= algebra_->d(); ++g)
    m.set_column(algebra_->basis().generator_position(g), images_[g - 1].dense());
  return m;
}

Mat GeneratorMap::linear_part() const {
  const unsigned d = algebra_->d();
  const Mat s = seed_matrix();
  Mat a(d, d);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned c = 0; c < d; ++c)
      a(r, c) = s(r, c);
  return a;
}

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

} // namespace

Mat extend_derivation(const GeneratorMap &phi) {
  const auto &a = *phi.algebra();
  const std::size_t n = a.dim();
  const Mat seed = phi.seed_matrix();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.d()) {
      m.set_column(i, seed.column(i));
      continue;
    }
    // Leibniz on w_i = [w_l, w_r]; both factors precede w_i.
    const auto [l, r] = a.basis().factors(i);
    Vec col = a.bracket(m.column(l), unit(n, r));
    const Vec rhs = a.bracket(unit(n, l), m.column(r));
    for (std::size_t k = 0; k < n; ++k)
      col[k] += rhs[k];
    m.set_column(i, col);
  }
  return m;
}

Mat extend_homomorphism(const GeneratorMap &phi) {
  const auto &a = *phi.algebra();
  const std::size_t n = a.dim();
  const Mat seed = phi.seed_matrix();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.d()) {
      m.set_column(i, seed.column(i));
      continue;
    }
    const auto [l, r] = a.basis().factors(i);
    m.set_column(i, a.bracket(m.column(l), m.column(r)));
  }
  return m;
}

Vec apply_homomorphism(const GeneratorMap &phi, std::span<const Scalar> x) {
  return extend_homomorphism(phi).apply(x);
}

bool is_automorphism_map(const GeneratorMap &phi) { return rank(phi.linear_part()) == phi.algebra()->d(); }

bool is_derivation(const FreeLieAlgebra &a, const Mat &m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n)
    throw DimensionError("matrix size does not match algebra dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec prod(n);
      for (const auto &[k, c] : a.bracket_basis(i, j))
        prod[k] = c;
      const Vec lhs = m.apply(prod);
      const Vec r1 = a.bracket(m.column(i), unit(n, j));
      const Vec r2 = a.bracket(unit(n, i), m.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k])
          return false;
    }
  return true;
}

bool is_multiplicative(const FreeLieAlgebra &a, const Mat &m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n)
    throw DimensionError("matrix size does not match algebra dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec prod(n);
      for (const auto &[k, c] : a.bracket_basis(i, j))
        prod[k] = c;
      if (m.apply(prod) != a.bracket(m.column(i), m.column(j)))
        return false;
    }
  return true;
}

Mat grading_derivation(const FreeLieAlgebra &a) {
  Mat m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    m(i, i) = a.degree(i);
  return m;
}

DerDecomposition der_decomposition(const FreeAlgebraPtr &a, const Mat &D) {
  if (!is_derivation(*a, D))
    throw PreconditionError("matrix is not a derivation of " + std::to_string(a->d()) + "," +
                            std::to_string(a->t()) + " free nilpotent algebra");
  const std::size_t n = a->dim();
  const unsigned d = a->d();
  Mat psi(n, d), delta(n, d);
  Scalar tr = 0;
  for (unsigned c = 0; c < d; ++c)
    tr += D(c, c);
  const Scalar coeff = tr / d;
  for (std::size_t r = 0; r < n; ++r)
    for (unsigned c = 0; c < d; ++c) {
      if (r < d)
        psi(r, c) = D(r, c) - (r == c ? coeff : Scalar(0));
      else
        delta(r, c) = D(r, c);
    }
  return {extend_derivation(GeneratorMap::from_seed_matrix(a, psi)), coeff,
          extend_derivation(GeneratorMap::from_seed_matrix(a, delta))};
}

GlNlFactors factor_gl_nl(const GeneratorMap &phi) {
  const auto &a = phi.algebra();
  const std::size_t n = a->dim();
  const unsigned d = a->d();
  const auto alpha_inv = inverse(phi.linear_part());
  if (!alpha_inv)
    throw PreconditionError("seed does not define an automorphism");
  const Mat seed = phi.seed_matrix();
  Mat alpha(n, d), delta(n, d), ident(n, d);
  for (std::size_t r = 0; r < n; ++r)
    for (unsigned c = 0; c < d; ++c)
      (r < d ? alpha : delta)(r, c) = seed(r, c);
  for (unsigned c = 0; c < d; ++c)
    ident(c, c) = 1;
  const Mat sigma = ident + delta * *alpha_inv;
  return {GeneratorMap::from_seed_matrix(a, sigma), GeneratorMap::from_seed_matrix(a, alpha)};
}

std::vector<Mat> elementary_derivations(const FreeAlgebraPtr &a) {
  const std::size_t count = a->dim() * a->d();
  std::vector<Mat> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vec coords(count);
    coords[k] = 1;
    out.push_back(extend_derivation(GeneratorMap::from_coords(a, coords)));
  }
  return out;
}

} // namespace freenil
