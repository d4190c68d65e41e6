#include "freenil/quotients.hpp"

#include "freenil/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace freenil {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

} // namespace

Ideal::Ideal(FreeAlgebraPtr algebra, Subspace space) : algebra_(std::move(algebra)), space_(std::move(space)) {
  const std::size_t n = algebra_->dim();
  if (space_.ambient_dim() != n)
    throw DimensionError("ideal subspace does not live in the algebra");
  for (std::size_t r = 0; r < space_.dim(); ++r)
    for (std::size_t k = 0; k < n; ++k)
      if (!member(space_, algebra_->bracket(space_.basis().row(r), unit(n, k))))
        throw PreconditionError("subspace is not an ideal: not closed under brackets");
}

bool Ideal::contains(const LieElement &x) const {
  if (x.algebra() != algebra_)
    throw PreconditionError("element belongs to a different algebra");
  return member(space_, x.dense());
}

bool Ideal::admits_quotient() const {
  return freenil::contains(algebra_->derived_algebra(), space_) &&
         !freenil::contains(space_, algebra_->graded_component(algebra_->t()));
}

Ideal ideal_from_generators(const FreeAlgebraPtr &a, const std::vector<LieElement> &gens) {
  const std::size_t n = a->dim();
  std::vector<Vec> spanning;
  std::vector<Vec> work;
  for (const auto &g : gens) {
    if (g.algebra() != a)
      throw PreconditionError("ideal generator belongs to a different algebra");
    spanning.push_back(g.dense());
    work.push_back(g.dense());
  }
  Subspace cur = Subspace::span(spanning, n);
  while (!work.empty()) {
    const Vec v = std::move(work.back());
    work.pop_back();
    for (std::size_t k = 0; k < n; ++k) {
      Vec w = a->bracket(v, unit(n, k));
      if (member(cur, w))
        continue;
      spanning.push_back(w);
      work.push_back(std::move(w));
      cur = Subspace::span(spanning, n);
    }
  }
  return Ideal(a, std::move(cur));
}

Mat presentation_map(const FreeAlgebraPtr &a, const AlgebraSpec &target, const std::vector<std::size_t> &msg) {
  const unsigned d = a->d();
  if (msg.size() != d)
    throw PreconditionError("generating set has " + std::to_string(msg.size()) + " elements, expected " +
                            std::to_string(d));
  for (auto i : msg)
    if (i >= target.dim())
      throw PreconditionError("generator index out of range for '" + target.name() + "'");
  const auto series = lower_central_series(target);
  if (series.nilindex > a->t())
    throw PreconditionError("'" + target.name() + "' has nilindex " + std::to_string(series.nilindex) +
                            ", larger than t = " + std::to_string(a->t()));
  {
    auto vs = series.terms.size() > 1 ? series.terms[1].vectors() : std::vector<Vec>{};
    for (auto i : msg)
      vs.push_back(unit(target.dim(), i));
    if (series.type != d || Subspace::span(vs, target.dim()).dim() != target.dim())
      throw PreconditionError("images do not form a minimal set of generators of '" + target.name() + "'");
  }
  const std::size_t n = a->dim();
  Mat theta(target.dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < d) {
      // Position i holds x_{d-i}.
      theta(msg[d - i - 1], i) = 1;
      continue;
    }
    const auto [l, r] = a->basis().factors(i);
    theta.set_column(i, target.bracket(theta.column(l), theta.column(r)));
  }
  if (rank(theta) != target.dim())
    throw PreconditionError("presentation map is not surjective");
  return theta;
}

Ideal kernel_of_presentation(const FreeAlgebraPtr &a, const AlgebraSpec &target,
                             const std::vector<std::size_t> &msg) {
  return Ideal(a, kernel_of(presentation_map(a, target, msg)));
}

QuotientAlgebra build_quotient(const Ideal &t) {
  const auto &a = t.algebra();
  const std::size_t n = a->dim();
  if (!contains(a->derived_algebra(), t.space()))
    throw PreconditionError("ideal is not contained in n^2");
  if (contains(t.space(), a->graded_component(a->t())))
    throw PreconditionError("ideal contains n^t");

  std::vector<Vec> acc = t.space().vectors();
  Subspace cur = t.space();
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < n && cur.dim() < n; ++k) {
    Vec e = unit(n, k);
    if (member(cur, e))
      continue;
    reps.push_back(k);
    acc.push_back(std::move(e));
    cur = Subspace::span(acc, n);
  }
  const std::size_t q = reps.size();

  Mat section(n, q);
  for (std::size_t j = 0; j < q; ++j)
    section(reps[j], j) = 1;
  Mat change(n, n);
  for (std::size_t j = 0; j < q; ++j)
    change(reps[j], j) = 1;
  for (std::size_t r = 0; r < t.dim(); ++r)
    change.set_column(q + r, t.space().basis().row(r));
  const auto inv = inverse(change);
  if (!inv)
    throw std::logic_error("coset representatives do not complement the ideal");
  Mat projection(q, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k < n; ++k)
      projection(i, k) = (*inv)(i, k);

  std::vector<std::string> labels;
  for (std::size_t j = 0; j < q; ++j)
    labels.push_back("f" + std::to_string(j + 1));
  AlgebraSpec::Constants cs;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) {
      Vec v = projection.apply(a->bracket(section.column(i), section.column(j)));
      if (!is_zero(v))
        cs.emplace(std::pair{i, j}, std::move(v));
    }
  AlgebraSpec spec("n_{" + std::to_string(a->d()) + "," + std::to_string(a->t()) + "}/T", std::move(labels),
                   std::move(cs));
  return QuotientAlgebra{a, t, std::move(reps), std::move(spec), std::move(projection), std::move(section)};
}

bool is_homogeneous(const Ideal &t) {
  const auto &a = *t.algebra();
  std::size_t total = 0;
  for (unsigned s = 1; s <= a.t(); ++s)
    total += intersect(t.space(), a.graded_component(s)).dim();
  return total == t.dim();
}

namespace {

// Constraint rows N (E_k v) over all seeds k, for each v in `vs`.
Subspace seeds_mapping_into(const Ideal &t, const std::vector<Vec> &vs) {
  const auto &a = t.algebra();
  const std::size_t unknowns = a->dim() * a->d();
  const Mat ann = t.space().annihilator();
  if (ann.rows() == 0)
    return Subspace::whole(unknowns);
  const auto elem = elementary_derivations(a);
  std::vector<Vec> rows;
  for (const auto &v : vs) {
    std::vector<Vec> images;
    images.reserve(unknowns);
    for (const auto &e : elem)
      images.push_back(e.apply(v));
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      Vec row(unknowns);
      for (std::size_t k = 0; k < unknowns; ++k)
        for (std::size_t m = 0; m < a->dim(); ++m)
          if (sgn(ann(r, m)) != 0 && sgn(images[k][m]) != 0)
            row[k] += ann(r, m) * images[k][m];
      if (!is_zero(row))
        rows.push_back(std::move(row));
    }
  }
  return kernel_of(Mat::from_rows(rows, unknowns));
}

} // namespace

Subspace der_preserving(const Ideal &t) { return seeds_mapping_into(t, t.space().vectors()); }

Subspace der_into(const Ideal &t) {
  const std::size_t n = t.algebra()->dim();
  std::vector<Vec> all;
  for (std::size_t k = 0; k < n; ++k)
    all.push_back(unit(n, k));
  return seeds_mapping_into(t, all);
}

std::vector<Mat> induced_der_basis(const QuotientAlgebra &q) {
  const Subspace preserving = der_preserving(q.ideal);
  const Subspace into = der_into(q.ideal);
  std::vector<Vec> acc = into.vectors();
  Subspace cur = into;
  std::vector<Mat> out;
  for (std::size_t r = 0; r < preserving.dim(); ++r) {
    const auto row = preserving.basis().row(r);
    if (member(cur, row))
      continue;
    acc.emplace_back(row.begin(), row.end());
    cur = Subspace::span(acc, cur.ambient_dim());
    const Mat D = extend_derivation(GeneratorMap::from_coords(q.source, row));
    out.push_back(q.projection * D * q.section);
  }
  return out;
}

AutMembership aut_membership(const Mat &phi, const Ideal &t) {
  const auto &a = *t.algebra();
  const std::size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n)
    throw DimensionError("matrix size does not match algebra dimension");
  AutMembership m;
  m.is_automorphism = rank(phi) == n && is_multiplicative(a, phi);
  m.preserves_ideal = image(phi, t.space()) == t.space();
  if (m.is_automorphism) {
    const Mat diff = phi - Mat::identity(n);
    m.in_circ = true;
    for (std::size_t c = 0; c < n && m.in_circ; ++c)
      m.in_circ = member(t.space(), diff.column(c));
  }
  return m;
}

Mat induce_automorphism(const Mat &phi, const QuotientAlgebra &q) {
  const std::size_t n = q.source->dim();
  if (phi.rows() != n || phi.cols() != n)
    throw DimensionError("matrix size does not match algebra dimension");
  if (image(phi, q.ideal.space()) != q.ideal.space())
    throw PreconditionError("map does not preserve the ideal");
  Mat hat = q.projection * phi * q.section;
  if (!is_automorphism_matrix(q.spec, hat))
    throw PreconditionError("induced map is not an automorphism of the quotient");
  return hat;
}

Mat lift_automorphism(const QuotientAlgebra &q, const Mat &hat) {
  if (!is_automorphism_matrix(q.spec, hat))
    throw PreconditionError("matrix is not an automorphism of the quotient");
  const auto &a = q.source;
  Mat seed(a->dim(), a->d());
  for (std::size_t c = 0; c < a->d(); ++c) {
    const auto it = std::find(q.rep_indices.begin(), q.rep_indices.end(), c);
    if (it == q.rep_indices.end())
      throw std::logic_error("generator is not a coset representative");
    const auto j = static_cast<std::size_t>(it - q.rep_indices.begin());
    seed.set_column(c, q.section.apply(hat.column(j)));
  }
  Mat phi = extend_homomorphism(GeneratorMap::from_seed_matrix(a, seed));
  if (induce_automorphism(phi, q) != hat)
    throw std::logic_error("lifted automorphism does not induce the requested map");
  return phi;
}

Presentation present(const FreeAlgebraPtr &a, const AlgebraSpec &target, const std::vector<std::size_t> &msg) {
  const Mat theta = presentation_map(a, target, msg);
  Ideal kernel(a, kernel_of(theta));
  QuotientAlgebra q = build_quotient(kernel);
  Mat to_target = theta * q.section;
  auto from_target = inverse(to_target);
  if (!from_target)
    throw std::logic_error("presentation does not induce an isomorphism");
  return Presentation{std::move(kernel), std::move(q), std::move(to_target), std::move(*from_target)};
}

} // namespace freenil
