#include "freenil/free_lie.hpp"

#include "freenil/error.hpp"

#include <algorithm>

namespace freenil {

LieElement::LieElement(FreeAlgebraPtr algebra) : algebra_(std::move(algebra)) {}

LieElement::LieElement(FreeAlgebraPtr algebra, std::span<const Scalar> dense) : algebra_(std::move(algebra)) {
  if (dense.size() != algebra_->dim())
    throw DimensionError("coordinate vector does not match algebra dimension");
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0)
      coords_.emplace(i, dense[i]);
}

LieElement LieElement::basis_word(FreeAlgebraPtr algebra, std::size_t index) {
  if (index >= algebra->dim())
    throw DimensionError("basis index out of range");
  LieElement e(std::move(algebra));
  e.coords_.emplace(index, 1);
  return e;
}

Scalar LieElement::coefficient(std::size_t index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? Scalar(0) : it->second;
}

Vec LieElement::dense() const {
  Vec v(algebra_ ? algebra_->dim() : 0);
  for (const auto &[i, c] : coords_)
    v[i] = c;
  return v;
}

void LieElement::check_same(const LieElement &o) const {
  if (algebra_ != o.algebra_)
    throw PreconditionError("elements belong to different algebras");
}

LieElement &LieElement::operator+=(const LieElement &o) {
  check_same(o);
  for (const auto &[i, c] : o.coords_) {
    auto &slot = coords_[i];
    slot += c;
    if (sgn(slot) == 0)
      coords_.erase(i);
  }
  return *this;
}

LieElement &LieElement::operator-=(const LieElement &o) {
  check_same(o);
  for (const auto &[i, c] : o.coords_) {
    auto &slot = coords_[i];
    slot -= c;
    if (sgn(slot) == 0)
      coords_.erase(i);
  }
  return *this;
}

LieElement &LieElement::operator*=(const Scalar &s) {
  if (sgn(s) == 0)
    coords_.clear();
  for (auto &[i, c] : coords_)
    c *= s;
  return *this;
}

bool operator==(const LieElement &a, const LieElement &b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

FreeLieAlgebra::FreeLieAlgebra(HallBasis basis) : basis_(std::move(basis)) {
  table_.resize(basis_.size() * basis_.size());
}

FreeAlgebraPtr FreeLieAlgebra::build(unsigned d, unsigned t) {
  return FreeAlgebraPtr(new FreeLieAlgebra(hall_basis(d, t)));
}

const SparseVec &FreeLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim())
    throw DimensionError("basis index out of range");
  std::lock_guard lock(mutex_);
  return compute(i, j);
}

namespace {

void axpy(std::map<std::size_t, Scalar> &acc, const Scalar &f, const SparseVec &v) {
  for (const auto &[k, c] : v) {
    auto &slot = acc[k];
    slot += f * c;
  }
}

SparseVec to_sparse(const std::map<std::size_t, Scalar> &acc) {
  SparseVec out;
  for (const auto &[k, c] : acc)
    if (sgn(c) != 0)
      out.emplace_back(k, c);
  return out;
}

} // namespace

// Hall rewriting. Basis order coincides with word order, so index comparison
// decides which factor is larger. Caller holds mutex_.
const SparseVec &FreeLieAlgebra::compute(std::size_t i, std::size_t j) const {
  auto &slot = table_[i * dim() + j];
  if (slot)
    return *slot;

  SparseVec result;
  if (i != j && degree(i) + degree(j) <= t()) {
    if (i < j) {
      result = compute(j, i);
      for (auto &[k, c] : result)
        c = -c;
    } else if (auto w = basis_.pair_index(i, j)) {
      result.emplace_back(*w, 1);
    } else {
      // w_i = [u1,u2] with w_j < u2:
      // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]].
      const auto [u1, u2] = basis_.factors(i);
      std::map<std::size_t, Scalar> acc;
      const SparseVec a = compute(u1, j);
      for (const auto &[k, c] : a)
        axpy(acc, c, compute(k, u2));
      const SparseVec b = compute(u2, j);
      for (const auto &[k, c] : b)
        axpy(acc, c, compute(u1, k));
      result = to_sparse(acc);
    }
  }
  slot = std::make_unique<SparseVec>(std::move(result));
  return *slot;
}

Vec FreeLieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionError("coordinate vector does not match algebra dimension");
  Vec out(dim());
  std::lock_guard lock(mutex_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0 || degree(i) + degree(j) > t())
        continue;
      const Scalar f = x[i] * y[j];
      for (const auto &[k, c] : compute(i, j))
        out[k] += f * c;
    }
  }
  return out;
}

Subspace FreeLieAlgebra::graded_component(unsigned s) const {
  const auto [lo, hi] = basis_.degree_range(s);
  std::vector<Vec> vs;
  for (std::size_t i = lo; i < hi; ++i) {
    Vec v(dim());
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, dim());
}

Subspace FreeLieAlgebra::derived_algebra() const {
  std::vector<Vec> vs;
  for (std::size_t i = d(); i < dim(); ++i) {
    Vec v(dim());
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, dim());
}

std::size_t FreeLieAlgebra::cached_products() const {
  std::lock_guard lock(mutex_);
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](const auto &p) { return p != nullptr; }));
}

LieElement bracket_words(const FreeAlgebraPtr &a, const HallWord &u, const HallWord &v) {
  if (!is_canonical(u) || !is_canonical(v))
    throw PreconditionError("bracket_words requires canonical Hall words");
  LieElement out(a);
  if (u.degree() + v.degree() > a->t())
    return out;
  const auto iu = a->basis().index_of(u);
  const auto iv = a->basis().index_of(v);
  if (!iu || !iv)
    throw PreconditionError("word uses a generator outside x1..x" + std::to_string(a->d()));
  for (const auto &[k, c] : a->bracket_basis(*iu, *iv))
    out += c * LieElement::basis_word(a, k);
  return out;
}

LieElement bracket(const LieElement &x, const LieElement &y) {
  if (x.algebra() != y.algebra() || !x.algebra())
    throw PreconditionError("bracket of elements from different algebras");
  const auto &a = x.algebra();
  return LieElement(a, a->bracket(x.dense(), y.dense()));
}

AssocElement assoc_product(const AssocElement &a, const AssocElement &b, unsigned t) {
  AssocElement out;
  for (const auto &[wa, ca] : a)
    for (const auto &[wb, cb] : b) {
      if (wa.size() + wb.size() > t)
        continue;
      auto w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto &slot = out[w];
      slot += ca * cb;
      if (sgn(slot) == 0)
        out.erase(w);
    }
  return out;
}

AssocElement assoc_commutator(const AssocElement &a, const AssocElement &b, unsigned t) {
  AssocElement out = assoc_product(a, b, t);
  for (const auto &[w, c] : assoc_product(b, a, t)) {
    auto &slot = out[w];
    slot -= c;
    if (sgn(slot) == 0)
      out.erase(w);
  }
  return out;
}

AssocElement assoc_embed(const HallWord &w, unsigned t) {
  if (w.is_leaf())
    return t >= 1 ? AssocElement{{{w.generator()}, Scalar(1)}} : AssocElement{};
  return assoc_commutator(assoc_embed(w.left(), t), assoc_embed(w.right(), t), t);
}

AssocElement assoc_embed(const LieElement &x) {
  AssocElement out;
  if (!x.algebra())
    return out;
  const auto &a = *x.algebra();
  for (const auto &[i, c] : x.coords())
    for (const auto &[w, cw] : assoc_embed(a.basis()[i], a.t())) {
      auto &slot = out[w];
      slot += c * cw;
      if (sgn(slot) == 0)
        out.erase(w);
    }
  return out;
}

} // namespace freenil
