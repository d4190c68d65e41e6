#include "freenil/lie_algebra.hpp"

#include "freenil/error.hpp"

#include <algorithm>

namespace freenil {

AlgebraSpec::AlgebraSpec(std::string name, std::vector<std::string> labels, Constants constants)
    : name_(std::move(name)), labels_(std::move(labels)), constants_(std::move(constants)) {
  const std::size_t n = labels_.size();
  if (n == 0)
    throw MalformedSpecError("algebra has an empty basis");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j])
        throw MalformedSpecError("duplicate basis label '" + labels_[i] + "'");
  table_.assign(n * n, Vec(n));
  for (const auto &[ij, v] : constants_) {
    const auto [i, j] = ij;
    if (i >= n || j >= n)
      throw MalformedSpecError("structure constant index out of range");
    if (i >= j)
      throw MalformedSpecError("structure constants must be given for pairs i < j");
    if (v.size() != n)
      throw MalformedSpecError("product vector has the wrong length");
    table_[i * n + j] = v;
    for (std::size_t k = 0; k < n; ++k)
      table_[j * n + i][k] = -v[k];
  }
}

std::optional<std::size_t> AlgebraSpec::index_of(const std::string &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Vec AlgebraSpec::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("vector length does not match algebra dimension");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0 || i == j)
        continue;
      const Scalar f = x[i] * y[j];
      const Vec &c = bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0)
          out[k] += f * c[k];
    }
  }
  return out;
}

AlgebraSpec spec_of(const FreeLieAlgebra &a) {
  const std::size_t n = a.dim();
  std::vector<std::string> labels;
  for (const auto &w : a.basis().words())
    labels.push_back(w.to_string());
  AlgebraSpec::Constants cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto &sv = a.bracket_basis(i, j);
      if (sv.empty())
        continue;
      Vec v(n);
      for (const auto &[k, c] : sv)
        v[k] = c;
      cs.emplace(std::pair{i, j}, std::move(v));
    }
  return AlgebraSpec("n_{" + std::to_string(a.d()) + "," + std::to_string(a.t()) + "}", std::move(labels),
                     std::move(cs));
}

bool validate_spec(const AlgebraSpec &a) {
  const std::size_t n = a.dim();
  auto unit = [n](std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        Vec s = a.bracket(a.bracket_basis(i, j), unit(k));
        const Vec t2 = a.bracket(a.bracket_basis(j, k), unit(i));
        const Vec t3 = a.bracket(a.bracket_basis(k, i), unit(j));
        for (std::size_t m = 0; m < n; ++m)
          s[m] += t2[m] + t3[m];
        if (!is_zero(s))
          return false;
      }
  return true;
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto &s : terms)
    out.push_back(s.dim());
  return out;
}

SeriesReport lower_central_series(const AlgebraSpec &a) {
  const std::size_t n = a.dim();
  SeriesReport rep;
  rep.terms.push_back(Subspace::whole(n));
  while (rep.terms.back().dim() > 0) {
    const Subspace &cur = rep.terms.back();
    std::vector<Vec> vs;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t r = 0; r < cur.dim(); ++r) {
        Vec e(n);
        e[b] = 1;
        Vec v = a.bracket(e, cur.basis().row(r));
        if (!is_zero(v))
          vs.push_back(std::move(v));
      }
    Subspace next = Subspace::span(vs, n);
    if (next.dim() == cur.dim())
      throw PreconditionError("algebra '" + a.name() + "' is not nilpotent");
    rep.terms.push_back(std::move(next));
  }
  rep.nilindex = static_cast<unsigned>(rep.terms.size() - 1);
  rep.type = n - (rep.terms.size() > 1 ? rep.terms[1].dim() : 0);
  return rep;
}

std::vector<std::size_t> extract_msg(const AlgebraSpec &a) {
  const std::size_t n = a.dim();
  std::vector<Vec> derived;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(a.bracket_basis(i, j)))
        derived.push_back(a.bracket_basis(i, j));
  Subspace acc = Subspace::span(derived, n);
  std::vector<std::size_t> msg;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    if (member(acc, e))
      continue;
    msg.push_back(i);
    derived.push_back(std::move(e));
    acc = Subspace::span(derived, n);
  }
  return msg;
}

Subspace derivations_direct(const AlgebraSpec &a) {
  const std::size_t n = a.dim();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec &cij = a.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(n * n);
        // D[e_i,e_j] ...
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(cij[m]) != 0)
            row[var(k, m)] += cij[m];
        // ... - [D e_i, e_j] - [e_i, D e_j]
        for (std::size_t r = 0; r < n; ++r) {
          const Scalar &crj = a.bracket_basis(r, j)[k];
          if (sgn(crj) != 0)
            row[var(r, i)] -= crj;
          const Scalar &cir = a.bracket_basis(i, r)[k];
          if (sgn(cir) != 0)
            row[var(r, j)] -= cir;
        }
        if (!is_zero(row))
          rows.push_back(std::move(row));
      }
    }
  return kernel_of(Mat::from_rows(rows, n * n));
}

std::vector<Mat> derivation_basis(const AlgebraSpec &a) {
  const auto s = derivations_direct(a);
  std::vector<Mat> out;
  for (std::size_t r = 0; r < s.dim(); ++r)
    out.push_back(Mat::unflatten(s.basis().row(r), a.dim(), a.dim()));
  return out;
}

bool is_derivation_matrix(const AlgebraSpec &a, const Mat &m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n)
    throw DimensionError("matrix size does not match algebra dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = m.apply(a.bracket_basis(i, j));
      Vec ei(n), ej(n);
      ei[i] = 1;
      ej[j] = 1;
      const Vec r1 = a.bracket(m.column(i), ej);
      const Vec r2 = a.bracket(ei, m.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k])
          return false;
    }
  return true;
}

bool is_automorphism_matrix(const AlgebraSpec &a, const Mat &m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n)
    throw DimensionError("matrix size does not match algebra dimension");
  if (rank(m) != n)
    return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.apply(a.bracket_basis(i, j)) != a.bracket(m.column(i), m.column(j)))
        return false;
  return true;
}

std::vector<std::size_t> matrix_lie_series(const std::vector<Mat> &gens) {
  std::vector<std::size_t> dims;
  if (gens.empty())
    return {0};
  const std::size_t rows = gens.front().rows(), cols = gens.front().cols();
  auto to_mats = [&](const Subspace &s) {
    std::vector<Mat> out;
    for (std::size_t r = 0; r < s.dim(); ++r)
      out.push_back(Mat::unflatten(s.basis().row(r), rows, cols));
    return out;
  };
  std::vector<Vec> flat;
  for (const auto &g : gens)
    flat.push_back(g.entries());
  Subspace cur = Subspace::span(flat, rows * cols);
  const auto top = to_mats(cur);
  dims.push_back(cur.dim());
  while (cur.dim() > 0) {
    std::vector<Vec> next;
    for (const auto &b : to_mats(cur))
      for (const auto &x : top) {
        Mat c = x * b - b * x;
        if (!c.is_zero())
          next.push_back(c.entries());
      }
    Subspace s = Subspace::span(next, rows * cols);
    if (s.dim() == cur.dim())
      break;
    cur = std::move(s);
    dims.push_back(cur.dim());
  }
  return dims;
}

bool is_characteristically_nilpotent(const AlgebraSpec &a) {
  const auto basis = derivation_basis(a);
  if (matrix_lie_series(basis).back() != 0)
    return false;
  return std::all_of(basis.begin(), basis.end(), [](const Mat &m) { return is_nilpotent(m); });
}

} // namespace freenil
