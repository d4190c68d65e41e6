#include "freenil/exactlin.hpp"

#include "freenil/error.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace freenil {

std::string to_string(const Scalar &q) { return q.get_str(); }

Scalar parse_scalar(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("invalid rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, dn{std::string(den)};
  if (dn == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-')
    n = -n;
  Scalar q(n, dn);
  q.canonicalize();
  return q;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar &x) { return sgn(x) == 0; });
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(std::span<const Scalar> entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec> &columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    m.set_column(c, columns[c]);
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void Mat::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_)
    throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

Mat Mat::unflatten(std::span<const Scalar> entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols)
    throw DimensionError("flattened length does not match shape");
  Mat m(rows, cols);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_)
    throw DimensionError("matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0)
      continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (sgn((*this)(r, c)) != 0)
        out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

bool Mat::is_zero() const { return freenil::is_zero(data_); }

Scalar Mat::trace() const {
  if (!square())
    throw DimensionError("trace of a non-square matrix");
  Scalar s = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    s += (*this)(i, i);
  return s;
}

Mat operator*(const Mat &a, const Mat &b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product size mismatch");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a(i, k);
      if (sgn(aik) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0)
          out(i, j) += aik * b(k, j);
    }
  return out;
}

Mat operator+(const Mat &a, const Mat &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix sum size mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat &a, const Mat &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix difference size mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] -= b.data_[i];
  return out;
}

Mat operator*(const Scalar &s, const Mat &a) {
  Mat out = a;
  for (auto &x : out.data_)
    x *= s;
  return out;
}

RrefResult rref(Mat m) {
  RrefResult res;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && sgn(m(p, c)) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != lead)
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(p, j).swap(m(lead, j));
    const Scalar inv = 1 / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (sgn(m(lead, j)) != 0)
        m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, c)) == 0)
        continue;
      const Scalar f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(lead, j)) != 0)
          m(r, j) -= f * m(lead, j);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const Mat &m) { return rref(m).rank; }

std::optional<Mat> inverse(const Mat &m) {
  if (!m.square())
    throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Mat power(const Mat &m, unsigned k) {
  Mat out = Mat::identity(m.rows());
  for (unsigned i = 0; i < k; ++i)
    out = out * m;
  return out;
}

bool is_nilpotent(const Mat &m) {
  if (!m.square())
    throw DimensionError("nilpotency of a non-square matrix");
  return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(0, ambient);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) { return row_space(Mat::identity(ambient)); }

Subspace Subspace::span(const std::vector<Vec> &vectors, std::size_t ambient) {
  return row_space(Mat::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Mat &m) {
  auto r = rref(m);
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = Mat(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), s.basis_.row(i).begin());
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    out.emplace_back(basis_.row(i).begin(), basis_.row(i).end());
  return out;
}

Mat Subspace::annihilator() const { return kernel_of(basis_).basis(); }

Subspace kernel_of(const Mat &m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots)
    is_pivot[p] = true;
  std::vector<Vec> vs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivots[i]] = -r.reduced(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, m.cols());
}

bool member(const Subspace &s, std::span<const Scalar> v) {
  if (v.size() != s.ambient_dim())
    throw DimensionError("vector length does not match ambient dimension");
  Vec res(v.begin(), v.end());
  const auto &b = s.basis();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto p = s.pivot_cols()[i];
    if (sgn(res[p]) == 0)
      continue;
    const Scalar f = res[p];
    for (std::size_t j = p; j < res.size(); ++j)
      if (sgn(b(i, j)) != 0)
        res[j] -= f * b(i, j);
  }
  return is_zero(res);
}

bool contains(const Subspace &outer, const Subspace &inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw DimensionError("ambient dimension mismatch");
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!member(outer, inner.basis().row(i)))
      return false;
  return true;
}

Subspace sum(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("ambient dimension mismatch");
  auto vs = a.vectors();
  auto wb = b.vectors();
  vs.insert(vs.end(), wb.begin(), wb.end());
  return Subspace::span(vs, a.ambient_dim());
}

Subspace intersect(const Subspace &a, const Subspace &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  // Solve sum_i alpha_i a_i - sum_j beta_j b_j = 0, then map alpha back.
  Mat sys(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < n; ++k)
      sys(k, i) = a.basis()(i, k);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t k = 0; k < n; ++k)
      sys(k, a.dim() + j) = -b.basis()(j, k);
  const auto ker = kernel_of(sys);
  std::vector<Vec> vs;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Scalar &alpha = ker.basis()(r, i);
      if (sgn(alpha) == 0)
        continue;
      for (std::size_t k = 0; k < n; ++k)
        v[k] += alpha * a.basis()(i, k);
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, n);
}

Subspace image(const Mat &m, const Subspace &s) {
  if (m.cols() != s.ambient_dim())
    throw DimensionError("map does not act on the subspace's ambient space");
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < s.dim(); ++i)
    vs.push_back(m.apply(s.basis().row(i)));
  return Subspace::span(vs, m.rows());
}

Subspace project(const Subspace &s, std::span<const std::size_t> coords) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec v;
    v.reserve(coords.size());
    for (auto c : coords) {
      if (c >= s.ambient_dim())
        throw DimensionError("projection coordinate out of range");
      v.push_back(s.basis()(i, c));
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, coords.size());
}

} // namespace freenil
