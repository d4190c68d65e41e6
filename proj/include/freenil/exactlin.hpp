#ifndef FREENIL_EXACTLIN_HPP
#define FREENIL_EXACTLIN_HPP

// Exact rational linear algebra: dense matrices over Q, row reduction,
// kernels and a canonical (RREF) subspace representation.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freenil {

// GMP rationals are kept canonical (positive denominator, reduced) by every
// arithmetic operator.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

std::string to_string(const Scalar &q);
// Accepts "p", "-p", "p/q". Throws ParseError.
Scalar parse_scalar(std::string_view text);

bool is_zero(std::span<const Scalar> v);

class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(std::span<const Scalar> entries);
  // Rows must share a length; an empty list gives a 0 x cols matrix.
  static Mat from_rows(const std::vector<Vec> &rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec> &columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  // Row-major flattening, as used for matrix-valued subspaces.
  const Vec &entries() const noexcept { return data_; }
  static Mat unflatten(std::span<const Scalar> entries, std::size_t rows, std::size_t cols);

  Mat transpose() const;
  Vec apply(std::span<const Scalar> v) const;
  bool is_zero() const;
  Scalar trace() const;

  friend Mat operator*(const Mat &a, const Mat &b);
  friend Mat operator+(const Mat &a, const Mat &b);
  friend Mat operator-(const Mat &a, const Mat &b);
  friend Mat operator*(const Scalar &s, const Mat &a);
  friend bool operator==(const Mat &a, const Mat &b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(Mat m);
std::size_t rank(const Mat &m);
std::optional<Mat> inverse(const Mat &m);
Mat power(const Mat &m, unsigned k);
bool is_nilpotent(const Mat &m);

// A subspace of Q^n stored as the nonzero rows of its reduced row echelon
// form. Two subspaces are equal iff their stored matrices are equal.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace whole(std::size_t ambient);
  static Subspace span(const std::vector<Vec> &vectors, std::size_t ambient);
  static Subspace row_space(const Mat &m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat &basis() const noexcept { return basis_; }
  const std::vector<std::size_t> &pivot_cols() const noexcept { return pivots_; }
  std::vector<Vec> vectors() const;

  // Rows of a matrix N with N v = 0 exactly when v lies in the subspace.
  Mat annihilator() const;

  friend bool operator==(const Subspace &a, const Subspace &b) = default;

private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_of(const Mat &m);
bool member(const Subspace &s, std::span<const Scalar> v);
bool contains(const Subspace &outer, const Subspace &inner);
Subspace intersect(const Subspace &a, const Subspace &b);
Subspace sum(const Subspace &a, const Subspace &b);
// Image of s under the linear map m (column convention).
Subspace image(const Mat &m, const Subspace &s);
// Coordinates of the projection of s onto the listed coordinates.
Subspace project(const Subspace &s, std::span<const std::size_t> coords);

} // namespace freenil

#endif
