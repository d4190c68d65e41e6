#include "freenil/error.hpp"
#include "freenil/free_maps.hpp"
#include "freenil/lie_algebra.hpp"
#include "freenil/text.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace freenil;
using freenil::testing::data_path;

namespace {

AlgebraSpec load(const char *name) { return load_algebra_spec(data_path(name)); }

Mat diag(std::initializer_list<Scalar> xs) {
  const Vec v(xs);
  return Mat::diagonal(v);
}

} // namespace

TEST(AlgebraSpec, FixturesSatisfyJacobi) {
  for (const char *f : {"n1.alg", "n2.alg", "n3.alg"})
    EXPECT_TRUE(validate_spec(load(f))) << f;
}

TEST(AlgebraSpec, JacobiFailure) {
  // [e1,e2] = e3, [e1,e3] = e1.
  const AlgebraSpec bad("bad", {"e1", "e2", "e3"}, {{{0, 1}, Vec{0, 0, 1}}, {{0, 2}, Vec{1, 0, 0}}});
  EXPECT_FALSE(validate_spec(bad));
}

TEST(AlgebraSpec, Malformed) {
  EXPECT_THROW(AlgebraSpec("m", {"a", "b"}, {{{1, 0}, Vec{0, 1}}}), MalformedSpecError);
  EXPECT_THROW(AlgebraSpec("m", {"a", "b"}, {{{0, 2}, Vec{0, 1}}}), MalformedSpecError);
  EXPECT_THROW(AlgebraSpec("m", {"a", "b"}, {{{0, 1}, Vec{0, 1, 0}}}), MalformedSpecError);
  EXPECT_THROW(AlgebraSpec("m", {}, {}), MalformedSpecError);
  EXPECT_THROW(AlgebraSpec("m", {"a", "a"}, {}), MalformedSpecError);
}

TEST(AlgebraSpec, Antisymmetric) {
  const auto n1 = load("n1.alg");
  for (std::size_t i = 0; i < n1.dim(); ++i)
    for (std::size_t j = 0; j < n1.dim(); ++j) {
      Vec neg = n1.bracket_basis(j, i);
      for (auto &x : neg)
        x = -x;
      EXPECT_EQ(n1.bracket_basis(i, j), neg);
    }
  EXPECT_EQ(n1.bracket_basis(0, 4), (Vec{0, 0, 0, 0, 0, 0, 0, -1}));
}

TEST(Series, Fixtures) {
  const auto s1 = lower_central_series(load("n1.alg"));
  EXPECT_EQ(s1.dims(), (std::vector<std::size_t>{8, 4, 2, 0}));
  EXPECT_EQ(s1.nilindex, 3u);
  EXPECT_EQ(s1.type, 4u);
  const auto s2 = lower_central_series(load("n2.alg"));
  EXPECT_EQ(s2.dims(), (std::vector<std::size_t>{5, 1, 0}));
  EXPECT_EQ(s2.nilindex, 2u);
  EXPECT_EQ(s2.type, 4u);
  const auto s3 = lower_central_series(load("n3.alg"));
  EXPECT_EQ(s3.dims(), (std::vector<std::size_t>{5, 3, 2, 1, 0}));
  EXPECT_EQ(s3.nilindex, 4u);
  EXPECT_EQ(s3.type, 2u);
}

TEST(Series, FreeAlgebraMatchesGrading) {
  const auto a = build_free(2, 5);
  const auto s = lower_central_series(spec_of(*a));
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{14, 12, 11, 9, 6, 0}));
  EXPECT_EQ(s.nilindex, 5u);
}

TEST(Series, NotNilpotent) {
  // [e1,e2] = e2.
  const AlgebraSpec aff("aff", {"e1", "e2"}, {{{0, 1}, Vec{0, 1}}});
  EXPECT_THROW(lower_central_series(aff), PreconditionError);
}

TEST(Series, Abelian) {
  const AlgebraSpec ab("ab", {"e1", "e2"}, {});
  const auto s = lower_central_series(ab);
  EXPECT_EQ(s.dims(), (std::vector<std::size_t>{2, 0}));
  EXPECT_EQ(s.nilindex, 1u);
}

TEST(Msg, Fixtures) {
  EXPECT_EQ(extract_msg(load("n1.alg")), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(extract_msg(load("n2.alg")), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(extract_msg(load("n3.alg")), (std::vector<std::size_t>{0, 1}));
}

TEST(Derivations, FixtureDimensions) {
  EXPECT_EQ(derivations_direct(load("n1.alg")).dim(), 12u);
  EXPECT_EQ(derivations_direct(load("n2.alg")).dim(), 15u);
  EXPECT_EQ(derivations_direct(load("n3.alg")).dim(), 8u);
  EXPECT_EQ(derivations_direct(spec_of(*build_free(2, 4))).dim(), 16u);
}

TEST(Derivations, BasisSatisfiesLeibniz) {
  for (const char *f : {"n1.alg", "n2.alg", "n3.alg"}) {
    const auto a = load(f);
    for (const auto &D : derivation_basis(a))
      EXPECT_TRUE(is_derivation_matrix(a, D)) << f;
  }
}

TEST(Derivations, HandExamplesOnN2) {
  const auto n2 = load("n2.alg");
  EXPECT_TRUE(is_derivation_matrix(n2, diag({1, 1, 1, 1, 2})));
  EXPECT_FALSE(is_derivation_matrix(n2, diag({1, 1, 1, 1, 1})));
  EXPECT_TRUE(is_automorphism_matrix(n2, diag({2, 2, 2, 2, 4})));
  EXPECT_FALSE(is_automorphism_matrix(n2, diag({2, 2, 2, 2, 2})));
  EXPECT_FALSE(is_automorphism_matrix(n2, diag({0, 0, 0, 0, 0})));
  EXPECT_THROW(is_automorphism_matrix(n2, Mat::identity(4)), DimensionError);
}

TEST(Derivations, FreeAlgebraAgreesWithExtension) {
  // Der n_{2,4} computed from structure constants equals the span of the
  // extensions of all generator seeds.
  const auto a = build_free(2, 4);
  std::vector<Vec> extended;
  for (const auto &m : elementary_derivations(a))
    extended.push_back(m.entries());
  EXPECT_EQ(derivations_direct(spec_of(*a)), Subspace::span(extended, a->dim() * a->dim()));
}

TEST(CharacteristicNilpotency, Fixtures) {
  const auto n1 = load("n1.alg");
  EXPECT_TRUE(is_characteristically_nilpotent(n1));
  for (const auto &D : derivation_basis(n1))
    EXPECT_TRUE(is_nilpotent(D));
  EXPECT_FALSE(is_characteristically_nilpotent(load("n2.alg")));
  EXPECT_FALSE(is_characteristically_nilpotent(load("n3.alg")));
  EXPECT_FALSE(is_characteristically_nilpotent(AlgebraSpec("line", {"e1"}, {})));
}

TEST(MatrixLieSeries, Examples) {
  const Mat e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}}, h{{1, 0}, {0, -1}};
  EXPECT_EQ(matrix_lie_series({e, f, h}).back(), 3u);
  EXPECT_EQ(matrix_lie_series({e}).back(), 0u);
  const Mat a{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, b{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}};
  EXPECT_EQ(matrix_lie_series({a, b}), (std::vector<std::size_t>{2, 0}));
}
