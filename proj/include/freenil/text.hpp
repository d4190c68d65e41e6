#ifndef FREENIL_TEXT_HPP
#define FREENIL_TEXT_HPP

// Text formats.
//
// Elements of n_{d,t}:
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := rational '*' atom | atom | '0'
//   atom := 'x'<n> | '[' expr ',' expr ']'
// Whitespace is ignored. Brackets are evaluated in the Hall basis.
//
// Algebra files (line oriented, '#' starts a comment):
//   name: n2                      (optional)
//   basis: u1 u2 u3 u4 u5
//   [u1,u3] = u5
//   [u2,u4] = u5
// Products are listed for pairs earlier-label < later-label only; omitted
// pairs are zero.
//
// Matrices: comma-separated rational entries, row-major, rows separated by
// ';' (newlines are accepted as row separators too).

#include "freenil/exactlin.hpp"
#include "freenil/free_lie.hpp"
#include "freenil/lie_algebra.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace freenil {

// Throws ParseError (with position) on syntax errors and unknown generators.
// A bracket whose degree exceeds t evaluates to zero; a note is appended to
// `warnings` when it is given.
LieElement parse_element(std::string_view src, const FreeAlgebraPtr &a, std::vector<std::string> *warnings = nullptr);
// Terms in basis order, unit coefficients suppressed; "0" for zero.
std::string format_element(const LieElement &x);

// A linear combination of labels, e.g. "-e8" or "2*u5 + 1/2*u1".
Vec parse_linear_combination(std::string_view src, const std::vector<std::string> &labels);
std::string format_linear_combination(std::span<const Scalar> v, const std::vector<std::string> &labels);

AlgebraSpec parse_algebra_spec(std::string_view text, std::string default_name = "algebra");
AlgebraSpec load_algebra_spec(const std::string &path);
std::string format_algebra_spec(const AlgebraSpec &a);

Mat parse_matrix(std::string_view text);
std::string format_matrix(const Mat &m);

std::string read_file(const std::string &path);

} // namespace freenil

#endif
