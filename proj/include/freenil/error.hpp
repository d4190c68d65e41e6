#ifndef FREENIL_ERROR_HPP
#define FREENIL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freenil {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit (vector length, matrix size, ambient dimension).
class DimensionError : public Error {
public:
  using Error::Error;
};

// A mathematical precondition fails: non-nilpotent algebra, non-invertible
// seed, ideal not contained in n^2, and so on.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// Structure constants refer to indices that do not exist, or a pair (i,j)
// is given with i >= j.
class MalformedSpecError : public Error {
public:
  using Error::Error;
};

// Text input could not be read. position() is a 0-based byte offset into the
// parsed string, or npos when no position applies.
class ParseError : public Error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string &what, std::size_t position = npos)
      : Error(position == npos ? what : what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace freenil

#endif
