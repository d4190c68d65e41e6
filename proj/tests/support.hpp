#ifndef FREENIL_TESTS_SUPPORT_HPP
#define FREENIL_TESTS_SUPPORT_HPP

#include "freenil/exactlin.hpp"
#include "freenil/free_lie.hpp"

#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace freenil::testing {

inline std::string data_path(const std::string &name) { return std::string(FREENIL_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string &name) { return std::string(FREENIL_GOLDEN_DIR) + "/" + name; }

inline std::vector<std::string> read_lines(const std::string &path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty())
      out.push_back(line);
  return out;
}

class Rng {
public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  // Small rationals, zero with probability `zero`.
  Scalar scalar(double zero = 0.3) {
    if (coin(zero))
      return 0;
    Scalar q(integer(-4, 4), integer(1, 3));
    q.canonicalize();
    return q;
  }
  Scalar nonzero() {
    Scalar q;
    while (q == 0)
      q = scalar(0.0);
    return q;
  }

  Vec vec(std::size_t n, double zero = 0.3) {
    Vec v(n);
    for (auto &x : v)
      x = scalar(zero);
    return v;
  }

  Mat mat(std::size_t rows, std::size_t cols, double zero = 0.3) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = scalar(zero);
    return m;
  }

  LieElement element(const FreeAlgebraPtr &a, double zero = 0.6) { return LieElement(a, vec(a->dim(), zero)); }

  std::mt19937 &engine() { return gen_; }

private:
  std::mt19937 gen_;
};

} // namespace freenil::testing

#endif
