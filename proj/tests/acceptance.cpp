// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [path-to-freenil-cli]
//
// With a CLI path, criterion 1 also compares the `basis` command output.

#include "freenil/free_maps.hpp"
#include "freenil/quotients.hpp"
#include "freenil/text.hpp"
#include "support.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace freenil;
using freenil::testing::golden_path;
using freenil::testing::read_lines;
using freenil::testing::Rng;

namespace {

std::string cli_path;

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      notes << "\n    failed: " << what;
    }
  }
};

AlgebraSpec load(const char *name) { return load_algebra_spec(freenil::testing::data_path(name)); }

LieElement el(const FreeAlgebraPtr &a, const std::string &s) { return parse_element(s, a); }

Scalar pow_q(const Scalar &x, unsigned k) {
  Scalar r = 1;
  while (k--)
    r *= x;
  return r;
}

Subspace span_of(const std::vector<Mat> &ms, std::size_t n) {
  std::vector<Vec> flat;
  for (const auto &m : ms)
    flat.push_back(m.entries());
  return Subspace::span(flat, n * n);
}

std::vector<std::string> run_lines(const std::string &cmd) {
  std::vector<std::string> out;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return out;
  std::string cur;
  for (int c; (c = std::fgetc(p)) != EOF;) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += static_cast<char>(c);
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  if (pclose(p) != 0)
    out.push_back("<nonzero exit>");
  return out;
}

void hall_goldens(Check &c) {
  for (auto [d, t, n] : {std::tuple{2u, 6u, 23u}, {4u, 3u, 30u}, {6u, 2u, 21u}}) {
    const std::string tag = std::to_string(d) + "_" + std::to_string(t);
    const auto golden = read_lines(golden_path("hall_" + tag + ".txt"));
    c.expect(golden.size() == n, "golden " + tag + " has " + std::to_string(n) + " words");
    std::vector<std::string> words;
    const auto basis = hall_basis(d, t);
    for (const auto &w : basis.words())
      words.push_back(w.to_string());
    c.expect(words == golden, "hall_basis(" + tag + ") matches golden");
    if (!cli_path.empty())
      c.expect(run_lines(cli_path + " basis " + std::to_string(d) + " " + std::to_string(t)) == golden,
               "cli basis " + tag + " matches golden");
  }
}

void witt(Check &c) {
  const std::uint64_t expected[] = {2, 1, 2, 3, 6, 9};
  for (unsigned s = 1; s <= 6; ++s)
    c.expect(witt_dimension(2, s) == expected[s - 1], "witt(2," + std::to_string(s) + ")");
  c.expect(witt_dimension(4, 3) == 20, "witt(4,3) = 20");
  for (auto [d, t] : {std::pair{2u, 6u}, {4u, 3u}, {6u, 2u}}) {
    const auto b = hall_basis(d, t);
    for (unsigned s = 1; s <= t; ++s) {
      const auto [lo, hi] = b.degree_range(s);
      c.expect(hi - lo == witt_dimension(d, s), "degree count matches witt");
    }
  }
}

void assoc_oracle(Check &c) {
  for (auto [d, t] : {std::pair{2u, 4u}, {3u, 3u}, {4u, 2u}}) {
    const auto a = build_free(d, t);
    const auto &b = a->basis();
    bool all = true;
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j)
        all = all && assoc_embed(bracket_words(a, b[i], b[j])) ==
                         assoc_commutator(assoc_embed(b[i], t), assoc_embed(b[j], t), t);
    c.expect(all, "bracket agrees with commutator on all pairs");
    std::map<std::vector<unsigned>, std::size_t> col;
    std::vector<AssocElement> imgs;
    for (const auto &w : b.words()) {
      imgs.push_back(assoc_embed(w, t));
      for (const auto &[k, v] : imgs.back())
        col.emplace(k, col.size());
    }
    Mat m(imgs.size(), col.size());
    for (std::size_t r = 0; r < imgs.size(); ++r)
      for (const auto &[k, v] : imgs[r])
        m(r, col[k]) = v;
    c.expect(rank(m) == a->dim(), "Hall basis images independent");
  }
}

void kernels(Check &c) {
  auto check = [&](const Ideal &k, std::size_t dim, const char *golden, const char *tag) {
    c.expect(k.dim() == dim, std::string(tag) + " kernel dimension");
    const auto gens = read_lines(golden_path(golden));
    std::vector<Vec> vs;
    for (const auto &g : gens) {
      c.expect(k.contains(el(k.algebra(), g)), std::string(tag) + " contains " + g);
      vs.push_back(el(k.algebra(), g).dense());
    }
    c.expect(Subspace::span(vs, k.algebra()->dim()) == k.space(), std::string(tag) + " listed generators span");
  };
  check(kernel_of_presentation(build_free(4, 2), load("n2.alg"), {0, 1, 2, 3}), 5, "kernel_n2.txt", "n2");
  // The n1 listing corresponds to x1..x4 -> e4..e1; the kernel has the
  // same dimension for either order.
  const auto a43 = build_free(4, 3);
  c.expect(kernel_of_presentation(a43, load("n1.alg"), {0, 1, 2, 3}).dim() == 22, "n1 kernel dimension (e1..e4)");
  check(kernel_of_presentation(a43, load("n1.alg"), {3, 2, 1, 0}), 22, "kernel_n1.txt", "n1");
  check(kernel_of_presentation(build_free(2, 4), load("n3.alg"), {0, 1}), 3, "kernel_n3.txt", "n3");
}

void homogeneity(Check &c) {
  const auto a43 = build_free(4, 3);
  c.expect(is_homogeneous(kernel_of_presentation(build_free(4, 2), load("n2.alg"), {0, 1, 2, 3})),
           "n2 kernel homogeneous");
  c.expect(!is_homogeneous(kernel_of_presentation(a43, load("n1.alg"), {0, 1, 2, 3})), "n1 kernel not homogeneous");
  c.expect(!is_homogeneous(kernel_of_presentation(a43, load("n1.alg"), {3, 2, 1, 0})),
           "n1 kernel (reversed) not homogeneous");
  c.expect(!is_homogeneous(kernel_of_presentation(build_free(2, 4), load("n3.alg"), {0, 1})),
           "n3 kernel not homogeneous");
}

void transfer_dims(Check &c) {
  const auto k3 = kernel_of_presentation(build_free(2, 4), load("n3.alg"), {0, 1});
  c.expect(der_preserving(k3).dim() == 14, "n3 der_preserving = 14");
  c.expect(der_into(k3).dim() == 6, "n3 der_into = 6");
  const auto k2 = kernel_of_presentation(build_free(4, 2), load("n2.alg"), {0, 1, 2, 3});
  const auto pres = der_preserving(k2);
  c.expect(pres.dim() == 35, "n2 der_preserving = 35");
  c.expect(der_into(k2).dim() == 20, "n2 der_into = 20");
  std::vector<std::size_t> gl;
  for (std::size_t i = 0; i < 16; ++i)
    gl.push_back(i);
  auto row = [](std::initializer_list<std::pair<int, int>> terms) {
    Vec v(16);
    for (auto [idx, coef] : terms)
      v[idx - 1] = coef;
    return v;
  };
  const Mat constraints = Mat::from_rows({row({{12, 1}, {5, 1}}), row({{13, 1}, {10, -1}}), row({{7, 1}, {4, -1}}),
                                          row({{15, 1}, {2, 1}}), row({{16, 1}, {1, -1}, {6, 1}, {11, -1}})},
                                         16);
  c.expect(project(pres, gl) == kernel_of(constraints), "gl block constraints");
}

void oracle_equivalence(Check &c) {
  for (auto [file, d, t] : {std::tuple{"n1.alg", 4u, 3u}, {"n2.alg", 4u, 2u}, {"n3.alg", 2u, 4u}}) {
    const auto target = load(file);
    const auto p = present(build_free(d, t), target, extract_msg(target));
    const auto induced = induced_der_basis(p.quotient);
    c.expect(span_of(induced, p.quotient.dim()) == derivations_direct(p.quotient.spec),
             std::string(file) + " induced derivations equal direct solve");
    c.expect(induced.size() == derivations_direct(target).dim(), std::string(file) + " dimension matches target");
  }
}

void classifications(Check &c) {
  const auto n1 = load("n1.alg");
  c.expect(is_characteristically_nilpotent(n1), "n1 characteristically nilpotent");
  for (const auto &D : derivation_basis(n1))
    c.expect(is_nilpotent(D), "n1 derivation basis matrix nilpotent");
  c.expect(!is_characteristically_nilpotent(load("n2.alg")), "n2 not characteristically nilpotent");
  homogeneity(c);
}

void weighted_scalings(Check &c) {
  const auto a = build_free(2, 4);
  const auto p = present(a, load("n3.alg"), {0, 1});
  const auto &q = p.quotient;
  c.expect(aut_membership(Mat::identity(a->dim()), q.ideal).preserves_ideal, "lambda = 1 preserves");
  for (const Scalar &lambda : {Scalar(2), Scalar(3), Scalar(-1), Scalar(1, 2)}) {
    const std::string tag = " (lambda = " + lambda.get_str() + ")";
    c.expect(!aut_membership(extend_homomorphism(GeneratorMap::scaled_identity(a, lambda)), q.ideal).preserves_ideal,
             "uniform scaling does not preserve" + tag);
    const Mat phi = extend_homomorphism(GeneratorMap(a, {lambda * el(a, "x1"), pow_q(lambda, 2) * el(a, "x2")}));
    c.expect(aut_membership(phi, q.ideal).preserves_ideal, "weighted scaling preserves" + tag);
    const Mat hat = induce_automorphism(phi, q);
    // Representatives are x2, x1, [x1,x2], [[x1,x2],x2], [[x1,x2],x1].
    const Vec reps{pow_q(lambda, 2), lambda, pow_q(lambda, 3), pow_q(lambda, 5), pow_q(lambda, 4)};
    c.expect(hat == Mat::diagonal(reps), "induced diagonal" + tag);
    const Vec z{lambda, pow_q(lambda, 2), pow_q(lambda, 3), pow_q(lambda, 4), pow_q(lambda, 5)};
    c.expect(p.to_target_basis(hat) == Mat::diagonal(z), "induced diagonal on z1..z5" + tag);
  }
}

void diagonal_maps(Check &c) {
  const auto n2 = load("n2.alg");
  for (const Scalar &l : {Scalar(0), Scalar(1), Scalar(5)}) {
    const Vec d{l, l, l, l, 2 * l};
    c.expect(is_derivation_matrix(n2, Mat::diagonal(d)), "derivation for lambda = " + l.get_str());
  }
  for (const Scalar &l : {Scalar(1), Scalar(2), Scalar(-3)}) {
    const Vec d{l, l, l, l, l * l};
    c.expect(is_automorphism_matrix(n2, Mat::diagonal(d)), "automorphism for lambda = " + l.get_str());
  }
  c.expect(!is_automorphism_matrix(n2, Mat::diagonal(Vec(5))), "not an automorphism for lambda = 0");
}

Mat exp_nilpotent(const Mat &n) {
  Mat out = Mat::identity(n.rows()), term = Mat::identity(n.rows());
  for (unsigned k = 1; k <= n.rows(); ++k) {
    term = Scalar(1, k) * (term * n);
    out = out + term;
  }
  return out;
}

void properties(Check &c) {
  constexpr int cases = 100;
  Rng rng(20261015);
  auto count = [&](const std::string &name, const std::function<bool()> &one) {
    int failures = 0;
    for (int i = 0; i < cases; ++i)
      failures += one() ? 0 : 1;
    c.expect(failures == 0, name + ": " + std::to_string(failures) + " of " + std::to_string(cases) + " failed");
  };
  const auto a = build_free(3, 3);
  auto vec = [&] { return rng.vec(a->dim(), 0.5); };
  auto seed = [&] { return GeneratorMap::from_seed_matrix(a, rng.mat(a->dim(), a->d(), 0.5)); };

  count("Leibniz", [&] {
    const Mat D = extend_derivation(seed());
    const Vec x = vec(), y = vec();
    const Vec lhs = D.apply(a->bracket(x, y));
    const Vec r1 = a->bracket(D.apply(x), y), r2 = a->bracket(x, D.apply(y));
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i] != r1[i] + r2[i])
        return false;
    return true;
  });
  count("multiplicativity", [&] {
    const Mat P = extend_homomorphism(seed());
    const Vec x = vec(), y = vec();
    return P.apply(a->bracket(x, y)) == a->bracket(P.apply(x), P.apply(y));
  });
  count("Jacobi", [&] {
    const auto x = rng.element(a), y = rng.element(a), z = rng.element(a);
    return (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero();
  });
  const Mat G = grading_derivation(*a);
  count("der_decomposition", [&] {
    const Mat D = extend_derivation(seed());
    const auto p = der_decomposition(a, D);
    return p.semisimple + p.id_coeff * G + p.nilpotent == D && is_nilpotent(p.nilpotent);
  });
  count("factor_gl_nl", [&] {
    GeneratorMap phi = seed();
    while (rank(phi.linear_part()) != a->d())
      phi = seed();
    const auto f = factor_gl_nl(phi);
    return extend_homomorphism(f.nl_seed) * extend_homomorphism(f.gl_seed) == extend_homomorphism(phi);
  });

  const auto a24 = build_free(2, 4);
  const auto q = present(a24, load("n3.alg"), {0, 1}).quotient;
  const Vec weights{2, 1, 3, 5, 4};
  const Mat grading = Mat::diagonal(weights);
  const auto der = derivation_basis(q.spec);
  count("lift round trip", [&] {
    Mat D(q.dim(), q.dim());
    for (const auto &b : der)
      D = D + rng.scalar(0.4) * b;
    const Mat N = D - (D.trace() / grading.trace()) * grading;
    const Scalar lambda = rng.nonzero();
    Vec diag;
    for (auto w : weights)
      diag.push_back(pow_q(lambda, static_cast<unsigned>(w.get_num().get_ui())));
    const Mat hat = Mat::diagonal(diag) * exp_nilpotent(N);
    const Mat phi = lift_automorphism(q, hat);
    const auto m = aut_membership(phi, q.ideal);
    return m.is_automorphism && m.preserves_ideal && induce_automorphism(phi, q) == hat;
  });
  const auto a25 = build_free(2, 5);
  count("parse/format", [&] {
    const auto x = rng.element(a25, 0.5);
    return parse_element(format_element(x), a25) == x;
  });
}

void dimension_audit(Check &c) {
  for (auto [d, t, total, ss, nl] : {std::tuple{2u, 4u, 16u, 3u, 12u}, {4u, 2u, 40u, 15u, 24u}}) {
    const auto a = build_free(d, t);
    const auto basis = derivation_basis(spec_of(*a));
    std::vector<Mat> s, n;
    std::vector<Vec> ids;
    for (const auto &D : basis) {
      const auto p = der_decomposition(a, D);
      s.push_back(p.semisimple);
      n.push_back(p.nilpotent);
      ids.push_back(Vec{p.id_coeff});
    }
    const std::string tag = "(" + std::to_string(d) + "," + std::to_string(t) + ")";
    c.expect(basis.size() == total, "dim Der " + tag);
    c.expect(span_of(s, a->dim()).dim() == ss, "semisimple part " + tag);
    c.expect(Subspace::span(ids, 1).dim() == 1, "grading part " + tag);
    c.expect(span_of(n, a->dim()).dim() == nl, "nilpotent part " + tag);
    c.expect(ss + 1 + nl == total, "parts add up " + tag);
  }
}

} // namespace

int main(int argc, char **argv) {
  if (argc > 1)
    cli_path = argv[1];
  const std::vector<std::pair<const char *, std::function<void(Check &)>>> criteria{
      {"Hall basis goldens (2,6) (4,3) (6,2)", hall_goldens},
      {"Witt dimensions", witt},
      {"associative oracle", assoc_oracle},
      {"kernel ideals of n1, n2, n3", kernels},
      {"homogeneity flags", homogeneity},
      {"derivation transfer dimensions and gl constraints", transfer_dims},
      {"induced derivations equal direct solve", oracle_equivalence},
      {"characteristic nilpotency and quasi-cyclic flags", classifications},
      {"weighted scalings on n3", weighted_scalings},
      {"diagonal maps on n2", diagonal_maps},
      {"property suites", properties},
      {"derivation dimension audit", dimension_audit},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << c.notes.str() << "\n";
    failed += c.ok ? 0 : 1;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
