#include "freenil/error.hpp"
#include "freenil/quotients.hpp"
#include "freenil/text.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace freenil;

namespace {

const char *yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::size_t> parse_msg(const AlgebraSpec &a, const std::string &text) {
  if (text.empty())
    return extract_msg(a);
  std::vector<std::size_t> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    const auto idx = a.index_of(tok);
    if (!idx)
      throw ParseError("unknown basis label '" + tok + "' in --msg", start);
    out.push_back(*idx);
    if (comma == std::string::npos)
      return out;
    start = comma + 1;
  }
}

// Inline matrix text, or the path of a file holding one.
Mat read_matrix(const std::string &arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec))
    return parse_matrix(read_file(arg));
  return parse_matrix(arg);
}

std::string join_labels(const AlgebraSpec &a, const std::vector<std::size_t> &idx) {
  std::string s;
  for (auto i : idx)
    s += (s.empty() ? "" : ",") + a.labels()[i];
  return s;
}

bool is_algebra_file(const std::string &text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line.erase(0, line.find_first_not_of(" \t"));
    if (line.rfind("basis:", 0) == 0)
      return true;
  }
  return false;
}

void print_elements(const FreeAlgebraPtr &a, const Subspace &s) {
  for (const auto &v : s.vectors())
    std::cout << "  " << format_element(LieElement(a, v)) << "\n";
}

unsigned top_degree(const LieElement &x) {
  unsigned m = 0;
  for (const auto &[i, c] : x.coords())
    m = std::max(m, x.algebra()->degree(i));
  return m;
}

int cmd_basis(unsigned d, unsigned t) {
  const auto a = build_free(d, t);
  for (const auto &w : a->basis().words())
    std::cout << w.to_string() << "\n";
  return 0;
}

int cmd_dims(unsigned d, unsigned t) {
  std::uint64_t total = 0;
  for (unsigned s = 1; s <= t; ++s) {
    const auto w = witt_dimension(d, s);
    total += w;
    std::cout << "degree " << s << ": " << w << "\n";
  }
  std::cout << "total: " << total << "\n";
  return 0;
}

int cmd_bracket(unsigned d, unsigned t, const std::string &lhs, const std::string &rhs) {
  const auto a = build_free(d, t);
  std::vector<std::string> warnings;
  const auto x = parse_element(lhs, a, &warnings);
  const auto y = parse_element(rhs, a, &warnings);
  for (const auto &w : warnings)
    std::cerr << "warning: " << w << "\n";
  if (!x.is_zero() && !y.is_zero() && top_degree(x) + top_degree(y) > t)
    std::cerr << "warning: bracket exceeds degree t = " << t << "; terms beyond degree t are zero\n";
  std::cout << format_element(bracket(x, y)) << "\n";
  return 0;
}

int cmd_present(unsigned d, unsigned t, const std::string &file, const std::string &msg_text) {
  const auto target = load_algebra_spec(file);
  const auto msg = parse_msg(target, msg_text);
  const auto a = build_free(d, t);
  const auto p = present(a, target, msg);
  std::cout << "presentation: n_{" << d << "," << t << "} -> " << target.name() << ", x1..x" << d << " -> "
            << join_labels(target, msg) << "\n";
  std::cout << "kernel dimension: " << p.kernel.dim() << "\n";
  std::cout << "kernel basis:\n";
  print_elements(a, p.kernel.space());
  std::cout << "homogeneous: " << yes_no(is_homogeneous(p.kernel)) << "\n";
  std::cout << "representatives:";
  for (auto i : p.quotient.rep_indices)
    std::cout << " " << a->basis()[i].to_string();
  std::cout << "\n";
  return 0;
}

int cmd_der(const std::string &file) {
  const auto spec = load_algebra_spec(file);
  const auto basis = derivation_basis(spec);
  std::cout << "dim Der " << spec.name() << ": " << basis.size() << "\n";
  for (const auto &D : basis)
    std::cout << format_matrix(D) << "\n";
  return 0;
}

int cmd_quotient_der(unsigned d, unsigned t, const std::string &file, const std::string &msg_text) {
  const auto target = load_algebra_spec(file);
  const auto p = present(build_free(d, t), target, parse_msg(target, msg_text));
  const auto preserving = der_preserving(p.kernel).dim();
  const auto into = der_into(p.kernel).dim();
  const auto induced = induced_der_basis(p.quotient);
  std::cout << "dim Der_T: " << preserving << "\n";
  std::cout << "dim Der_{n,T}: " << into << "\n";
  std::cout << "dim Der " << target.name() << ": " << induced.size() << "\n";
  for (const auto &D : induced)
    std::cout << format_matrix(p.to_target_basis(D)) << "\n";
  return 0;
}

int cmd_classify(const std::string &file, const std::string &msg_text) {
  const auto spec = load_algebra_spec(file);
  if (!validate_spec(spec))
    throw PreconditionError("'" + spec.name() + "' fails the Jacobi identity");
  const auto series = lower_central_series(spec);
  const auto msg = parse_msg(spec, msg_text);
  std::cout << "name: " << spec.name() << "\n";
  std::cout << "dimension: " << spec.dim() << "\n";
  std::cout << "lower central series:";
  for (auto n : series.dims())
    std::cout << " " << n;
  std::cout << "\n";
  std::cout << "type: " << series.type << "\n";
  std::cout << "nilindex: " << series.nilindex << "\n";
  std::cout << "generators: " << join_labels(spec, msg) << "\n";
  std::cout << "dim Der: " << derivations_direct(spec).dim() << "\n";
  if (series.type >= 2) {
    const auto a = build_free(static_cast<unsigned>(series.type), series.nilindex);
    std::cout << "quasi-cyclic: " << yes_no(is_homogeneous(kernel_of_presentation(a, spec, msg))) << "\n";
  } else {
    std::cout << "quasi-cyclic: " << yes_no(true) << "\n";
  }
  std::cout << "characteristically nilpotent: " << yes_no(is_characteristically_nilpotent(spec)) << "\n";
  return 0;
}

Ideal load_ideal(const FreeAlgebraPtr &a, const std::string &file, const std::string &msg_text) {
  const std::string text = read_file(file);
  if (is_algebra_file(text)) {
    auto stem = std::filesystem::path(file).stem().string();
    const auto target = parse_algebra_spec(text, stem);
    return kernel_of_presentation(a, target, parse_msg(target, msg_text));
  }
  std::vector<LieElement> gens;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    gens.push_back(parse_element(line, a));
  }
  return ideal_from_generators(a, gens);
}

int cmd_aut_check(unsigned d, unsigned t, const std::string &file, const std::string &matrix,
                  const std::string &msg_text) {
  const auto a = build_free(d, t);
  const auto ideal = load_ideal(a, file, msg_text);
  const auto m = aut_membership(read_matrix(matrix), ideal);
  std::cout << "automorphism: " << yes_no(m.is_automorphism) << "\n";
  std::cout << "preserves ideal: " << yes_no(m.preserves_ideal) << "\n";
  std::cout << "trivial modulo ideal: " << yes_no(m.in_circ) << "\n";
  return 0;
}

int cmd_lift(unsigned d, unsigned t, const std::string &file, const std::string &matrix, const std::string &msg_text) {
  const auto target = load_algebra_spec(file);
  const auto p = present(build_free(d, t), target, parse_msg(target, msg_text));
  const Mat hat = read_matrix(matrix);
  if (hat.rows() != target.dim() || hat.cols() != target.dim())
    throw DimensionError("matrix must be " + std::to_string(target.dim()) + " x " + std::to_string(target.dim()));
  std::cout << format_matrix(lift_automorphism(p.quotient, p.to_quotient_basis(hat))) << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact computations in free nilpotent Lie algebras and their quotients"};
  app.require_subcommand(1);
  unsigned d = 0, t = 0;
  std::string file, lhs, rhs, matrix, msg;

  auto add_dt = [&](CLI::App *c) {
    c->add_option("d", d, "number of generators")->required()->check(CLI::Range(2u, 64u));
    c->add_option("t", t, "nilpotency step")->required()->check(CLI::Range(1u, 64u));
  };
  auto add_msg = [&](CLI::App *c) {
    c->add_option("--msg", msg, "generator images, comma-separated basis labels (default: first-fit)");
  };

  auto *basis = app.add_subcommand("basis", "list the Hall basis of n_{d,t}");
  add_dt(basis);
  auto *dims = app.add_subcommand("dims", "graded dimensions of n_{d,t}");
  add_dt(dims);
  auto *br = app.add_subcommand("bracket", "bracket two elements of n_{d,t}");
  add_dt(br);
  br->add_option("x", lhs)->required();
  br->add_option("y", rhs)->required();
  auto *pres = app.add_subcommand("present", "kernel ideal of n_{d,t} -> algebra");
  add_dt(pres);
  pres->add_option("file", file, "algebra file")->required();
  add_msg(pres);
  auto *der = app.add_subcommand("der", "derivation algebra by direct solve");
  der->add_option("file", file, "algebra file")->required();
  auto *qder = app.add_subcommand("quotient-der", "derivations induced from n_{d,t}");
  add_dt(qder);
  qder->add_option("file", file, "algebra file")->required();
  add_msg(qder);
  auto *cls = app.add_subcommand("classify", "series, type, nilindex and classification flags");
  cls->add_option("file", file, "algebra file")->required();
  add_msg(cls);
  auto *aut = app.add_subcommand("aut-check", "automorphism and ideal membership of a matrix");
  add_dt(aut);
  aut->add_option("file", file, "ideal file (one generator per line) or algebra file")->required();
  aut->add_option("--matrix", matrix, "matrix text or file")->required();
  add_msg(aut);
  auto *lift = app.add_subcommand("lift", "lift an automorphism of the algebra to n_{d,t}");
  add_dt(lift);
  lift->add_option("file", file, "algebra file")->required();
  lift->add_option("--matrix", matrix, "matrix text or file, in the algebra's basis")->required();
  add_msg(lift);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*basis)
      return cmd_basis(d, t);
    if (*dims)
      return cmd_dims(d, t);
    if (*br)
      return cmd_bracket(d, t, lhs, rhs);
    if (*pres)
      return cmd_present(d, t, file, msg);
    if (*der)
      return cmd_der(file);
    if (*qder)
      return cmd_quotient_der(d, t, file, msg);
    if (*cls)
      return cmd_classify(file, msg);
    if (*aut)
      return cmd_aut_check(d, t, file, matrix, msg);
    if (*lift)
      return cmd_lift(d, t, file, matrix, msg);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
