#include "freenil/text.hpp"

#include "freenil/error.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace freenil {

namespace {

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Recursive-descent reader for sums of scaled atoms. Atoms are either labels
// (resolved by `resolve`) or brackets (evaluated by `bracket`, if allowed).
class ExprReader {
public:
  using Resolve = std::function<Vec(const std::string &, std::size_t)>;
  using Bracket = std::function<Vec(const Vec &, const Vec &, std::size_t)>;

  ExprReader(std::string_view src, std::size_t dim, Resolve resolve, Bracket bracket)
      : src_(src), dim_(dim), resolve_(std::move(resolve)), bracket_(std::move(bracket)) {}

  Vec parse_all() {
    Vec v = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    return v;
  }

private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Vec expr() {
    Vec acc(dim_);
    bool negate = false;
    if (peek() == '+' || peek() == '-')
      negate = src_[pos_++] == '-';
    for (;;) {
      Vec t = term();
      for (std::size_t i = 0; i < dim_; ++i)
        acc[i] += negate ? -t[i] : t[i];
      const char c = peek();
      if (c != '+' && c != '-')
        return acc;
      negate = c == '-';
      ++pos_;
    }
  }

  Vec term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '/'))
        ++pos_;
      Scalar s;
      try {
        s = parse_scalar(src_.substr(start, pos_ - start));
      } catch (const ParseError &e) {
        throw ParseError(e.what(), start);
      }
      if (peek() != '*') {
        if (sgn(s) != 0)
          throw ParseError("expected '*' after coefficient", pos_);
        return Vec(dim_);
      }
      ++pos_;
      Vec v = atom();
      for (auto &x : v)
        x *= s;
      return v;
    }
    return atom();
  }

  Vec atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '[') {
      if (!bracket_)
        throw ParseError("brackets are not allowed here", start);
      ++pos_;
      Vec x = expr();
      expect(',');
      Vec y = expr();
      expect(']');
      return bracket_(x, y, start);
    }
    if (!is_label_char(c))
      throw ParseError(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'", start);
    while (pos_ < src_.size() && is_label_char(src_[pos_]))
      ++pos_;
    return resolve_(std::string(src_.substr(start, pos_ - start)), start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t dim_;
  Resolve resolve_;
  Bracket bracket_;
};

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::string format_terms(std::span<const Scalar> v, const std::function<std::string(std::size_t)> &name) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int sg = sgn(v[i]);
    if (sg == 0)
      continue;
    if (out.empty())
      out += sg < 0 ? "-" : "";
    else
      out += sg < 0 ? " - " : " + ";
    const Scalar mag = abs(v[i]);
    if (mag != 1)
      out += mag.get_str() + "*";
    out += name(i);
  }
  return out.empty() ? "0" : out;
}

} // namespace

LieElement parse_element(std::string_view src, const FreeAlgebraPtr &a, std::vector<std::string> *warnings) {
  const std::size_t n = a->dim();
  auto resolve = [&](const std::string &tok, std::size_t pos) {
    bool ok = tok.size() > 1 && tok[0] == 'x';
    for (std::size_t i = 1; ok && i < tok.size(); ++i)
      ok = std::isdigit(static_cast<unsigned char>(tok[i])) != 0;
    if (!ok)
      throw ParseError("unknown generator '" + tok + "'", pos);
    const unsigned long g = std::stoul(tok.substr(1));
    if (g < 1 || g > a->d())
      throw ParseError("unknown generator '" + tok + "' (algebra has x1..x" + std::to_string(a->d()) + ")", pos);
    Vec v(n);
    v[a->basis().generator_position(static_cast<unsigned>(g))] = 1;
    return v;
  };
  auto max_degree = [&](const Vec &v) {
    unsigned m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(v[i]) != 0)
        m = std::max(m, a->degree(i));
    return m;
  };
  auto bracket = [&](const Vec &x, const Vec &y, std::size_t pos) {
    const unsigned dx = max_degree(x), dy = max_degree(y);
    if (dx > 0 && dy > 0 && dx + dy > a->t() && warnings)
      warnings->push_back("bracket at position " + std::to_string(pos) + " reaches degree " +
                          std::to_string(dx + dy) + " > t = " + std::to_string(a->t()) +
                          "; terms beyond degree t are zero");
    return a->bracket(x, y);
  };
  return LieElement(a, ExprReader(src, n, resolve, bracket).parse_all());
}

std::string format_element(const LieElement &x) {
  if (!x.algebra())
    return "0";
  const auto &b = x.algebra()->basis();
  return format_terms(x.dense(), [&](std::size_t i) { return b[i].to_string(); });
}

Vec parse_linear_combination(std::string_view src, const std::vector<std::string> &labels) {
  auto resolve = [&](const std::string &tok, std::size_t pos) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == tok) {
        Vec v(labels.size());
        v[i] = 1;
        return v;
      }
    throw ParseError("unknown basis label '" + tok + "'", pos);
  };
  return ExprReader(src, labels.size(), resolve, nullptr).parse_all();
}

std::string format_linear_combination(std::span<const Scalar> v, const std::vector<std::string> &labels) {
  return format_terms(v, [&](std::size_t i) { return labels[i]; });
}

AlgebraSpec parse_algebra_spec(std::string_view text, std::string default_name) {
  std::string name = std::move(default_name);
  std::vector<std::string> labels;
  AlgebraSpec::Constants cs;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string &msg) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    if (line.rfind("name:", 0) == 0) {
      name = strip(line.substr(5));
      continue;
    }
    if (line.rfind("basis:", 0) == 0) {
      if (!labels.empty())
        throw fail("basis declared twice");
      std::istringstream ls(line.substr(6));
      std::string tok;
      while (ls >> tok) {
        for (char c : tok)
          if (!is_label_char(c))
            throw fail("invalid basis label '" + tok + "'");
        labels.push_back(tok);
      }
      if (labels.empty())
        throw fail("empty basis");
      std::set<std::string> uniq(labels.begin(), labels.end());
      if (uniq.size() != labels.size())
        throw fail("duplicate basis label");
      continue;
    }
    if (labels.empty())
      throw fail("products given before the 'basis:' line");
    const auto eq = line.find('=');
    if (line.front() != '[' || eq == std::string::npos)
      throw fail("expected '[a,b] = ...'");
    const std::string lhs = strip(line.substr(0, eq));
    const auto comma = lhs.find(',');
    if (lhs.back() != ']' || comma == std::string::npos)
      throw fail("expected '[a,b]' on the left-hand side");
    const std::string l1 = strip(lhs.substr(1, comma - 1));
    const std::string l2 = strip(lhs.substr(comma + 1, lhs.size() - comma - 2));
    std::size_t i = labels.size(), j = labels.size();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] == l1)
        i = k;
      if (labels[k] == l2)
        j = k;
    }
    if (i == labels.size() || j == labels.size())
      throw fail("unknown basis label in '" + lhs + "'");
    if (i >= j)
      throw fail("products must be listed as [a,b] with a before b in the basis");
    Vec v;
    try {
      v = parse_linear_combination(line.substr(eq + 1), labels);
    } catch (const ParseError &e) {
      throw fail(e.what());
    }
    if (!cs.emplace(std::pair{i, j}, std::move(v)).second)
      throw fail("product " + lhs + " given twice");
  }
  if (labels.empty())
    throw ParseError("missing 'basis:' line");
  for (auto it = cs.begin(); it != cs.end();)
    it = is_zero(it->second) ? cs.erase(it) : std::next(it);
  return AlgebraSpec(name, std::move(labels), std::move(cs));
}

std::string read_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

AlgebraSpec load_algebra_spec(const std::string &path) {
  auto stem = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return parse_algebra_spec(read_file(path), stem);
}

std::string format_algebra_spec(const AlgebraSpec &a) {
  std::string out = "name: " + a.name() + "\nbasis:";
  for (const auto &l : a.labels())
    out += " " + l;
  out += "\n";
  for (const auto &[ij, v] : a.constants())
    out += "[" + a.labels()[ij.first] + "," + a.labels()[ij.second] + "] = " +
           format_linear_combination(v, a.labels()) + "\n";
  return out;
}

Mat parse_matrix(std::string_view text) {
  std::vector<Vec> rows;
  std::string cur;
  auto flush_row = [&](std::size_t pos) {
    const std::string row = strip(cur);
    cur.clear();
    if (row.empty())
      return;
    Vec v;
    std::size_t start = 0;
    for (;;) {
      const auto comma = row.find(',', start);
      const std::string tok = strip(row.substr(start, comma - start));
      try {
        v.push_back(parse_scalar(tok));
      } catch (const ParseError &e) {
        throw ParseError(std::string("matrix row ") + std::to_string(rows.size() + 1) + ": " + e.what(), pos);
      }
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    if (!rows.empty() && v.size() != rows.front().size())
      throw ParseError("matrix rows have different lengths", pos);
    rows.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ';' || text[i] == '\n')
      flush_row(i);
    else
      cur += text[i];
  }
  flush_row(text.size());
  if (rows.empty())
    throw ParseError("empty matrix");
  return Mat::from_rows(rows, rows.front().size());
}

std::string format_matrix(const Mat &m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r)
      out += ";";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c)
        out += ",";
      out += m(r, c).get_str();
    }
  }
  return out;
}

} // namespace freenil
