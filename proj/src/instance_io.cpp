#include "asymnorm/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace asymnorm {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ';') {
      out.push_back({";", i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != '#' && line[i] != ';' &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<Token> tokens)
      : line_(line_no), tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const std::size_t col = done() ? end_column() : tokens_[pos_].column;
    throw ParseError(line_, col, msg);
  }

  const Token& next(const char* what) {
    if (done()) fail(std::string("expected ") + what);
    return tokens_[pos_++];
  }

  Rational rational() {
    const Token& t = next("a rational number");
    try {
      return parse_rational(t.text);
    } catch (const InputError& e) {
      throw ParseError(line_, t.column, e.what());
    }
  }

  Vector vector(std::size_t dim) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational();
    return v;
  }

  std::size_t positive_integer() {
    const Token& t = next("a positive integer");
    std::size_t value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || value == 0) {
      throw ParseError(line_, t.column, "expected a positive integer, got '" + t.text + "'");
    }
    return value;
  }

  void expect_end() {
    if (!done()) fail("unexpected token '" + peek().text + "'");
  }

 private:
  std::size_t end_column() const {
    if (tokens_.empty()) return 1;
    return tokens_.back().column + tokens_.back().text.size();
  }

  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  InstanceFile file;
  bool seen_version = false, seen_h = false, seen_v = false, seen_r = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;

    LineParser p(line_no, tokenize(raw));
    if (p.done()) {
      if (end == text.size()) break;
      continue;
    }
    const Token key = p.next("a key");
    const bool any_content = file.dim != 0 || !file.functionals.empty();
    if (key.text == "version") {
      if (seen_version || any_content) throw ParseError(line_no, key.column, "'version' must come first");
      const std::size_t v = p.positive_integer();
      if (v != 1) throw ParseError(line_no, key.column, "unsupported version " + std::to_string(v));
      file.version = 1;
      seen_version = true;
      p.expect_end();
    } else if (key.text == "dim") {
      if (file.dim != 0) throw ParseError(line_no, key.column, "duplicate 'dim'");
      file.dim = p.positive_integer();
      p.expect_end();
    } else if (key.text == "F:" || key.text == "H:" || key.text == "V:" || key.text == "R:") {
      if (file.dim == 0) throw ParseError(line_no, key.column, "'dim' must precede " + key.text);
      if (key.text == "F:") {
        if (seen_h || seen_v || seen_r) {
          throw ParseError(line_no, key.column, "norm rows must precede the set block");
        }
        file.functionals.push_back(p.vector(file.dim));
        p.expect_end();
      } else if (key.text == "H:") {
        if (seen_v || seen_r) throw ParseError(line_no, key.column, "H: rows mixed with V:/R: lines");
        seen_h = true;
        for (;;) {
          Halfspace h;
          h.normal = p.vector(file.dim);
          const Token& rel = p.next("'<' or '<='");
          if (rel.text == "<") {
            h.strict = true;
          } else if (rel.text == "<=") {
            h.strict = false;
          } else {
            throw ParseError(line_no, rel.column, "expected '<' or '<=', got '" + rel.text + "'");
          }
          h.rhs = p.rational();
          file.hrep.push_back(std::move(h));
          if (p.done()) break;
          if (p.next("';'").text != ";") p.fail("expected ';' between rows");
        }
      } else {
        if (seen_h) throw ParseError(line_no, key.column, "V:/R: lines mixed with H: rows");
        file.kind = InstanceFile::SetKind::kVRep;
        if (key.text == "V:") {
          seen_v = true;
          file.vertices.push_back(p.vector(file.dim));
        } else {
          seen_r = true;
          file.rays.push_back(p.vector(file.dim));
        }
        p.expect_end();
      }
    } else {
      throw ParseError(line_no, key.column, "unknown key '" + key.text + "'");
    }
    if (end == text.size()) break;
  }
  if (file.dim == 0) throw ParseError(line_no, 1, "missing 'dim'");
  if (file.functionals.empty()) throw ParseError(line_no, 1, "missing norm rows 'F:'");
  if (seen_r && !seen_v) throw ParseError(line_no, 1, "R: lines need at least one V: line");
  return file;
}

std::string format_row(const Halfspace& h) {
  std::string out;
  for (const auto& c : h.normal) out += to_string(c) + " ";
  out += h.strict ? "< " : "<= ";
  out += to_string(h.rhs);
  return out;
}

std::string write_instance(const InstanceFile& file) {
  std::ostringstream os;
  auto row = [&](const char* key, const Vector& v) {
    os << key;
    for (const auto& c : v) os << ' ' << to_string(c);
    os << '\n';
  };
  os << "version " << file.version << '\n';
  os << "dim " << file.dim << '\n';
  for (const auto& a : file.functionals) row("F:", a);
  if (file.kind == InstanceFile::SetKind::kHRep) {
    for (const auto& h : file.hrep) os << "H: " << format_row(h) << '\n';
  } else {
    for (const auto& v : file.vertices) row("V:", v);
    for (const auto& r : file.rays) row("R:", r);
  }
  return os.str();
}

Problem to_problem(const InstanceFile& file) {
  AsymNorm q = make_norm(file.dim, file.functionals);
  if (file.kind == InstanceFile::SetKind::kHRep) {
    return {std::move(q), PartialPolyhedron(file.dim, file.hrep)};
  }
  const Polyhedron p(file.dim, file.vertices, file.rays);
  return {std::move(q), PartialPolyhedron(file.dim, dd_convert_v_to_h(p))};
}

Problem parse_instance(std::string_view text) { return to_problem(parse_instance_file(text)); }

InstanceFile make_instance_file(const AsymNorm& q, const PartialPolyhedron& k) {
  InstanceFile f;
  f.dim = q.dim();
  f.functionals = q.functionals();
  f.kind = InstanceFile::SetKind::kHRep;
  f.hrep = k.constraints();
  return f;
}

}  // namespace asymnorm
