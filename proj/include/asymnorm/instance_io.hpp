#pragma once

// Text instance format.
//
//   # comment (to end of line)
//   version 1                 optional, must be 1 when present
//   dim <d>
//   F: a_1 ... a_d            one functional per line, at least one
//   H: c_1 ... c_d REL b      REL is "<" or "<=", rows may be chained with ';'
//   V: x_1 ... x_d            vertex of a closed set given by generators
//   R: r_1 ... r_d            ray of that set
//
// Scalars are integers or "p/q". A file uses either H: rows or V:/R: lines;
// with neither, the set is the whole space.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asymnorm/norm.hpp"
#include "asymnorm/polyhedron.hpp"

namespace asymnorm {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct InstanceFile {
  enum class SetKind { kHRep, kVRep };

  int version = 1;
  std::size_t dim = 0;
  std::vector<LinFunctional> functionals;
  SetKind kind = SetKind::kHRep;
  HRep hrep;
  std::vector<Point> vertices;
  std::vector<Vector> rays;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

struct Problem {
  AsymNorm q;
  PartialPolyhedron k;
};

// Syntax only; no axiom checks.
InstanceFile parse_instance_file(std::string_view text);

// Canonical form: one item per line, fixed key order. parse . write is the
// identity on InstanceFile values.
std::string write_instance(const InstanceFile& file);

// Validates the norm (make_norm) and converts a generator block to rows.
Problem to_problem(const InstanceFile& file);

Problem parse_instance(std::string_view text);

InstanceFile make_instance_file(const AsymNorm& q, const PartialPolyhedron& k);

// "c_1 ... c_d REL b" as used by H: lines.
std::string format_row(const Halfspace& h);

}  // namespace asymnorm
