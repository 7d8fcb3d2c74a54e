#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asymnorm {

// Exact rational scalar. mpq_class keeps results of arithmetic in lowest
// terms with a positive denominator; every constructor path below
// canonicalizes explicitly.
using Rational = mpq_class;

// Raised for malformed caller input (dimension mismatch, bad literal, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q" with q != 0. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

int sign(const Rational& r);

// Dense exact vector. Used for points, directions, and linear functionals.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  explicit Vector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Vector from_ints(std::initializer_list<long> values);
  static Vector unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const Vector& a, const Vector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

using Point = Vector;
using LinFunctional = Vector;

Rational dot(const Vector& a, const Vector& b);

// Positive multiple of v with coprime integer entries (zero stays zero).
Vector primitive(const Vector& v);

// Positive multiple of v whose first nonzero coordinate is +1 or -1.
Vector normalize_direction(const Vector& v);

// Vector with one extra trailing coordinate.
Vector append(const Vector& v, const Rational& last);

std::string to_string(const Vector& v);
std::ostream& operator<<(std::ostream& os, const Vector& v);

void require_dim(const Vector& v, std::size_t dim, const char* what);

}  // namespace asymnorm
