#include "asymnorm/rational.hpp"

#include <cctype>
#include <sstream>

namespace asymnorm {

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

int sign(const Rational& r) { return sgn(r); }

Vector Vector::from_ints(std::initializer_list<long> values) {
  Vector v(values.size());
  std::size_t i = 0;
  for (long x : values) v[i++] = Rational(x);
  return v;
}

Vector Vector::unit(std::size_t dim, std::size_t axis) {
  Vector v(dim);
  v[axis] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  require_dim(other, dim(), "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_dim(other, dim(), "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Rational dot(const Vector& a, const Vector& b) {
  require_dim(b, a.dim(), "dot product");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

Vector primitive(const Vector& v) {
  mpz_class den_lcm = 1;
  for (const auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : v) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out[i] = Rational(v[i].get_num() * (den_lcm / v[i].get_den()) / num_gcd);
  }
  return out;
}

Vector normalize_direction(const Vector& v) {
  for (const auto& c : v) {
    if (sgn(c) != 0) {
      Rational scale = 1 / abs(c);
      return scale * v;
    }
  }
  return v;
}

Vector append(const Vector& v, const Rational& last) {
  std::vector<Rational> coords = v.coords();
  coords.push_back(last);
  return Vector(std::move(coords));
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << to_string(v); }

void require_dim(const Vector& v, std::size_t dim, const char* what) {
  if (v.dim() != dim) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (expected " << dim << ", got " << v.dim() << ")";
    throw InputError(msg.str());
  }
}

}  // namespace asymnorm
