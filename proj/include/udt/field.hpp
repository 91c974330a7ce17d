#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace udt {

// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// Parses "p/q" or "p"; throws InvalidArgument on malformed text or q == 0.
Rational parse_rational(std::string_view text);
// Always "p/q", with q >= 1.
std::string to_string(const Rational& q);

/// Element of Q(1/sqrt2, i), stored as coordinates over the basis
/// 1, r, i, i*r with r = 1/sqrt2:
///
///     value = a + b*r + c*i + d*i*r
///
/// Equality is coordinate-wise, which is exact because the four basis
/// vectors are linearly independent over Q.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Rational a, Rational b, Rational c, Rational d);
  explicit FieldElem(const Rational& a) : a_(a) {}
  static FieldElem from_int(long v) { return FieldElem(Rational(v)); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }

  static FieldElem zero() { return {}; }
  static FieldElem one() { return FieldElem(Rational(1)); }
  static FieldElem r() { return {0, 1, 0, 0}; }
  static FieldElem i() { return {0, 0, 1, 0}; }
  // e^{i pi/4} = r + i*r
  static FieldElem omega() { return {0, 1, 0, 1}; }

  bool is_zero() const;
  bool is_real() const;

  FieldElem conj() const;
  // Multiplicative inverse; throws InvalidArgument on zero.
  FieldElem inverse() const;
  // Multiplication by r, cheaper than the general product.
  FieldElem times_r() const;
  // |x|^2 = x * conj(x), a real element.
  FieldElem norm2() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  Rational a_{0}, b_{0}, c_{0}, d_{0};
};

// Exact sign of a real element a + b/sqrt2. Throws NonRealInput if c or d
// is nonzero.
int real_sign(const FieldElem& x);

// Nested rational bracket lo <= 1/sqrt2 <= hi of width <= 2^-precision,
// obtained from Heron iterates for sqrt2. Larger precision never widens
// the bracket.
std::pair<Rational, Rational> sqrt2_bounds(std::uint32_t precision);

// Bracket for a real element, using sqrt2_bounds.
std::pair<Rational, Rational> real_bounds(const FieldElem& x, std::uint32_t precision);

// Decimal rendering with `digits` fractional digits, derived from a bracket
// narrow enough that the rounded result is determined up to the last digit.
std::string to_decimal(const FieldElem& x, int digits = 12);

// Best double approximation of a real element.
double to_double(const FieldElem& x);

// "a + b*r + c*i + d*i*r", every coefficient as "p/q".
std::string to_string(const FieldElem& x);
FieldElem parse_field_elem(std::string_view text);

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

}  // namespace udt
