#include "udt/field.hpp"

#include <ostream>
#include <vector>

#include "udt/errors.hpp"

namespace udt {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FieldElem::FieldElem(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

bool FieldElem::is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

bool FieldElem::is_real() const { return c_ == 0 && d_ == 0; }

FieldElem FieldElem::conj() const { return {a_, b_, -c_, -d_}; }

FieldElem FieldElem::times_r() const {
  // (a + b r) r = b/2 + a r, and the same for the imaginary pair.
  return {b_ / 2, a_, d_ / 2, c_};
}

FieldElem FieldElem::operator-() const { return {-a_, -b_, -c_, -d_}; }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

namespace {

// Elements of the real subfield Q(r) as (p, q) meaning p + q r.
struct RealPart {
  Rational p, q;
};

RealPart mul(const RealPart& x, const RealPart& y) {
  return {x.p * y.p + x.q * y.q / 2, x.p * y.q + x.q * y.p};
}

}  // namespace

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  // (A + C i)(A' + C' i) with A, C, A', C' in Q(r).
  RealPart A{a_, b_}, C{c_, d_}, A2{o.a_, o.b_}, C2{o.c_, o.d_};
  RealPart AA = mul(A, A2), CC = mul(C, C2), AC = mul(A, C2), CA = mul(C, A2);
  a_ = AA.p - CC.p;
  b_ = AA.q - CC.q;
  c_ = AC.p + CA.p;
  d_ = AC.q + CA.q;
  return *this;
}

FieldElem FieldElem::norm2() const {
  RealPart A{a_, b_}, C{c_, d_};
  RealPart AA = mul(A, A), CC = mul(C, C);
  return {AA.p + CC.p, AA.q + CC.q, 0, 0};
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  // 1/x = conj(x) / |x|^2, and (p + q r)^-1 = (p - q r) / (p^2 - q^2/2).
  FieldElem n = norm2();
  Rational den = n.a_ * n.a_ - n.b_ * n.b_ / 2;
  FieldElem inv_norm(n.a_ / den, -n.b_ / den, 0, 0);
  return conj() * inv_norm;
}

int real_sign(const FieldElem& x) {
  if (!x.is_real()) throw Error(ErrorKind::NonRealInput, to_string(x));
  int sa = sgn(x.a()), sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b|/sqrt2, i.e. 2a^2 vs b^2 (never equal).
  Rational lhs = 2 * x.a() * x.a();
  Rational rhs = x.b() * x.b();
  return lhs > rhs ? sa : sb;
}

std::pair<Rational, Rational> sqrt2_bounds(std::uint32_t precision) {
  // Heron iterates h_{k+1} = (h_k + 2/h_k)/2 decrease to sqrt2 from above,
  // and 2/h_k increase to it from below. 1/sqrt2 lies in [1/h, h/2].
  Rational h(3, 2);
  Rational width_cap(1);
  mpz_class two_pow(1);
  two_pow <<= precision;
  width_cap /= two_pow;
  for (;;) {
    Rational lo = 1 / h;
    Rational hi = h / 2;
    lo.canonicalize();
    hi.canonicalize();
    if (hi - lo <= width_cap) return {lo, hi};
    h = (h + 2 / h) / 2;
    h.canonicalize();
  }
}

std::pair<Rational, Rational> real_bounds(const FieldElem& x, std::uint32_t precision) {
  if (!x.is_real()) throw Error(ErrorKind::NonRealInput, to_string(x));
  auto [lo, hi] = sqrt2_bounds(precision);
  Rational v1 = x.a() + x.b() * lo;
  Rational v2 = x.a() + x.b() * hi;
  if (v1 > v2) std::swap(v1, v2);
  return {v1, v2};
}

std::string to_decimal(const FieldElem& x, int digits) {
  if (digits < 0) throw Error(ErrorKind::InvalidArgument, "negative digit count");
  auto bits = static_cast<std::uint32_t>(mpz_sizeinbase(x.b().get_num().get_mpz_t(), 2));
  auto precision = static_cast<std::uint32_t>(4 * digits + 16) + bits;
  auto [lo, hi] = real_bounds(x, precision);
  Rational mid = (lo + hi) / 2;
  mpz_class scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  // round half away from zero
  Rational scaled = mid * scale;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  mpz_class q = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  std::string body = q.get_str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  std::string out = body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + body.substr(body.size() - static_cast<std::size_t>(digits));
  if (neg && q != 0) out.insert(0, "-");
  return out;
}

double to_double(const FieldElem& x) {
  auto [lo, hi] = real_bounds(x, 96);
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string to_string(const FieldElem& x) {
  return to_string(x.a()) + " + " + to_string(x.b()) + "*r + " + to_string(x.c()) + "*i + " +
         to_string(x.d()) + "*i*r";
}

FieldElem parse_field_elem(std::string_view text) {
  std::vector<std::string_view> parts;
  for (;;) {
    auto pos = text.find(" + ");
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 3);
  }
  auto bad = [&] { return Error(ErrorKind::InvalidArgument, "malformed field element"); };
  if (parts.size() != 4) throw bad();
  auto strip = [&](std::string_view s, std::string_view suffix) {
    if (s.size() < suffix.size() || s.substr(s.size() - suffix.size()) != suffix) throw bad();
    return s.substr(0, s.size() - suffix.size());
  };
  return {parse_rational(parts[0]), parse_rational(strip(parts[1], "*r")),
          parse_rational(strip(parts[2], "*i")), parse_rational(strip(parts[3], "*i*r"))};
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << to_string(x); }

}  // namespace udt
