#include <doctest.h>

#include <cmath>
#include <random>

#include "udt/errors.hpp"
#include "udt/field.hpp"

using namespace udt;

namespace {

FieldElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto q = [&] { return make_rational(num(rng), den(rng)); };
  return FieldElem(q(), q(), q(), q());
}

// Float value of a + b r + c i + d i r.
std::pair<double, double> as_complex(const FieldElem& x) {
  const double r = 1.0 / std::sqrt(2.0);
  return {x.a().get_d() + x.b().get_d() * r, x.c().get_d() + x.d().get_d() * r};
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-5")) == "-5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("basis identities") {
  const FieldElem r = FieldElem::r(), i = FieldElem::i(), w = FieldElem::omega();
  CHECK(r * r == FieldElem(make_rational(1, 2)));
  CHECK(i * i == FieldElem::from_int(-1));
  CHECK(w * w == i);
  FieldElem w8 = FieldElem::one();
  for (int k = 0; k < 8; ++k) w8 *= w;
  CHECK(w8 == FieldElem::one());
  CHECK(FieldElem::from_int(3).times_r() == FieldElem::from_int(3) * r);
}

TEST_CASE("field axioms against float arithmetic on random elements") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    FieldElem x = random_elem(rng), y = random_elem(rng);
    auto [xr, xi] = as_complex(x);
    auto [yr, yi] = as_complex(y);
    auto [pr, pi] = as_complex(x * y);
    CHECK(pr == doctest::Approx(xr * yr - xi * yi).epsilon(1e-12));
    CHECK(pi == doctest::Approx(xr * yi + xi * yr).epsilon(1e-12));
    CHECK(x * y == y * x);
    CHECK(x.times_r() == x * FieldElem::r());
    if (!x.is_zero()) CHECK(x * x.inverse() == FieldElem::one());
    CHECK(x.norm2().is_real());
    CHECK(real_sign(x.norm2()) >= 0);
    CHECK((x.conj()).conj() == x);
  }
}

TEST_CASE("real_sign on mixed-sign coordinates") {
  auto s = [](long a, long b) { return real_sign(FieldElem(Rational(a), Rational(b), 0, 0)); };
  CHECK(s(0, 0) == 0);
  CHECK(s(1, -1) == 1);   // 1 - 0.707
  CHECK(s(-1, 2) == 1);   // -1 + 1.414
  CHECK(s(2, -3) == -1);  // 2 - 2.121
  CHECK(s(3, -4) == 1);   // 3 - 2.828
  CHECK(s(-1, -1) == -1);
  CHECK_THROWS_AS(real_sign(FieldElem::i()), Error);
  try {
    real_sign(FieldElem::omega());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRealInput);
  }
}

TEST_CASE("sqrt2 brackets are nested and contain 1/sqrt2") {
  const double r = 1.0 / std::sqrt(2.0);
  Rational prev_lo = 0, prev_hi = 1;
  for (std::uint32_t p = 1; p <= 60; p += 3) {
    auto [lo, hi] = sqrt2_bounds(p);
    CHECK(lo <= hi);
    CHECK(hi - lo <= Rational(1, 1) / Rational(mpz_class(1) << p));
    CHECK(prev_lo <= lo);
    CHECK(hi <= prev_hi);
    CHECK(lo * lo * 2 <= 1);
    CHECK(hi * hi * 2 >= 1);
    CHECK(lo.get_d() <= r + 1e-15);
    CHECK(hi.get_d() >= r - 1e-15);
    prev_lo = lo;
    prev_hi = hi;
  }
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(FieldElem::r()) == "0.707106781187");
  CHECK(to_decimal(FieldElem(make_rational(1, 2))) == "0.500000000000");
  CHECK(to_decimal(FieldElem(make_rational(-1, 3))) == "-0.333333333333");
  CHECK(to_double(FieldElem(Rational(1), Rational(1), 0, 0)) == doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)));
}

TEST_CASE("text form roundtrip") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    FieldElem x = random_elem(rng);
    CHECK(parse_field_elem(to_string(x)) == x);
  }
  CHECK(to_string(FieldElem::omega()) == "0/1 + 1/1*r + 0/1*i + 1/1*i*r");
}
