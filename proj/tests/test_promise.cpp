#include <doctest.h>

#include "oracles.hpp"
#include "udt/errors.hpp"
#include "udt/machines.hpp"
#include "udt/promise.hpp"

using namespace udt;

namespace {

const Polynomial kGenerous({64, 4});

Verdict parity_oracle(const Word& x) { return oracle::count_ones(x) % 2 ? Verdict::Yes : Verdict::No; }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("builtin problems") {
  for (const Word& x : words_up_to(6)) {
    CHECK(problems::const_no().classify(x) == Verdict::No);
    CHECK(problems::const_yes().classify(x) == Verdict::Yes);
    CHECK(problems::const_outside().classify(x) == Verdict::OutsidePromise);
    CHECK(problems::parity().classify(x) == parity_oracle(x));
    const auto ones = oracle::count_ones(x), zeros = x.size() - ones;
    CHECK(problems::majority().classify(x) ==
          (ones > zeros ? Verdict::Yes : ones < zeros ? Verdict::No : Verdict::OutsidePromise));
    CHECK(problems::parity_even_length().classify(x) ==
          (x.size() % 2 ? Verdict::OutsidePromise : parity_oracle(x)));
  }
  CHECK(problems::parity().classify("101") == Verdict::No);
  CHECK(problems::parity().classify("100") == Verdict::Yes);
  CHECK(problems::builtin("length-in:2:4")->classify("011") == Verdict::Yes);
  CHECK(problems::builtin("length-in:2:4")->classify("0111") == Verdict::No);
  CHECK_FALSE(problems::builtin("nope").has_value());
  CHECK(problems::builtin_names().size() >= 7);
}

TEST_CASE("machine-backed deciders") {
  auto outside = TotalDecider::machine_backed("ten", machines::constant("10"), kGenerous);
  CHECK(outside.classify("") == Verdict::OutsidePromise);
  auto par = TotalDecider::machine_backed("parity", machines::parity(), kGenerous);
  for (const Word& x : words_up_to(6)) CHECK(par.classify(x) == parity_oracle(x));
  auto c = par.classify_costed("0110");
  CHECK(c.cost == run(machines::parity(), Word("0110"), 1000).steps + 1);
  CHECK(kind_of([] { TotalDecider::machine_backed("bad", machines::constant("11"), kGenerous).classify("1"); }) ==
        ErrorKind::NotTotalDecider);
  CHECK(kind_of([] { TotalDecider::machine_backed("loop", machines::diverge(), kGenerous).classify("1"); }) ==
        ErrorKind::NotTotalDecider);
  Caps caps;
  caps.fuel = 10;
  CHECK(kind_of([&] {
          TotalDecider::machine_backed("loop", machines::diverge(), kGenerous, caps).classify("1");
        }) == ErrorKind::FuelCap);
}

TEST_CASE("difference notions") {
  Differences same = differences(problems::parity(), problems::parity(), 6);
  CHECK(same.sym_diff.empty());
  CHECK(same.a_minus_b.empty());
  CHECK(same.total_sym_diff.empty());

  Differences dec = differences(problems::parity(), problems::length_interval(0, 3), 6);
  CHECK(dec.sym_diff == dec.a_minus_b);
  CHECK(dec.sym_diff == dec.b_minus_a);
  CHECK(dec.sym_diff == dec.total_sym_diff);

  Differences d = differences(problems::const_no(), problems::parity(), 5);
  std::vector<Word> odd;
  for (const Word& x : words_up_to(5))
    if (parity_oracle(x) == Verdict::Yes) odd.push_back(x);
  CHECK(d.sym_diff == odd);
  for (const Word& x : d.sym_diff)
    CHECK(std::find(d.total_sym_diff.begin(), d.total_sym_diff.end(), x) != d.total_sym_diff.end());

  Differences p = differences(problems::parity(), problems::const_outside(), 3);
  CHECK(p.sym_diff.empty());
  CHECK(p.a_minus_b.size() == words_up_to(3).size());
  CHECK(p.b_minus_a.empty());

  Caps caps;
  caps.word_length = 4;
  CHECK(kind_of([&] { differences(problems::parity(), problems::parity(), 5, caps); }) == ErrorKind::CapExceeded);
}

TEST_CASE("pointwise difference predicates") {
  using V = Verdict;
  CHECK(in_sym_diff(V::Yes, V::No));
  CHECK_FALSE(in_sym_diff(V::Yes, V::OutsidePromise));
  CHECK(in_difference(V::Yes, V::OutsidePromise));
  CHECK_FALSE(in_difference(V::OutsidePromise, V::Yes));
  CHECK(in_total_sym_diff(V::OutsidePromise, V::Yes));
  CHECK_FALSE(in_total_sym_diff(V::No, V::No));
}

TEST_CASE("marked union") {
  TotalDecider u = marked_union(problems::parity(), problems::const_yes());
  CHECK(u.classify("") == Verdict::OutsidePromise);
  for (const Word& x : words_up_to(5)) {
    CHECK(u.classify("0" + x) == parity_oracle(x));
    CHECK(u.classify("1" + x) == Verdict::Yes);
  }
}

TEST_CASE("Karp checks") {
  CHECK(karp_check(ReductionFn::identity(), problems::parity(), problems::parity(), 6).ok());
  auto to_no = ReductionFn::from_function("const", [](const Word&) { return Word("0"); });
  CHECK(karp_check(to_no, problems::const_no(), problems::parity(), 6).ok());
  auto broken = ReductionFn::from_function("broken", [](const Word& x) { return x == "1" ? Word("") : x; });
  KarpReport r = karp_check(broken, problems::parity(), problems::parity(), 4);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].x == "1");
  CHECK(r.violations[0].image.empty());
  CHECK(r.violations[0].source == Verdict::Yes);
  CHECK(r.violations[0].target == Verdict::No);
  CHECK(r.checked == words_up_to(4).size());
  auto flip = ReductionFn::machine_backed("prepend1", machines::prepend('1'), kGenerous);
  CHECK(karp_check(flip, problems::parity(), problems::parity(), 6).violations.size() == words_up_to(6).size());
}

TEST_CASE("machine-backed reductions and fuel") {
  auto f = ReductionFn::machine_backed("p0", machines::prepend('0'), kGenerous);
  CHECK(f("101") == "0101");
  auto slow = ReductionFn::machine_backed("loop", machines::diverge(), kGenerous);
  CHECK(kind_of([&] { slow("1"); }) == ErrorKind::ReductionFuelExhausted);
  auto clocked = ReductionFn::machine_backed("loop", machines::diverge(), kGenerous, true);
  CHECK(clocked("1").empty());
}

TEST_CASE("oracle machines") {
  // Karp-to-Cook on the identity: query x, echo the answer.
  OracleMachine echo = karp_to_cook(ReductionFn::identity());
  CookResult r = cook_run(echo, problems::parity(), "1");
  CHECK(r.accepted);
  CHECK(r.queries == std::vector<Word>{"1"});
  for (const Word& x : words_up_to(6)) {
    CookResult c = cook_run(echo, problems::parity(), x);
    CHECK(c.accepted == (parity_oracle(x) == Verdict::Yes));
  }
  CHECK(kind_of([&] { cook_run(echo, problems::parity_even_length(), "1"); }) == ErrorKind::NonPromisedQuery);

  OracleMachine prefix = karp_to_cook(ReductionFn::machine_backed("p0", machines::prepend('0'), kGenerous));
  CookResult q = cook_run(prefix, problems::parity(), "11");
  CHECK(q.queries == std::vector<Word>{"011"});
  CHECK_FALSE(q.accepted);

  OracleMachine plain{machines::parity(), std::nullopt, kGenerous};
  CookResult p = cook_run(plain, problems::const_yes(), "1");
  CHECK(p.queries.empty());
  CHECK(p.accepted);
  CHECK(p.steps == run(machines::parity(), Word("1"), 100).steps);

  OracleMachine spin{machines::diverge(), std::nullopt, Polynomial({5})};
  CHECK(kind_of([&] { cook_run(spin, problems::parity(), "1"); }) == ErrorKind::FuelExhausted);
  CHECK_THROWS_AS(karp_to_cook(ReductionFn::from_function("f", [](const Word& x) { return x; })), Error);
}

TEST_CASE("Karp-to-Cook agrees with the Karp reduction") {
  auto f = ReductionFn::machine_backed("p0", machines::prepend('0'), kGenerous);
  OracleMachine o = karp_to_cook(f);
  for (const Word& x : words_up_to(6))
    CHECK(cook_run(o, problems::parity(), x).accepted == (problems::parity().classify(f(x)) == Verdict::Yes));
}
