#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "udt/circuit.hpp"
#include "udt/errors.hpp"
#include "udt/machines.hpp"

using namespace udt;

namespace {

const Word kExample = "01011010010110110111011010111";

double re(const FieldElem& x) { return to_double(x); }

// Witness qubits only act as CNOT controls or take T gates, so the witness
// register stays in its basis state and the acceptance operator is diagonal.
Circuit witness_diagonal(std::mt19937_64& rng, std::uint32_t m) {
  std::uniform_int_distribution<std::uint32_t> nw(1, 3), kind(0, 3), ng(1, 16);
  const std::uint32_t work = nw(rng), n = work + m;
  std::uniform_int_distribution<std::uint32_t> wq(1, work), any(1, n);
  std::vector<Gate> gates{Gate::t(n)};
  for (std::uint32_t k = ng(rng); k > 0; --k) {
    switch (kind(rng)) {
      case 0: gates.push_back(Gate::h(wq(rng))); break;
      case 1: gates.push_back(Gate::t(any(rng))); break;
      default: {
        std::uint32_t c = any(rng), t = wq(rng);
        if (c != t) gates.push_back(Gate::cnot(c, t));
      }
    }
  }
  return Circuit(std::move(gates), m);
}

}  // namespace

TEST_CASE("example bitstring parses and re-encodes") {
  Circuit c = parse_circuit(kExample, false);
  CHECK_FALSE(c.is_trivial());
  CHECK(c.gates() == std::vector<Gate>{Gate::h(2), Gate::t(1), Gate::cnot(2, 3), Gate::cnot(1, 3)});
  CHECK(gate_listing(c) == "H q2; T q1; CNOT 2→3; CNOT 1→3");
  CHECK(c.total_qubits() == 3);
  CHECK(encode_circuit(c, false) == kExample);
}

TEST_CASE("malformed strings give the trivial circuit") {
  for (const char* bits : {"0000", "00", "010", "0100", "01010", "0111", "2"})
    CHECK(parse_circuit(bits, false).is_trivial());
  CHECK(parse_circuit("1", true).is_trivial());
  CHECK(p_acc(Circuit::trivial(), "0") == FieldElem::zero());
  CHECK(encode_circuit(Circuit::trivial(), false) == "000");
  CHECK(parse_circuit("000", false).is_trivial());
}

TEST_CASE("canonical encodings") {
  CHECK(encode_circuit(Circuit({Gate::h(1)}), false) == "0101");
  CHECK(encode_circuit(Circuit{}, false).empty());
  CHECK(parse_circuit("", false) == Circuit{});
  Circuit w({Gate::cnot(2, 1)}, 1);
  CHECK(encode_circuit(w, true) == "100" "1101101");
  CHECK(parse_circuit(encode_circuit(w, true), true) == w);
  CHECK_THROWS_AS(encode_circuit(w, false), Error);
  CHECK(parse_circuit("00" + kExample, true) == parse_circuit(kExample, false));
}

TEST_CASE("encode/parse roundtrip on random circuits") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    std::uint32_t m = k % 3;
    Circuit c = oracle::random_circuit(rng, 6, 20, m);
    CHECK(parse_circuit(encode_circuit(c, true), true) == c);
    if (m == 0) CHECK(parse_circuit(encode_circuit(c, false), false) == c);
  }
}

TEST_CASE("small simulations by hand") {
  Circuit h({Gate::h(1)});
  StateVector s = simulate(h, "0");
  CHECK(s.amplitudes == std::vector<FieldElem>{FieldElem::r(), FieldElem::r()});
  CHECK(p_acc(h, "0") == FieldElem(Rational(1, 2)));
  Circuit hh({Gate::h(1), Gate::h(1)});
  CHECK(simulate(hh, "0").amplitudes == std::vector<FieldElem>{FieldElem::one(), FieldElem::zero()});
  CHECK(p_acc(Circuit({Gate::t(1)}), "0").is_zero());
  CHECK(simulate(Circuit({Gate::t(1)}), "1").amplitudes[1] == FieldElem::omega());
  CHECK(p_acc(parse_circuit(kExample, false), "000").is_zero());
  CHECK_THROWS_AS(simulate(h, "01"), Error);
}

TEST_CASE("exact simulation matches the float oracle") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 60; ++k) {
    Circuit c = oracle::random_circuit(rng, 5, 30);
    std::string in(c.total_qubits(), '0');
    for (auto& ch : in) ch = (rng() & 1) ? '1' : '0';
    StateVector s = simulate(c, in);
    auto f = oracle::float_state(c, in);
    REQUIRE(s.amplitudes.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const FieldElem& a = s.amplitudes[i];
      const double ar = a.a().get_d() + a.b().get_d() / std::sqrt(2.0);
      const double ai = a.c().get_d() + a.d().get_d() / std::sqrt(2.0);
      CHECK(std::abs(ar - f[i].real()) < 1e-9);
      CHECK(std::abs(ai - f[i].imag()) < 1e-9);
    }
    CHECK(s.norm2() == FieldElem::one());
    CHECK(std::abs(re(p_acc(c, in)) - oracle::float_p_acc(c, in)) < 1e-9);
  }
}

TEST_CASE("acceptance operators") {
  Circuit copy({Gate::cnot(2, 1)}, 1);
  ExactMatrix q = acceptance_operator(copy);
  CHECK(q(0, 0).is_zero());
  CHECK(q(1, 1) == FieldElem::one());
  CHECK(q(0, 1).is_zero());
  CHECK(classify_qma_circuit(copy) == Verdict::Yes);
  CHECK(classify_qcma_circuit(copy) == Verdict::Yes);

  Circuit ignore({Gate::h(1), Gate::t(2)}, 1);
  ExactMatrix qi = acceptance_operator(ignore);
  CHECK(qi == ExactMatrix::scalar(2, FieldElem(Rational(1, 2))));
  CHECK(classify_qma_circuit(ignore) == Verdict::OutsidePromise);

  CHECK(classify_qma_operator(ExactMatrix(2)) == Verdict::No);
  CHECK(classify_qma_operator(ExactMatrix::scalar(2, FieldElem(Rational(1, 2)))) == Verdict::OutsidePromise);
  CHECK(classify_qma_operator(ExactMatrix::scalar(1, FieldElem(Rational(2, 3)))) == Verdict::Yes);
  CHECK(classify_qma_operator(ExactMatrix::scalar(1, FieldElem(Rational(1, 3)))) == Verdict::No);

  std::mt19937_64 rng(41);
  for (int k = 0; k < 20; ++k) {
    Circuit c = oracle::random_circuit(rng, 5, 20, 2);
    ExactMatrix m = acceptance_operator(c);
    CHECK(m.is_hermitian());
    CHECK(oracle::float_lambda_max(c) <= 1 + 1e-9);
    CHECK(sylvester_psd(m));
  }
}

TEST_CASE("QCMA and QMA agree on witness-diagonal circuits") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 60; ++k) {
    Circuit c = witness_diagonal(rng, 1 + k % 2);
    ExactMatrix q = acceptance_operator(c);
    for (std::size_t r = 0; r < q.dim(); ++r)
      for (std::size_t s = 0; s < q.dim(); ++s)
        if (r != s) CHECK(q(r, s).is_zero());
    CHECK(classify_qcma_circuit(c) == classify_qma_circuit(c));
  }
  Circuit trivial_m1 = parse_circuit("1000000", true);
  CHECK(trivial_m1.is_trivial());
  CHECK(classify_qcma_circuit(Circuit({Gate::t(2)}, 1)) == Verdict::No);
  Circuit half({Gate::h(1), Gate::t(2)}, 1);
  CHECK(classify_qcma_circuit(half) == Verdict::OutsidePromise);
}

TEST_CASE("Sylvester verdicts against the float eigenvalue") {
  std::mt19937_64 rng(47);
  int tested = 0;
  for (int k = 0; k < 200 && tested < 40; ++k) {
    Circuit c = oracle::random_circuit(rng, 4, 14, 1 + k % 2);
    const double lam = oracle::float_lambda_max(c);
    if (std::abs(lam - 1.0 / 3) < 1e-6 || std::abs(lam - 2.0 / 3) < 1e-6) continue;
    const Verdict want = lam >= 2.0 / 3 ? Verdict::Yes : lam <= 1.0 / 3 ? Verdict::No : Verdict::OutsidePromise;
    CHECK(classify_qma_circuit(c) == want);
    ++tested;
  }
  CHECK(tested == 40);
}

TEST_CASE("dimension caps") {
  Caps caps;
  caps.qubits = 3;
  Circuit big({Gate::h(4)});
  CHECK_THROWS_AS(simulate(big, "0000", caps), Error);
  caps.witness_qubits = 1;
  try {
    acceptance_operator(Circuit({Gate::h(3)}, 2), caps);
    FAIL("expected DimensionCap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionCap);
  }
}

TEST_CASE("generator-backed deciders") {
  const Polynomial gen_time({64, 1});
  MachineDesc never = machines::constant("000");
  for (const Word& x : {Word(""), Word("101")}) CHECK(classify_bqp(never, gen_time, x) == Verdict::No);
  MachineDesc single_h = machines::constant("0101");
  CHECK(classify_bqp(single_h, gen_time, "101") == Verdict::OutsidePromise);
  MachineDesc copy = machines::constant("100" "1101101");
  CHECK(classify_qcma(copy, gen_time, "11") == Verdict::Yes);
  CHECK(classify_qma(copy, gen_time, "11") == Verdict::Yes);
  CHECK(classify_bqp(machines::diverge(), gen_time, "1", {}, FuelPolicy::Clocked) == Verdict::No);
  try {
    classify_bqp(machines::diverge(), gen_time, "1");
    FAIL("expected GeneratorFuelExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GeneratorFuelExhausted);
  }
}

TEST_CASE("exact two-thirds acceptance is Yes") {
  ExactMatrix q(2);
  q(1, 1) = FieldElem(Rational(2, 3));
  CHECK(classify_qma_operator(q) == Verdict::Yes);
  q(1, 1) = FieldElem(Rational(2, 3)) - FieldElem(Rational(1, 1000000));
  CHECK(classify_qma_operator(q) == Verdict::OutsidePromise);
}
