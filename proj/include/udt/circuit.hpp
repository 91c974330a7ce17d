#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "udt/caps.hpp"
#include "udt/field.hpp"
#include "udt/matrix.hpp"
#include "udt/polynomial.hpp"
#include "udt/tm.hpp"
#include "udt/verdict.hpp"

namespace udt {

enum class GateKind { H, T, CNOT };

// Qubit indices are 1-based. For CNOT, `target` is the second operand.
struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t qubit = 1;   // H, T operand; CNOT control
  std::uint32_t target = 0;  // CNOT only

  static Gate h(std::uint32_t q) { return {GateKind::H, q, 0}; }
  static Gate t(std::uint32_t q) { return {GateKind::T, q, 0}; }
  static Gate cnot(std::uint32_t control, std::uint32_t target) { return {GateKind::CNOT, control, target}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

std::string to_string(const Gate& g);  // "H q2", "T q1", "CNOT 2→3"

/// Gate list plus witness register size. Qubit 1 is the output qubit and the
/// most significant bit of amplitude indices; the witness occupies the
/// highest-indexed `witness_qubits` qubits, so a circuit with m >= 1 always
/// has at least m + 1 qubits.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<Gate> gates, std::uint32_t witness_qubits = 0);
  // What every malformed encoding denotes: no gates, never accepts.
  static Circuit trivial();

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::uint32_t witness_qubits() const noexcept { return witness_; }
  std::uint32_t total_qubits() const noexcept { return total_; }
  bool is_trivial() const noexcept { return trivial_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<Gate> gates_;
  std::uint32_t witness_ = 0;
  std::uint32_t total_ = 1;
  bool trivial_ = false;
};

std::string gate_listing(const Circuit& c);  // "H q2; T q1; CNOT 2→3"

// Grammar:
//   [1^m "00"] gatestream          (header iff expect_witness_header)
//   gatestream = "" | gate ("0" gate)*
//   gate       = "01" "0" unary | "10" "0" unary | "11" "0" unary "0" unary
//   unary      = "1"^q for qubit q >= 1
// with opcodes 01 = H, 10 = T, 11 = CNOT(control, target). Anything else
// yields Circuit::trivial().
Circuit parse_circuit(std::string_view bits, bool expect_witness_header);
Word encode_circuit(const Circuit& c, bool with_witness_header);

struct StateVector {
  std::uint32_t num_qubits = 0;
  std::vector<FieldElem> amplitudes;

  FieldElem norm2() const;
};

// Applies the gates in listed order to the basis state `basis_input`
// (character k is qubit k+1). H = r*[[1,1],[1,-1]], T = diag(1, e^{i pi/4}).
StateVector simulate(const Circuit& c, std::string_view basis_input, const Caps& caps = {});

// Probability of measuring qubit 1 as 1; zero for the trivial circuit.
FieldElem p_acc(const Circuit& c, std::string_view basis_input, const Caps& caps = {});

// Q[y'][y] = <y'|<0^k| U^dag P_acc U |0^k>|y>, dimension 2^m (1 when m = 0).
ExactMatrix acceptance_operator(const Circuit& c, const Caps& caps = {});

// Deciders on a concrete circuit.
Verdict classify_bqp_circuit(const Circuit& c, const Thresholds& t = {}, const Caps& caps = {});
Verdict classify_qcma_circuit(const Circuit& c, const Thresholds& t = {}, const Caps& caps = {});
Verdict classify_qma_circuit(const Circuit& c, const Thresholds& t = {}, const Caps& caps = {});
// Sylvester trichotomy on an acceptance operator.
Verdict classify_qma_operator(const ExactMatrix& q, const Thresholds& t = {}, const Caps& caps = {});

// Runs the generator on x (fuel gen_runtime(|x|)) and reads its output as a
// circuit. Under FuelPolicy::Strict an overrun raises GeneratorFuelExhausted;
// under Clocked it yields the trivial circuit.
Circuit generate_circuit(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x,
                         bool expect_witness_header, FuelPolicy policy = FuelPolicy::Strict);

Verdict classify_bqp(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x, const Thresholds& t = {},
                     FuelPolicy policy = FuelPolicy::Strict, const Caps& caps = {});
Verdict classify_qcma(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x, const Thresholds& t = {},
                      FuelPolicy policy = FuelPolicy::Strict, const Caps& caps = {});
Verdict classify_qma(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x, const Thresholds& t = {},
                     FuelPolicy policy = FuelPolicy::Strict, const Caps& caps = {});

}  // namespace udt
