#include "udt/circuit.hpp"

#include <algorithm>

#include "udt/errors.hpp"

namespace udt {

std::string to_string(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: return "H q" + std::to_string(g.qubit);
    case GateKind::T: return "T q" + std::to_string(g.qubit);
    case GateKind::CNOT: return "CNOT " + std::to_string(g.qubit) + "→" + std::to_string(g.target);
  }
  return "?";
}

Circuit::Circuit(std::vector<Gate> gates, std::uint32_t witness_qubits)
    : gates_(std::move(gates)), witness_(witness_qubits) {
  std::uint32_t top = 1;
  for (const Gate& g : gates_) {
    if (g.qubit == 0) throw Error(ErrorKind::InvalidArgument, "qubit indices are 1-based");
    top = std::max(top, g.qubit);
    if (g.kind == GateKind::CNOT) {
      if (g.target == 0) throw Error(ErrorKind::InvalidArgument, "qubit indices are 1-based");
      if (g.target == g.qubit) throw Error(ErrorKind::InvalidArgument, "CNOT control equals target");
      top = std::max(top, g.target);
    } else if (g.target != 0) {
      throw Error(ErrorKind::InvalidArgument, "single-qubit gate with a target");
    }
  }
  if (witness_ > 0) top = std::max(top, witness_ + 1);
  total_ = top;
}

Circuit Circuit::trivial() {
  Circuit c;
  c.trivial_ = true;
  return c;
}

std::string gate_listing(const Circuit& c) {
  std::string out;
  for (const Gate& g : c.gates()) {
    if (!out.empty()) out += "; ";
    out += to_string(g);
  }
  return out;
}

namespace {

class BitReader {
 public:
  explicit BitReader(std::string_view bits) : bits_(bits) {}
  bool done() const { return pos_ == bits_.size(); }
  bool take(char ch) {
    if (pos_ < bits_.size() && bits_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t ones() {
    std::uint64_t n = 0;
    while (take('1')) ++n;
    return n;
  }

 private:
  std::string_view bits_;
  std::size_t pos_ = 0;
};

constexpr std::uint64_t kMaxQubitIndex = 1u << 30;

}  // namespace

Circuit parse_circuit(std::string_view bits, bool expect_witness_header) {
  if (!is_bits(bits)) return Circuit::trivial();
  BitReader in(bits);
  std::uint64_t m = 0;
  if (expect_witness_header) {
    m = in.ones();
    if (!in.take('0') || !in.take('0') || m > kMaxQubitIndex) return Circuit::trivial();
  }
  std::vector<Gate> gates;
  auto unary = [&]() -> std::uint32_t {
    std::uint64_t q = in.ones();
    return q > kMaxQubitIndex ? 0 : static_cast<std::uint32_t>(q);
  };
  while (!in.done()) {
    if (!gates.empty() && !in.take('0')) return Circuit::trivial();
    int op = 0;
    for (int k = 0; k < 2; ++k) {
      if (in.take('1')) op = op * 2 + 1;
      else if (in.take('0')) op = op * 2;
      else return Circuit::trivial();
    }
    if (op == 0 || !in.take('0')) return Circuit::trivial();
    std::uint32_t q = unary();
    if (q == 0) return Circuit::trivial();
    if (op == 1) {
      gates.push_back(Gate::h(q));
    } else if (op == 2) {
      gates.push_back(Gate::t(q));
    } else {
      if (!in.take('0')) return Circuit::trivial();
      std::uint32_t target = unary();
      if (target == 0 || target == q) return Circuit::trivial();
      gates.push_back(Gate::cnot(q, target));
    }
  }
  return Circuit(std::move(gates), static_cast<std::uint32_t>(m));
}

Word encode_circuit(const Circuit& c, bool with_witness_header) {
  if (c.is_trivial()) return "000";
  Word out;
  if (with_witness_header) {
    out.append(c.witness_qubits(), '1');
    out += "00";
  } else if (c.witness_qubits() != 0) {
    throw Error(ErrorKind::InvalidArgument, "witness register needs the header form");
  }
  bool first = true;
  for (const Gate& g : c.gates()) {
    if (!first) out += "0";
    first = false;
    switch (g.kind) {
      case GateKind::H: out += "010"; break;
      case GateKind::T: out += "100"; break;
      case GateKind::CNOT: out += "110"; break;
    }
    out.append(g.qubit, '1');
    if (g.kind == GateKind::CNOT) {
      out += "0";
      out.append(g.target, '1');
    }
  }
  return out;
}

FieldElem StateVector::norm2() const {
  FieldElem acc;
  for (const FieldElem& a : amplitudes) acc += a.norm2();
  return acc;
}

namespace {

void check_qubits(const Circuit& c, const Caps& caps) {
  if (c.total_qubits() > caps.qubits)
    throw Error(ErrorKind::DimensionCap,
                std::to_string(c.total_qubits()) + " qubits exceed the cap of " + std::to_string(caps.qubits));
}

std::size_t basis_index(std::string_view basis_input) {
  std::size_t idx = 0;
  for (char ch : basis_input) idx = idx << 1 | static_cast<std::size_t>(ch == '1');
  return idx;
}

void apply(const Gate& g, std::uint32_t n, std::vector<FieldElem>& amp) {
  const std::size_t dim = amp.size();
  const std::size_t mask = std::size_t{1} << (n - g.qubit);
  switch (g.kind) {
    case GateKind::H:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        FieldElem a0 = amp[i], a1 = amp[i | mask];
        amp[i] = (a0 + a1).times_r();
        amp[i | mask] = (a0 - a1).times_r();
      }
      break;
    case GateKind::T: {
      const FieldElem w = FieldElem::omega();
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & mask) && !amp[i].is_zero()) amp[i] *= w;
      break;
    }
    case GateKind::CNOT: {
      const std::size_t tmask = std::size_t{1} << (n - g.target);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & mask) && !(i & tmask)) std::swap(amp[i], amp[i | tmask]);
      break;
    }
  }
}

}  // namespace

StateVector simulate(const Circuit& c, std::string_view basis_input, const Caps& caps) {
  check_qubits(c, caps);
  const std::uint32_t n = c.total_qubits();
  if (basis_input.size() != n || !is_bits(basis_input))
    throw Error(ErrorKind::InvalidArgument, "basis input must be " + std::to_string(n) + " bits");
  StateVector sv{n, std::vector<FieldElem>(std::size_t{1} << n)};
  sv.amplitudes[basis_index(basis_input)] = FieldElem::one();
  for (const Gate& g : c.gates()) apply(g, n, sv.amplitudes);
  return sv;
}

namespace {

FieldElem accept_mass(const StateVector& sv) {
  FieldElem acc;
  const std::size_t half = sv.amplitudes.size() / 2;
  for (std::size_t i = half; i < sv.amplitudes.size(); ++i) acc += sv.amplitudes[i].norm2();
  return acc;
}

std::string witness_input(const Circuit& c, std::uint64_t y) {
  const std::uint32_t m = c.witness_qubits();
  std::string in(c.total_qubits(), '0');
  for (std::uint32_t k = 0; k < m; ++k) in[c.total_qubits() - m + k] = (y >> (m - 1 - k) & 1u) ? '1' : '0';
  return in;
}

void check_witness(const Circuit& c, const Caps& caps) {
  if (c.witness_qubits() > caps.witness_qubits)
    throw Error(ErrorKind::DimensionCap, std::to_string(c.witness_qubits()) + " witness qubits exceed the cap of " +
                                             std::to_string(caps.witness_qubits));
}

Verdict threshold_verdict(const FieldElem& p, const Thresholds& t) {
  if (real_sign(p - FieldElem(t.c)) >= 0) return Verdict::Yes;
  if (real_sign(p - FieldElem(t.s)) <= 0) return Verdict::No;
  return Verdict::OutsidePromise;
}

}  // namespace

FieldElem p_acc(const Circuit& c, std::string_view basis_input, const Caps& caps) {
  if (c.is_trivial()) return FieldElem::zero();
  return accept_mass(simulate(c, basis_input, caps));
}

ExactMatrix acceptance_operator(const Circuit& c, const Caps& caps) {
  check_witness(c, caps);
  const std::size_t dim = std::size_t{1} << c.witness_qubits();
  ExactMatrix q(dim);
  if (c.is_trivial()) return q;
  check_qubits(c, caps);
  std::vector<StateVector> columns;
  columns.reserve(dim);
  for (std::size_t y = 0; y < dim; ++y) columns.push_back(simulate(c, witness_input(c, y), caps));
  const std::size_t half = columns[0].amplitudes.size() / 2;
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      FieldElem acc;
      for (std::size_t b = half; b < 2 * half; ++b) {
        const FieldElem& u = columns[row].amplitudes[b];
        const FieldElem& v = columns[col].amplitudes[b];
        if (u.is_zero() || v.is_zero()) continue;
        acc += u.conj() * v;
      }
      q(row, col) = acc;
    }
  if (!q.is_hermitian()) throw Error(ErrorKind::NotHermitian, "acceptance operator");
  return q;
}

Verdict classify_bqp_circuit(const Circuit& c, const Thresholds& t, const Caps& caps) {
  t.validate();
  if (c.is_trivial()) return threshold_verdict(FieldElem::zero(), t);
  return threshold_verdict(p_acc(c, std::string(c.total_qubits(), '0'), caps), t);
}

Verdict classify_qcma_circuit(const Circuit& c, const Thresholds& t, const Caps& caps) {
  t.validate();
  check_witness(c, caps);
  if (c.is_trivial()) return threshold_verdict(FieldElem::zero(), t);
  bool all_low = true;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << c.witness_qubits()); ++y) {
    Verdict v = threshold_verdict(p_acc(c, witness_input(c, y), caps), t);
    if (v == Verdict::Yes) return Verdict::Yes;
    if (v != Verdict::No) all_low = false;
  }
  return all_low ? Verdict::No : Verdict::OutsidePromise;
}

Verdict classify_qma_operator(const ExactMatrix& q, const Thresholds& t, const Caps& caps) {
  t.validate();
  const std::size_t dim = q.dim();
  // lambda_max >= c  iff  cI - Q is not positive definite
  if (!sylvester_pd(ExactMatrix::scalar(dim, FieldElem(t.c)) - q)) return Verdict::Yes;
  // lambda_max <= s  iff  sI - Q is positive semi-definite
  if (sylvester_psd(ExactMatrix::scalar(dim, FieldElem(t.s)) - q, caps.psd_dim)) return Verdict::No;
  return Verdict::OutsidePromise;
}

Verdict classify_qma_circuit(const Circuit& c, const Thresholds& t, const Caps& caps) {
  return classify_qma_operator(acceptance_operator(c, caps), t, caps);
}

Circuit generate_circuit(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x,
                         bool expect_witness_header, FuelPolicy policy) {
  require_bits(x, "input");
  RunResult res = run(gen, x, gen_runtime(x.size()));
  if (!res.halted()) {
    if (policy == FuelPolicy::Strict)
      throw Error(ErrorKind::GeneratorFuelExhausted, "generator ran " + std::to_string(res.steps) + " steps on '" + x + "'");
    return Circuit::trivial();
  }
  return parse_circuit(res.output, expect_witness_header);
}

Verdict classify_bqp(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x, const Thresholds& t,
                     FuelPolicy policy, const Caps& caps) {
  return classify_bqp_circuit(generate_circuit(gen, gen_runtime, x, false, policy), t, caps);
}

Verdict classify_qcma(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x, const Thresholds& t,
                      FuelPolicy policy, const Caps& caps) {
  return classify_qcma_circuit(generate_circuit(gen, gen_runtime, x, true, policy), t, caps);
}

Verdict classify_qma(const MachineDesc& gen, const Polynomial& gen_runtime, const Word& x, const Thresholds& t,
                     FuelPolicy policy, const Caps& caps) {
  return classify_qma_circuit(generate_circuit(gen, gen_runtime, x, true, policy), t, caps);
}

}  // namespace udt
