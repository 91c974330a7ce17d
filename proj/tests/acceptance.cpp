// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "udt/circuit.hpp"
#include "udt/enumeration.hpp"
#include "udt/errors.hpp"
#include "udt/gapdiag.hpp"
#include "udt/machines.hpp"
#include "udt/ptm.hpp"

using namespace udt;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// Costs and values of r seen in criteria 6-8, audited by criterion 9.
struct AuditEntry {
  std::string name;
  std::uint64_t n;
  Costed value;
};
std::vector<AuditEntry> g_audit;

void audit(const CostedFunction& r, std::uint64_t up_to) {
  for (std::uint64_t n = 0; n <= up_to; ++n) g_audit.push_back({r.name(), n, r(n)});
}

Check criterion1() {
  Check c;
  const Word bits = "01011010010110110111011010111";
  Circuit circ = parse_circuit(bits, false);
  c.expect(circ.gates() == std::vector<Gate>{Gate::h(2), Gate::t(1), Gate::cnot(2, 3), Gate::cnot(1, 3)},
           "gate list " + gate_listing(circ));
  c.expect(encode_circuit(circ, false) == bits, "re-encoding differs");
  return c;
}

Check criterion2() {
  Check c;
  std::mt19937_64 rng(1001);
  int n = 0;
  for (; n < 250; ++n) {
    Circuit circ = oracle::random_circuit(rng, 6, 40);
    std::string in(circ.total_qubits(), '0');
    for (auto& ch : in) ch = (rng() & 1) ? '1' : '0';
    const double exact = to_double(p_acc(circ, in));
    const double flt = oracle::float_p_acc(circ, in);
    c.expect(std::abs(exact - flt) < 1e-9, "circuit " + gate_listing(circ) + " input " + in);
  }
  c.detail = c.ok ? std::to_string(n) + " circuits within 1e-9" : c.detail;
  return c;
}

Check criterion3() {
  Check c;
  std::mt19937_64 rng(2002);
  int tested = 0, tally[3] = {0, 0, 0};
  for (int k = 0; tested < 120 && k < 2000; ++k) {
    Circuit circ = oracle::random_circuit(rng, 5, 16, 1 + k % 3);
    const double lam = oracle::float_lambda_max(circ);
    if (std::abs(lam - 1.0 / 3) < 1e-6 || std::abs(lam - 2.0 / 3) < 1e-6) continue;
    const Verdict want = lam >= 2.0 / 3 ? Verdict::Yes : lam <= 1.0 / 3 ? Verdict::No : Verdict::OutsidePromise;
    c.expect(classify_qma_circuit(circ) == want, "lambda_max " + std::to_string(lam) + " on " + gate_listing(circ));
    ++tally[static_cast<int>(want)];
    ++tested;
  }
  c.expect(tested >= 100, "only " + std::to_string(tested) + " instances");
  if (c.ok)
    c.detail = std::to_string(tested) + " instances agree (yes " + std::to_string(tally[0]) + ", no " +
               std::to_string(tally[1]) + ", outside " + std::to_string(tally[2]) + ")";
  return c;
}

Check criterion4() {
  Check c;
  std::mt19937_64 rng(3003);
  int tested = 0;
  for (int k = 0; k < 100; ++k) {
    const std::uint32_t m = 1 + k % 3;
    std::uniform_int_distribution<std::uint32_t> nw(1, 3), kind(0, 3), ng(1, 16);
    const std::uint32_t work = nw(rng), n = work + m;
    std::uniform_int_distribution<std::uint32_t> wq(1, work), any(1, n);
    std::vector<Gate> gates{Gate::t(n)};
    for (std::uint32_t g = ng(rng); g > 0; --g) {
      switch (kind(rng)) {
        case 0: gates.push_back(Gate::h(wq(rng))); break;
        case 1: gates.push_back(Gate::t(any(rng))); break;
        default: {
          std::uint32_t ctl = any(rng), tgt = wq(rng);
          if (ctl != tgt) gates.push_back(Gate::cnot(ctl, tgt));
        }
      }
    }
    Circuit circ(std::move(gates), m);
    c.expect(classify_qcma_circuit(circ) == classify_qma_circuit(circ), gate_listing(circ));
    ++tested;
  }
  if (c.ok) c.detail = std::to_string(tested) + " witness-diagonal circuits";
  return c;
}

Check criterion5() {
  using machines::Tree;
  Check c;
  int count = 0;
  auto flat = [](std::uint64_t acc, std::uint64_t total) {
    std::vector<Tree> kids;
    for (std::uint64_t k = 0; k < total; ++k) kids.push_back(Tree::leaf(k < acc ? "1" : "0"));
    return Tree::branch(std::move(kids));
  };
  const Word x = "0110";
  for (std::uint64_t total = 1; total <= 9; ++total)
    for (std::uint64_t acc = 0; acc <= total; ++acc) {
      BranchStats s = enumerate_branches(machines::tree_ptm(flat(acc, total)), std::span<const Word>(&x, 1), 100);
      c.expect(s.p_acc == make_rational(static_cast<long>(acc), static_cast<long>(total)),
               "flat " + std::to_string(acc) + "/" + std::to_string(total));
      ++count;
    }
  // Nested: (1, (1, 0), (1, 0, 0, 0)) has 7 leaves, 3 accepting.
  Tree nested = Tree::branch({Tree::leaf("1"), Tree::branch({Tree::leaf("1"), Tree::leaf("0")}),
                              Tree::branch({Tree::leaf("1"), Tree::leaf("0"), Tree::leaf("0"), Tree::leaf("0")})});
  c.expect(enumerate_branches(machines::tree_ptm(nested), std::span<const Word>(&x, 1), 100).p_acc == Rational(3, 7),
           "nested tree");
  ++count;
  const Polynomial fuel({64, 1});
  c.expect(classify_bpp(machines::tree_ptm(flat(2, 3)), fuel, x) == Verdict::Yes, "p = 2/3 must be Yes");
  c.expect(classify_bpp(machines::tree_ptm(flat(1, 3)), fuel, x) == Verdict::No, "p = 1/3 must be No");
  c.expect(classify_bpp(machines::tree_ptm(flat(1, 2)), fuel, x) == Verdict::OutsidePromise, "p = 1/2");
  // MA: witness "1" gives 2/3, witness "0" gives 1/3.
  machines::Dfa last{2, 0, [](std::uint32_t q, std::uint32_t in, int bit) { return in == 1 ? std::uint32_t(bit) : q; },
                     {}};
  PTMDesc ma = machines::dfa_ptm(2, last, [](std::uint32_t q) {
    return q == 1 ? std::vector<Word>{"1", "1", "0"} : std::vector<Word>{"1", "0", "0"};
  });
  c.expect(classify_ma(ma, fuel, [](std::uint64_t) { return 1; }, x) == Verdict::Yes, "MA at 2/3");
  PTMDesc ma_low = machines::dfa_ptm(2, last, [](std::uint32_t) { return std::vector<Word>{"1", "0", "0"}; });
  c.expect(classify_ma(ma_low, fuel, [](std::uint64_t) { return 1; }, x) == Verdict::No, "MA at 1/3");
  count += 5;
  if (c.ok) c.detail = std::to_string(count) + " machines";
  return c;
}

Check criterion6() {
  Check c;
  for (const char* spec : {"succ", "double2"}) {
    CostedFunction r = gap_function(spec);
    auto direct = [&](std::uint64_t n) { return r(n).value; };
    for (std::uint64_t len = 0; len <= 64; ++len) {
      const bool want = oracle::direct_gap_index(direct, len) % 2 == 0;
      // Membership depends only on the length; sample words of each length.
      for (const Word& w : {Word(len, '0'), Word(len, '1'), len ? Word(len - 1, '1') + "0" : Word()})
        c.expect(gap_member(r, w) == want, std::string(spec) + " length " + std::to_string(len));
    }
    audit(r, 64);
  }
  return c;
}

DiagInstance toy() {
  return DiagInstance{problems::parity(), problems::const_no(),
                      list_enumeration("C", {problems::const_yes(), problems::const_no(), problems::majority()}),
                      list_enumeration("C'", {problems::const_yes(), problems::parity(), problems::const_outside()})};
}

Check criterion7() {
  Check c;
  DiagInstance inst = toy();
  DiagResult res = diagonalize(inst);
  for (const Word& x : words_up_to(12)) {
    const Verdict want = gap_member(res.r, x) ? inst.a.classify(x) : inst.a_prime.classify(x);
    c.expect(res.b.classify(x) == want, "mixer at '" + x + "'");
  }
  KarpReport rep = karp_check(res.reduction, res.b, marked_union(inst.a, inst.a_prime), 10);
  c.expect(rep.ok(), std::to_string(rep.violations.size()) + " reduction violations");
  c.expect(res.witnesses.size() == 6, "witness count");
  for (const DiagWitness& w : res.witnesses) {
    const TotalDecider& prob = w.prime ? inst.a_prime : inst.a;
    const Enumeration& pres = w.prime ? inst.pres_prime : inst.pres;
    const std::uint64_t k = oracle::direct_gap_index([&](std::uint64_t n) { return res.r(n).value; }, w.z.size());
    const bool ok = w.verified && k % 2 == (w.prime ? 1u : 0u) && res.b.classify(w.z) == prob.classify(w.z) &&
                    contradicts(prob.classify(w.z), pres(w.machine).classify(w.z), DiagMode::Presentable);
    c.expect(ok, std::string(w.prime ? "C'" : "C") + " machine " + std::to_string(w.machine));
  }
  audit(res.r, 10);
  if (c.ok) c.detail = "r(0) = " + std::to_string(res.r(0).value) + ", 6 witnesses verified";
  return c;
}

Check criterion8() {
  Check c;
  const TotalDecider a = problems::parity();
  Enumeration pres = list_enumeration("C", {problems::const_yes(), problems::const_no(), problems::majority()});
  DiagResult res = ladner(a, pres, DiagMode::Presentable, harder_enumeration(a, pres, HarderMode::Karp));
  KarpReport rep = karp_check(res.reduction, res.b, a, 10);
  c.expect(rep.ok(), std::to_string(rep.violations.size()) + " reduction violations");
  // The first odd interval starts at length r(0); its first A-yes word is a hole.
  const std::uint64_t len = res.r(0).value;
  const Word hole = Word(len - 1, '0') + "1";
  c.expect(!gap_member(res.r, hole), "length r(0) not in an odd interval");
  c.expect(a.classify(hole) == Verdict::Yes && res.b.classify(hole) == Verdict::No, "no hole at '" + hole + "'");
  for (const DiagWitness& w : res.witnesses) c.expect(w.verified, "witness not verified");
  audit(res.r, 10);
  if (c.ok) c.detail = "hole at length " + std::to_string(len);
  return c;
}

Check criterion9() {
  Check c;
  for (const AuditEntry& e : g_audit) {
    const std::string at = e.name + "(" + std::to_string(e.n) + ")";
    c.expect(e.value.cost <= e.value.value, "cost exceeds value at " + at);
    c.expect(e.value.value > e.n, "not increasing at " + at);
  }
  c.expect(!g_audit.empty(), "nothing audited");
  if (c.ok) c.detail = std::to_string(g_audit.size()) + " evaluations";
  return c;
}

Check criterion10() {
  Check c;
  std::mt19937_64 rng(4004);
  for (int k = 0; k < 120; ++k) {
    Circuit circ = oracle::random_circuit(rng, 6, 20, k % 3);
    c.expect(parse_circuit(encode_circuit(circ, true), true) == circ, "circuit roundtrip");
  }
  for (int k = 0; k < 120; ++k) {
    std::uniform_int_distribution<State> ns(1, 5);
    const State n = ns(rng);
    std::uniform_int_distribution<State> st(0, n - 1);
    std::uniform_int_distribution<int> sym(0, 2);
    std::vector<Transition> ts;
    for (State s = 0; s + 1 < n; ++s)
      for (int r = 0; r < 3; ++r)
        ts.push_back({s, static_cast<Symbol>(r), {st(rng), static_cast<Symbol>(sym(rng)), static_cast<Move>(sym(rng))}});
    MachineDesc m(n, 0, {n - 1}, ts);
    c.expect(decode_godel(encode_godel(m)) == m, "machine roundtrip");
  }
  std::set<std::vector<std::uint64_t>> seen;
  bool square = false, affine = false;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Polynomial p = poly_series(i);
    c.expect(seen.insert(p.coefficients()).second, "duplicate polynomial at " + std::to_string(i));
    square = square || p == Polynomial({0, 0, 1});
    affine = affine || p == Polynomial({3, 2});
  }
  c.expect(square && affine, "x^2 or 2x+3 missing");
  std::uniform_int_distribution<std::uint64_t> d(0, 1u << 30);
  for (int k = 0; k < 10000; ++k) {
    const std::uint64_t j = d(rng), l = d(rng);
    c.expect(unpair(pair(j, l)) == std::pair{j, l}, "unpair(pair)");
    auto [a, b] = unpair(static_cast<std::uint64_t>(k));
    c.expect(pair(a, b) == static_cast<std::uint64_t>(k), "pair(unpair)");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"encoding fidelity", criterion1},
      {"exact vs float simulation", criterion2},
      {"Sylvester trichotomy", criterion3},
      {"QCMA/QMA consistency", criterion4},
      {"PTM exactness", criterion5},
      {"gap language", criterion6},
      {"diagonalization toy run", criterion7},
      {"Ladner holes", criterion8},
      {"accounting soundness", criterion9},
      {"roundtrips and enumerations", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                c.detail.empty() ? "" : ": ", c.detail.c_str());
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
