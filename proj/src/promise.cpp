#include "udt/promise.hpp"

#include <algorithm>
#include <charconv>

#include "udt/errors.hpp"
#include "udt/machines.hpp"

namespace udt {

RunResult clocked_run(const MachineDesc& m, std::span<const Word> inputs, std::uint64_t clock, const Caps& caps) {
  const std::uint64_t fuel = std::min(clock, caps.fuel);
  RunResult res = run(m, inputs, fuel);
  if (!res.halted() && fuel < clock)
    throw Error(ErrorKind::FuelCap, "machine still running after " + std::to_string(caps.fuel) + " steps");
  return res;
}

TotalDecider::TotalDecider(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::make_shared<const Fn>(std::move(fn))), realization_(Builtin{}) {}

TotalDecider TotalDecider::from_verdicts(std::string name, std::function<Verdict(const Word&)> fn) {
  return TotalDecider(std::move(name), [fn = std::move(fn)](const Word& x) { return Classified{fn(x), 1}; });
}

TotalDecider TotalDecider::machine_backed(std::string name, MachineDesc machine, Polynomial fuel, const Caps& caps) {
  const std::string label = name;
  TotalDecider d(std::move(name), [machine, fuel, label, caps](const Word& x) {
    RunResult res = clocked_run(machine, std::span<const Word>(&x, 1), fuel(x.size()), caps);
    if (!res.halted())
      throw Error(ErrorKind::NotTotalDecider, label + " ran out of fuel on '" + x + "'");
    Verdict v;
    if (res.output == "1") v = Verdict::Yes;
    else if (res.output == "0") v = Verdict::No;
    else if (res.output == "10") v = Verdict::OutsidePromise;
    else throw Error(ErrorKind::NotTotalDecider, label + " output '" + res.output + "' on '" + x + "'");
    return Classified{v, res.steps + 1};
  });
  d.realization_ = MachineBacked{std::move(machine), std::move(fuel)};
  return d;
}

Classified TotalDecider::classify_costed(const Word& x) const {
  require_bits(x, "word");
  return (*fn_)(x);
}

namespace problems {

namespace {

std::uint64_t ones(const Word& x) { return static_cast<std::uint64_t>(std::count(x.begin(), x.end(), '1')); }

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

TotalDecider const_yes() {
  return TotalDecider::from_verdicts("const-yes", [](const Word&) { return Verdict::Yes; });
}

TotalDecider const_no() {
  return TotalDecider::from_verdicts("const-no", [](const Word&) { return Verdict::No; });
}

TotalDecider const_outside() {
  return TotalDecider::from_verdicts("const-outside", [](const Word&) { return Verdict::OutsidePromise; });
}

TotalDecider parity() {
  return TotalDecider::from_verdicts("parity", [](const Word& x) { return ones(x) % 2 ? Verdict::Yes : Verdict::No; });
}

TotalDecider parity_even_length() {
  return TotalDecider::from_verdicts("parity-even-length", [](const Word& x) {
    if (x.size() % 2) return Verdict::OutsidePromise;
    return ones(x) % 2 ? Verdict::Yes : Verdict::No;
  });
}

TotalDecider majority() {
  return TotalDecider::from_verdicts("majority", [](const Word& x) {
    const std::uint64_t n1 = ones(x), n0 = x.size() - n1;
    if (n1 == n0) return Verdict::OutsidePromise;
    return n1 > n0 ? Verdict::Yes : Verdict::No;
  });
}

TotalDecider length_interval(std::uint64_t lo, std::uint64_t hi) {
  return TotalDecider::from_verdicts("length-in:" + std::to_string(lo) + ":" + std::to_string(hi),
                                     [lo, hi](const Word& x) {
                                       return lo <= x.size() && x.size() < hi ? Verdict::Yes : Verdict::No;
                                     });
}

std::optional<TotalDecider> builtin(const std::string& name) {
  if (name == "const-yes") return const_yes();
  if (name == "const-no") return const_no();
  if (name == "const-outside") return const_outside();
  if (name == "parity") return parity();
  if (name == "parity-even-length") return parity_even_length();
  if (name == "majority") return majority();
  const std::string prefix = "length-in:";
  if (name.rfind(prefix, 0) == 0) {
    std::string_view rest(name);
    rest.remove_prefix(prefix.size());
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto lo = parse_u64(rest.substr(0, colon));
    auto hi = parse_u64(rest.substr(colon + 1));
    if (!lo || !hi) return std::nullopt;
    return length_interval(*lo, *hi);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"const-yes", "const-no", "const-outside", "parity", "parity-even-length", "majority", "length-in:<lo>:<hi>"};
}

}  // namespace problems

ReductionFn::ReductionFn(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::make_shared<const Fn>(std::move(fn))), realization_(Builtin{}) {}

ReductionFn ReductionFn::from_function(std::string name, std::function<Word(const Word&)> fn) {
  return ReductionFn(std::move(name), [fn = std::move(fn)](const Word& x) { return Mapped{fn(x), 1}; });
}

ReductionFn ReductionFn::machine_backed(std::string name, MachineDesc machine, Polynomial runtime, bool clocked,
                                        const Caps& caps) {
  const std::string label = name;
  ReductionFn f(std::move(name), [machine, runtime, clocked, label, caps](const Word& x) {
    RunResult res = clocked_run(machine, std::span<const Word>(&x, 1), runtime(x.size()), caps);
    if (!res.halted()) {
      if (!clocked) throw Error(ErrorKind::ReductionFuelExhausted, label + " on '" + x + "'");
      return Mapped{Word{}, res.steps + 1};
    }
    return Mapped{res.output, res.steps + 1};
  });
  f.realization_ = MachineBacked{std::move(machine), std::move(runtime), clocked};
  return f;
}

ReductionFn ReductionFn::identity() {
  return machine_backed("identity", machines::identity(), Polynomial::constant(1));
}

Mapped ReductionFn::apply_costed(const Word& x) const {
  require_bits(x, "word");
  Mapped m = (*fn_)(x);
  require_bits(m.value, "reduction output");
  return m;
}

bool in_sym_diff(Verdict a, Verdict b) noexcept {
  return (a == Verdict::Yes && b == Verdict::No) || (a == Verdict::No && b == Verdict::Yes);
}

bool in_difference(Verdict a, Verdict b) noexcept {
  return (a == Verdict::Yes && b != Verdict::Yes) || (a == Verdict::No && b != Verdict::No);
}

bool in_total_sym_diff(Verdict a, Verdict b) noexcept { return in_difference(a, b) || in_difference(b, a); }

namespace {

void check_bound(std::size_t bound, const Caps& caps) {
  if (bound > caps.word_length)
    throw Error(ErrorKind::CapExceeded,
                "word bound " + std::to_string(bound) + " exceeds " + std::to_string(caps.word_length));
}

}  // namespace

Differences differences(const TotalDecider& a, const TotalDecider& b, std::size_t bound, const Caps& caps) {
  check_bound(bound, caps);
  Differences out;
  Word w;
  do {
    Verdict va = a.classify(w), vb = b.classify(w);
    if (in_sym_diff(va, vb)) out.sym_diff.push_back(w);
    if (in_difference(va, vb)) out.a_minus_b.push_back(w);
    if (in_difference(vb, va)) out.b_minus_a.push_back(w);
    if (in_total_sym_diff(va, vb)) out.total_sym_diff.push_back(w);
  } while (next_shortlex(w, bound));
  return out;
}

TotalDecider marked_union(const TotalDecider& a, const TotalDecider& a_prime) {
  return TotalDecider(a.name() + "⊕" + a_prime.name(), [a, a_prime](const Word& x) {
    if (x.empty()) return Classified{Verdict::OutsidePromise, 1};
    Classified inner = (x[0] == '0' ? a : a_prime).classify_costed(x.substr(1));
    return Classified{inner.verdict, inner.cost + 1};
  });
}

KarpReport karp_check(const ReductionFn& f, const TotalDecider& a, const TotalDecider& b, std::size_t bound,
                      const Caps& caps) {
  check_bound(bound, caps);
  KarpReport report;
  Word x;
  do {
    ++report.checked;
    Verdict va = a.classify(x);
    if (va == Verdict::OutsidePromise) continue;
    Word image = f(x);
    Verdict vb = b.classify(image);
    if (vb != va) report.violations.push_back({x, image, va, vb});
  } while (next_shortlex(x, bound));
  return report;
}

CookResult cook_run(const OracleMachine& o, const TotalDecider& oracle, const Word& x, const Caps& caps) {
  require_bits(x, "input");
  const MachineDesc& m = o.machine;
  const std::uint64_t clock = o.runtime(x.size());
  const std::uint64_t fuel = std::min(clock, caps.fuel);
  CookResult out;
  if (m.is_trivial()) {
    if (fuel == 0) throw Error(ErrorKind::FuelExhausted, "oracle machine on '" + x + "'");
    out.output = "0";
    out.steps = out.cost = 1;
    return out;
  }
  Tape tape(std::span<const Word>(&x, 1));
  State state = m.initial();
  while (!m.is_final(state)) {
    if (out.steps == fuel) {
      if (fuel < clock) throw Error(ErrorKind::FuelCap, "oracle machine on '" + x + "'");
      throw Error(ErrorKind::FuelExhausted, "oracle machine on '" + x + "'");
    }
    const Action& act = *m.at(state, tape.read(tape.head));
    apply_action(tape, act);
    state = act.next;
    ++out.steps;
    if (o.oracle_state && state == *o.oracle_state) {
      Word query = tape.word_at(tape.head);
      Classified ans = oracle.classify_costed(query);
      out.cost += ans.cost;
      if (ans.verdict == Verdict::OutsidePromise) throw Error(ErrorKind::NonPromisedQuery, "'" + query + "'");
      out.queries.push_back(query);
      for (std::size_t k = 1; k < query.size(); ++k) tape.write(tape.head + static_cast<std::int64_t>(k), Symbol::Blank);
      tape.write(tape.head, ans.verdict == Verdict::Yes ? Symbol::One : Symbol::Zero);
    }
  }
  out.output = tape.word_at(tape.head);
  out.accepted = out.output == "1";
  out.cost += out.steps;
  return out;
}

OracleMachine karp_to_cook(const ReductionFn& f) {
  const auto* backed = std::get_if<ReductionFn::MachineBacked>(&f.realization());
  if (!backed) throw Error(ErrorKind::InvalidArgument, "karp_to_cook needs a machine-backed reduction");
  // The trivial machine has no transition table; its behaviour (output "0")
  // is reproduced by an explicit constant machine.
  const MachineDesc base = backed->machine.is_trivial() ? machines::constant("0") : backed->machine;
  const State oracle = base.states();
  std::vector<Transition> ts;
  for (const Transition& t : base.transitions())
    if (!base.is_final(t.from)) ts.push_back(t);
  for (State s : base.finals())
    for (Symbol sym : {Symbol::Zero, Symbol::One, Symbol::Blank}) ts.push_back({s, sym, {oracle, sym, Move::N}});
  MachineDesc machine(base.states() + 1, base.initial(), {oracle}, std::move(ts));
  std::uint64_t extra = backed->machine.is_trivial() ? 2 : 1;
  Polynomial runtime = backed->machine.is_trivial() ? Polynomial({2, 1}) : backed->runtime;
  return OracleMachine{std::move(machine), oracle, runtime.plus_constant(extra)};
}

}  // namespace udt
