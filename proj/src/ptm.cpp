#include "udt/ptm.hpp"

#include <algorithm>
#include <string>

#include "udt/errors.hpp"

namespace udt {

PTMDesc::PTMDesc(State states, State initial, std::vector<State> finals, std::vector<Transition> transitions)
    : states_(states), initial_(initial), finals_(std::move(finals)) {
  auto bad = [](const std::string& why) { return Error(ErrorKind::InvalidArgument, "ptm: " + why); };
  if (states_ == 0) throw bad("needs at least one state");
  if (initial_ >= states_) throw bad("initial state out of range");
  std::sort(finals_.begin(), finals_.end());
  if (std::adjacent_find(finals_.begin(), finals_.end()) != finals_.end()) throw bad("duplicate final state");
  final_flags_.assign(states_, false);
  for (State f : finals_) {
    if (f >= states_) throw bad("final state out of range");
    final_flags_[f] = true;
  }
  table_.assign(std::size_t{states_} * 3, {});
  for (const Transition& t : transitions) {
    if (t.from >= states_ || t.act.next >= states_) throw bad("transition state out of range");
    table_[t.from * 3 + static_cast<unsigned>(t.read)].push_back(t.act);
  }
  for (auto& set : table_) {
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw bad("repeated branch");
  }
  for (State s = 0; s < states_; ++s) {
    if (final_flags_[s]) continue;
    for (unsigned sym = 0; sym < 3; ++sym)
      if (table_[s * 3 + sym].empty()) throw bad("missing transition for state " + std::to_string(s));
  }
}

PTMDesc PTMDesc::trivial() {
  PTMDesc m;
  m.trivial_ = true;
  m.states_ = 1;
  m.final_flags_.assign(1, false);
  m.table_.assign(3, {});
  return m;
}

PTMDesc PTMDesc::from_deterministic(const MachineDesc& m) {
  if (m.is_trivial()) return trivial();
  return PTMDesc(m.states(), m.initial(), m.finals(), m.transitions());
}

std::vector<Transition> PTMDesc::transitions() const {
  std::vector<Transition> out;
  for (State s = 0; s < states_ && !trivial_; ++s)
    for (unsigned sym = 0; sym < 3; ++sym)
      for (const Action& a : table_[s * 3 + sym]) out.push_back({s, static_cast<Symbol>(sym), a});
  return out;
}

std::size_t PTMDesc::max_width() const {
  std::size_t w = 1;
  for (const auto& set : table_) w = std::max(w, set.size());
  return w;
}

PTMDesc decode_ptm(std::string_view bits) {
  auto img = detail::parse_godel(bits);
  if (!img) return PTMDesc::trivial();
  try {
    return PTMDesc(img->states, 0, img->finals, img->transitions);
  } catch (const Error&) {
    return PTMDesc::trivial();
  }
}

Word encode_ptm(const PTMDesc& m) {
  if (m.is_trivial()) return {};
  const State init = m.initial();
  auto relabel = [init](State s) { return s == init ? 0 : (s == 0 ? init : s); };
  std::vector<State> finals;
  for (State f : m.finals()) finals.push_back(relabel(f));
  std::sort(finals.begin(), finals.end());
  std::vector<Transition> ts;
  for (Transition t : m.transitions()) {
    t.from = relabel(t.from);
    t.act.next = relabel(t.act.next);
    ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  return detail::emit_godel(m.states(), finals, ts);
}

namespace {

struct Branch {
  Tape tape;
  State state;
  std::uint64_t steps;
  std::vector<std::uint32_t> path;
};

std::string render_path(const std::vector<std::uint32_t>& path) {
  std::string out = "[";
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(path[k]);
  }
  return out + "]";
}

void count_leaf(BranchStats& stats, const Word& output) {
  if (output == "1") ++stats.accepting;
  else if (output == "0") ++stats.rejecting;
  else ++stats.other;
}

}  // namespace

BranchStats enumerate_branches(const PTMDesc& m, std::span<const Word> inputs, std::uint64_t fuel, FuelPolicy policy,
                               const Caps& caps) {
  BranchStats stats;
  auto leaf_guard = [&] {
    if (++stats.total > caps.branch_leaves)
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(caps.branch_leaves) + " branches");
  };
  if (m.is_trivial()) {
    if (fuel == 0) {
      if (policy == FuelPolicy::Strict) throw Error(ErrorKind::BranchFuelExhausted, "path []");
      ++stats.exhausted;
    } else {
      count_leaf(stats, "0");
    }
    leaf_guard();
  } else {
    std::vector<Branch> stack;
    stack.push_back({Tape(inputs), m.initial(), 0, {}});
    while (!stack.empty()) {
      Branch b = std::move(stack.back());
      stack.pop_back();
      for (;;) {
        if (m.is_final(b.state)) {
          count_leaf(stats, b.tape.word_at(b.tape.head));
          leaf_guard();
          break;
        }
        if (b.steps == fuel) {
          if (policy == FuelPolicy::Strict)
            throw Error(ErrorKind::BranchFuelExhausted, "path " + render_path(b.path));
          ++stats.exhausted;
          leaf_guard();
          break;
        }
        const auto& acts = m.at(b.state, b.tape.read(b.tape.head));
        // Push later alternatives in reverse so the first choice is explored first.
        for (std::size_t k = acts.size(); k-- > 1;) {
          Branch alt{b.tape, acts[k].next, b.steps + 1, b.path};
          apply_action(alt.tape, acts[k]);
          alt.path.push_back(static_cast<std::uint32_t>(k));
          stack.push_back(std::move(alt));
        }
        apply_action(b.tape, acts[0]);
        b.state = acts[0].next;
        ++b.steps;
        if (acts.size() > 1) b.path.push_back(0);
      }
    }
  }
  stats.p_acc = Rational(stats.accepting) / Rational(stats.total);
  stats.p_rej = Rational(stats.rejecting) / Rational(stats.total);
  stats.p_acc.canonicalize();
  stats.p_rej.canonicalize();
  return stats;
}

Verdict classify_acceptance(const Rational& p_acc, const Thresholds& t) {
  t.validate();
  if (p_acc >= t.c) return Verdict::Yes;
  if (p_acc <= t.s) return Verdict::No;
  return Verdict::OutsidePromise;
}

Verdict classify_bpp(const PTMDesc& m, const Polynomial& runtime, const Word& x, const Thresholds& t,
                     FuelPolicy policy, const Caps& caps) {
  t.validate();
  auto stats = enumerate_branches(m, std::span<const Word>(&x, 1), runtime(x.size()), policy, caps);
  return classify_acceptance(stats.p_acc, t);
}

Verdict classify_ma(const PTMDesc& m, const Polynomial& runtime, const LengthFn& wit_len, const Word& x,
                    const Thresholds& t, FuelPolicy policy, const Caps& caps) {
  t.validate();
  require_bits(x, "input");
  const std::uint64_t len = wit_len(x.size());
  if (len > caps.witness_bits)
    throw Error(ErrorKind::WitnessSpaceTooLarge, "2^" + std::to_string(len) + " witnesses");
  const std::uint64_t fuel = runtime(x.size());
  bool all_low = true;
  std::vector<Word> inputs{x, Word(len, '0')};
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << len); ++y) {
    for (std::uint64_t k = 0; k < len; ++k) inputs[1][k] = (y >> (len - 1 - k) & 1u) ? '1' : '0';
    auto stats = enumerate_branches(m, inputs, fuel, policy, caps);
    if (stats.p_acc >= t.c) return Verdict::Yes;
    if (stats.p_acc > t.s) all_low = false;
  }
  return all_low ? Verdict::No : Verdict::OutsidePromise;
}

}  // namespace udt
