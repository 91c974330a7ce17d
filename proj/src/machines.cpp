#include "udt/machines.hpp"

#include "udt/errors.hpp"

namespace udt::machines {

State Builder::add_state(bool final) {
  finals_.push_back(final);
  return static_cast<State>(finals_.size() - 1);
}

void Builder::on(State from, Symbol read, Action act) { transitions_.push_back({from, read, act}); }

void Builder::on_any(State from, Action act) {
  for (Symbol s : {Symbol::Zero, Symbol::One, Symbol::Blank}) on(from, s, act);
}

namespace {

std::vector<State> final_list(const std::vector<bool>& flags) {
  std::vector<State> out;
  for (std::size_t k = 0; k < flags.size(); ++k)
    if (flags[k]) out.push_back(static_cast<State>(k));
  return out;
}

Symbol bit_symbol(char ch) { return ch == '1' ? Symbol::One : Symbol::Zero; }

// States that write `w` right to left starting from the current cell and
// end with the head on w[0] in a fresh final state. Returns the action that
// starts the emission (to be taken on reading the cell where w.back() goes).
Action emit(Builder& b, const Word& w) {
  State done = b.add_state(true);
  if (w.empty()) return {done, Symbol::Blank, Move::N};
  State next = done;
  Move move = Move::N;
  // chain for w[0..n-2]; the returned action writes w[n-1]
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    State s = b.add_state();
    b.on_any(s, {next, bit_symbol(w[j]), move});
    next = s;
    move = Move::L;
  }
  return {next, bit_symbol(w.back()), move};
}

// Reading states for (dfa state, input index), built on demand; the last
// input's terminating blank invokes `finish(q)`.
template <class Finish>
void build_reader(Builder& b, std::uint32_t inputs, const Dfa& dfa, Finish finish) {
  if (inputs == 0) throw Error(ErrorKind::InvalidArgument, "reader needs at least one input");
  const std::uint32_t n = dfa.states * inputs;
  std::vector<State> id(n);
  for (std::uint32_t k = 0; k < n; ++k) id[k] = b.add_state();
  auto at = [&](std::uint32_t q, std::uint32_t in) { return id[q * inputs + in]; };
  b.set_initial(at(dfa.start, 0));
  for (std::uint32_t q = 0; q < dfa.states; ++q) {
    for (std::uint32_t in = 0; in < inputs; ++in) {
      for (int bit = 0; bit < 2; ++bit) {
        std::uint32_t q2 = dfa.step(q, in, bit);
        if (q2 >= dfa.states) throw Error(ErrorKind::InvalidArgument, "dfa step out of range");
        b.on(at(q, in), bit ? Symbol::One : Symbol::Zero, {at(q2, in), Symbol::Blank, Move::R});
      }
      if (in + 1 < inputs) b.on(at(q, in), Symbol::Blank, {at(q, in + 1), Symbol::Blank, Move::R});
      else finish(at(q, in), q);
    }
  }
}

}  // namespace

MachineDesc Builder::build() const {
  return MachineDesc(static_cast<State>(finals_.size()), initial_, final_list(finals_), transitions_);
}

PTMDesc Builder::build_ptm() const {
  return PTMDesc(static_cast<State>(finals_.size()), initial_, final_list(finals_), transitions_);
}

MachineDesc dfa_machine(std::uint32_t inputs, const Dfa& dfa) {
  Builder b;
  build_reader(b, inputs, dfa, [&](State s, std::uint32_t q) { b.on(s, Symbol::Blank, emit(b, dfa.output(q))); });
  return b.build();
}

PTMDesc dfa_ptm(std::uint32_t inputs, const Dfa& dfa, const std::function<std::vector<Word>(std::uint32_t)>& leaves) {
  Builder b;
  build_reader(b, inputs, dfa, [&](State s, std::uint32_t q) {
    auto outs = leaves(q);
    if (outs.empty()) throw Error(ErrorKind::InvalidArgument, "a branch point needs at least one leaf");
    for (const Word& w : outs) b.on(s, Symbol::Blank, emit(b, w));
  });
  return b.build_ptm();
}

namespace {

void build_tree(Builder& b, State at, const Tree& node) {
  for (const Tree& child : node.children) {
    if (child.children.empty()) {
      b.on_any(at, emit(b, child.output));
    } else {
      State s = b.add_state();
      b.on_any(at, {s, Symbol::Blank, Move::N});
      build_tree(b, s, child);
    }
  }
}

Action keep(State next, Symbol s, Move m) { return {next, s, m}; }

}  // namespace

PTMDesc tree_ptm(const Tree& tree) {
  Builder b;
  State erase = b.add_state();
  b.set_initial(erase);
  b.on(erase, Symbol::Zero, {erase, Symbol::Blank, Move::R});
  b.on(erase, Symbol::One, {erase, Symbol::Blank, Move::R});
  if (tree.children.empty()) {
    b.on(erase, Symbol::Blank, emit(b, tree.output));
  } else {
    State root = b.add_state();
    b.on(erase, Symbol::Blank, {root, Symbol::Blank, Move::N});
    build_tree(b, root, tree);
  }
  return b.build_ptm();
}

MachineDesc identity() {
  Builder b;
  b.add_state(true);
  return b.build();
}

MachineDesc constant(const Word& out, std::uint32_t inputs) {
  require_bits(out, "constant output");
  Dfa dfa{1, 0, [](std::uint32_t, std::uint32_t, int) { return 0u; }, [out](std::uint32_t) { return out; }};
  return dfa_machine(inputs, dfa);
}

MachineDesc parity() {
  Dfa dfa{2, 0, [](std::uint32_t q, std::uint32_t, int bit) { return q ^ static_cast<std::uint32_t>(bit); },
          [](std::uint32_t q) { return Word(q ? "1" : "0"); }};
  return dfa_machine(1, dfa);
}

MachineDesc prepend(char bit) {
  if (bit != '0' && bit != '1') throw Error(ErrorKind::InvalidArgument, "prepend needs a bit");
  Builder b;
  State start = b.add_state();
  State left = b.add_state();
  State done = b.add_state(true);
  for (Symbol s : {Symbol::Zero, Symbol::One, Symbol::Blank}) b.on(start, s, keep(left, s, Move::L));
  b.on_any(left, {done, bit == '1' ? Symbol::One : Symbol::Zero, Move::N});
  return b.build();
}

MachineDesc diverge() {
  Builder b;
  State s = b.add_state();
  for (Symbol sym : {Symbol::Zero, Symbol::One, Symbol::Blank}) b.on(s, sym, keep(s, sym, Move::N));
  return b.build();
}

MachineDesc sweep() {
  Builder b;
  State s = b.add_state();
  State done = b.add_state(true);
  b.on(s, Symbol::Zero, keep(s, Symbol::Zero, Move::R));
  b.on(s, Symbol::One, keep(s, Symbol::One, Move::R));
  b.on(s, Symbol::Blank, keep(done, Symbol::Blank, Move::N));
  return b.build();
}

MachineDesc halt_at_first_one() {
  Builder b;
  State s = b.add_state();
  State done = b.add_state(true);
  b.on(s, Symbol::Zero, keep(s, Symbol::Zero, Move::R));
  b.on(s, Symbol::One, keep(done, Symbol::One, Move::N));
  b.on(s, Symbol::Blank, keep(done, Symbol::Blank, Move::N));
  return b.build();
}

MachineDesc witness_equals(const Word& target) {
  require_bits(target, "witness target");
  const auto len = static_cast<std::uint32_t>(target.size());
  const std::uint32_t dead = len + 1;
  Dfa dfa{len + 2, 0,
          [target, len, dead](std::uint32_t q, std::uint32_t in, int bit) {
            if (in == 0) return q;
            if (q < len && target[q] == static_cast<char>('0' + bit)) return q + 1;
            return dead;
          },
          [len](std::uint32_t q) { return Word(q == len ? "1" : "0"); }};
  return dfa_machine(2, dfa);
}

}  // namespace udt::machines
