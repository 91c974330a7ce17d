#pragma once

#include <functional>
#include <vector>

#include "udt/ptm.hpp"
#include "udt/tm.hpp"

namespace udt::machines {

// Accumulates transitions; finish() checks the machine invariants.
class Builder {
 public:
  State add_state(bool final = false);
  void on(State from, Symbol read, Action act);
  // Same action for all three symbols.
  void on_any(State from, Action act);
  void set_initial(State s) { initial_ = s; }

  MachineDesc build() const;
  PTMDesc build_ptm() const;

 private:
  State initial_ = 0;
  std::vector<bool> finals_;
  std::vector<Transition> transitions_;
};

/// Deterministic finite automaton read by a machine that sweeps over its
/// `inputs` blank-separated inputs, erasing them, and then writes
/// `output(state)` so that the head rests on its first symbol. Runtime on
/// inputs of total length n (with k inputs) is n + k - 1 + max(1, |output|).
struct Dfa {
  std::uint32_t states = 1;
  std::uint32_t start = 0;
  // (state, input index, bit) -> state
  std::function<std::uint32_t(std::uint32_t, std::uint32_t, int)> step;
  std::function<Word(std::uint32_t)> output;
};

MachineDesc dfa_machine(std::uint32_t inputs, const Dfa& dfa);

/// Like dfa_machine, but at the end branches into one leaf per entry of
/// leaves(state); each leaf writes its word and halts in its own final state.
PTMDesc dfa_ptm(std::uint32_t inputs, const Dfa& dfa, const std::function<std::vector<Word>(std::uint32_t)>& leaves);

// Computation tree for tree_ptm: a node is a leaf (output) or branches into
// children, all with uniform counting over leaves.
struct Tree {
  Word output;                 // used when children is empty
  std::vector<Tree> children;

  static Tree leaf(Word w) { return {std::move(w), {}}; }
  static Tree branch(std::vector<Tree> kids) { return {{}, std::move(kids)}; }
};

// Erases its single input, then walks `tree`, one step per edge.
PTMDesc tree_ptm(const Tree& tree);

// Stock machines on one input unless stated otherwise.
MachineDesc identity();                              // output = input, 0 steps
MachineDesc constant(const Word& out, std::uint32_t inputs = 1);
MachineDesc parity();                                // "1" iff odd number of ones
MachineDesc prepend(char bit);                       // output = bit ++ input
MachineDesc diverge();                               // never halts
MachineDesc sweep();                                 // halts after |x| + 1 steps
MachineDesc halt_at_first_one();                     // runtime depends on content
// Two inputs (x, y): "1" iff y == target, else "0".
MachineDesc witness_equals(const Word& target);

}  // namespace udt::machines
