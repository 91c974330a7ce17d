#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udt/word.hpp"

namespace udt {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };
enum class Move : std::uint8_t { L = 0, R = 1, N = 2 };

using State = std::uint32_t;

struct Action {
  State next = 0;
  Symbol write = Symbol::Blank;
  Move move = Move::N;

  friend auto operator<=>(const Action&, const Action&) = default;
};

struct Transition {
  State from = 0;
  Symbol read = Symbol::Blank;
  Action act;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

char symbol_char(Symbol s) noexcept;  // '0', '1', '_'

/// A deterministic Turing machine over {0, 1, blank}.
///
/// Invariants (checked on construction): initial < states, finals < states,
/// at most one transition per (state, symbol), and every (non-final state,
/// symbol) pair has a transition. Transitions out of final states are kept
/// but never fire.
///
/// The trivial machine is a distinguished value: it is what every malformed
/// Goedel string denotes, and it halts after one step with output "0".
class MachineDesc {
 public:
  MachineDesc(State states, State initial, std::vector<State> finals, std::vector<Transition> transitions);
  static MachineDesc trivial();

  bool is_trivial() const noexcept { return trivial_; }
  State states() const noexcept { return states_; }
  State initial() const noexcept { return initial_; }
  const std::vector<State>& finals() const noexcept { return finals_; }
  bool is_final(State s) const noexcept { return s < states_ && final_flags_[s]; }
  const std::optional<Action>& at(State s, Symbol read) const { return table_[s * 3 + static_cast<unsigned>(read)]; }
  // Sorted by (from, read).
  std::vector<Transition> transitions() const;

  friend bool operator==(const MachineDesc&, const MachineDesc&) = default;

 private:
  MachineDesc() = default;

  bool trivial_ = false;
  State states_ = 0;
  State initial_ = 0;
  std::vector<State> finals_;
  std::vector<bool> final_flags_;
  std::vector<std::optional<Action>> table_;
};

/// Two-way unbounded tape; every cell outside the stored window is blank.
class Tape {
 public:
  Tape() = default;
  // Inputs written left to right, separated by single blanks, first symbol
  // at position 0.
  explicit Tape(std::span<const Word> inputs);

  Symbol read(std::int64_t pos) const noexcept;
  void write(std::int64_t pos, Symbol s);
  // Symbols from pos up to (excluding) the next blank.
  Word word_at(std::int64_t pos) const;
  std::uint64_t nonblank_count() const noexcept;

  std::int64_t head = 0;

 private:
  std::vector<Symbol> cells_;
  std::int64_t origin_ = 0;  // tape position of cells_[0]
};

struct RunResult {
  enum class Outcome { Halted, FuelExhausted };
  Outcome outcome = Outcome::FuelExhausted;
  Word output;  // empty unless Halted
  std::uint64_t steps = 0;

  bool halted() const noexcept { return outcome == Outcome::Halted; }
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Applies one action to a tape (write, then move).
void apply_action(Tape& tape, const Action& act);

RunResult run(const MachineDesc& m, std::span<const Word> inputs, std::uint64_t fuel);
inline RunResult run(const MachineDesc& m, const Word& input, std::uint64_t fuel) {
  return run(m, std::span<const Word>(&input, 1), fuel);
}

// Goedel grammar (all runs in unary, s encoded as 1^(s+1)):
//
//   machine     = 1^S "0" final* "00" transition*
//   final       = 1^(f+1) "0"
//   transition  = 1^(s+1) "0" sym "0" 1^(s'+1) "0" sym "0" move "00"
//   sym / move  = "1" | "10" | "11"      (0 | 1 | blank,  L | R | N)
//
// Decoded machines start in state 0. Anything that fails to parse, repeats
// a (state, symbol) pair, or leaves a non-final pair undefined denotes the
// trivial machine, whose canonical encoding is the empty string.
MachineDesc decode_godel(std::string_view bits);
Word encode_godel(const MachineDesc& m);

namespace detail {

// Grammar-level view shared by deterministic and probabilistic machines.
struct GodelImage {
  State states = 0;
  std::vector<State> finals;
  std::vector<Transition> transitions;  // in source order, may repeat keys
};

std::optional<GodelImage> parse_godel(std::string_view bits);
Word emit_godel(State states, const std::vector<State>& finals, const std::vector<Transition>& transitions);

}  // namespace detail

}  // namespace udt
