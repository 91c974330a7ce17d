#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "udt/caps.hpp"
#include "udt/field.hpp"
#include "udt/polynomial.hpp"
#include "udt/tm.hpp"
#include "udt/verdict.hpp"

namespace udt {

/// Probabilistic Turing machine: each (non-final state, symbol) pair maps
/// to a non-empty set of actions, one computation branch per action.
class PTMDesc {
 public:
  PTMDesc(State states, State initial, std::vector<State> finals, std::vector<Transition> transitions);
  static PTMDesc trivial();
  static PTMDesc from_deterministic(const MachineDesc& m);

  bool is_trivial() const noexcept { return trivial_; }
  State states() const noexcept { return states_; }
  State initial() const noexcept { return initial_; }
  const std::vector<State>& finals() const noexcept { return finals_; }
  bool is_final(State s) const noexcept { return s < states_ && final_flags_[s]; }
  // Sorted, distinct actions.
  const std::vector<Action>& at(State s, Symbol read) const { return table_[s * 3 + static_cast<unsigned>(read)]; }
  std::vector<Transition> transitions() const;
  std::size_t max_width() const;

  friend bool operator==(const PTMDesc&, const PTMDesc&) = default;

 private:
  PTMDesc() = default;

  bool trivial_ = false;
  State states_ = 0;
  State initial_ = 0;
  std::vector<State> finals_;
  std::vector<bool> final_flags_;
  std::vector<std::vector<Action>> table_;
};

// Same grammar as decode_godel; a repeated (state, symbol) pair adds a branch.
// Repeating an identical quintuple is malformed.
PTMDesc decode_ptm(std::string_view bits);
Word encode_ptm(const PTMDesc& m);

/// Leaf counts of the full computation tree. Leaves are weighted uniformly,
/// so p_acc = accepting / total.
struct BranchStats {
  std::uint64_t accepting = 0;  // halted with output "1"
  std::uint64_t rejecting = 0;  // halted with output "0"
  std::uint64_t other = 0;      // halted with any other output
  std::uint64_t exhausted = 0;  // clocked out (FuelPolicy::Clocked only)
  std::uint64_t total = 0;
  Rational p_acc{0};
  Rational p_rej{0};
};

// Depth-first over all branches. Under FuelPolicy::Strict a branch still
// running after `fuel` steps raises BranchFuelExhausted naming the branch
// choices taken; under Clocked it is counted in `exhausted`.
BranchStats enumerate_branches(const PTMDesc& m, std::span<const Word> inputs, std::uint64_t fuel,
                               FuelPolicy policy = FuelPolicy::Strict, const Caps& caps = {});

Verdict classify_acceptance(const Rational& p_acc, const Thresholds& t);

Verdict classify_bpp(const PTMDesc& m, const Polynomial& runtime, const Word& x, const Thresholds& t = {},
                     FuelPolicy policy = FuelPolicy::Strict, const Caps& caps = {});

// Witness length as a function of |x|.
using LengthFn = std::function<std::uint64_t(std::uint64_t)>;

// The witness is the second input. Yes iff some witness of length
// wit_len(|x|) reaches c, No iff every witness stays <= s.
Verdict classify_ma(const PTMDesc& m, const Polynomial& runtime, const LengthFn& wit_len, const Word& x,
                    const Thresholds& t = {}, FuelPolicy policy = FuelPolicy::Strict, const Caps& caps = {});

}  // namespace udt
