#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "udt/caps.hpp"
#include "udt/polynomial.hpp"
#include "udt/tm.hpp"
#include "udt/verdict.hpp"
#include "udt/word.hpp"

namespace udt {

// run() with fuel min(clock, caps.fuel). Exhausting caps.fuel while the
// clock allows more raises FuelCap; exhausting the clock is reported as
// FuelExhausted in the result.
RunResult clocked_run(const MachineDesc& m, std::span<const Word> inputs, std::uint64_t clock, const Caps& caps);

// A verdict together with the accounting units spent producing it: one per
// classification call plus one per simulated machine step.
struct Classified {
  Verdict verdict = Verdict::No;
  std::uint64_t cost = 1;
};

/// A total computable map from words to {Yes, No, OutsidePromise}. Copies
/// share the underlying function, which must be pure.
class TotalDecider {
 public:
  struct Builtin {};
  // Runs the machine with fuel(|x|); outputs "1", "0", "10" map to the three
  // verdicts, anything else (or running out of fuel) raises NotTotalDecider.
  struct MachineBacked {
    MachineDesc machine;
    Polynomial fuel;
  };
  using Realization = std::variant<Builtin, MachineBacked>;
  using Fn = std::function<Classified(const Word&)>;

  TotalDecider(std::string name, Fn fn);
  static TotalDecider from_verdicts(std::string name, std::function<Verdict(const Word&)> fn);
  // Fuel above caps.fuel is cut off there; running out of it raises FuelCap.
  static TotalDecider machine_backed(std::string name, MachineDesc machine, Polynomial fuel, const Caps& caps = {});

  const std::string& name() const noexcept { return name_; }
  const Realization& realization() const noexcept { return realization_; }

  Verdict classify(const Word& x) const { return classify_costed(x).verdict; }
  Classified classify_costed(const Word& x) const;

 private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
  Realization realization_;
};

inline Verdict classify(const TotalDecider& d, const Word& x) { return d.classify(x); }

namespace problems {

TotalDecider const_yes();      // (Sigma*, {})
TotalDecider const_no();       // ({}, Sigma*)
TotalDecider const_outside();  // ({}, {})
TotalDecider parity();         // yes iff an odd number of ones
// Parity on even-length words; odd lengths are outside the promise.
TotalDecider parity_even_length();
// Yes iff more ones than zeros, No iff fewer, OutsidePromise on ties.
TotalDecider majority();
// Yes iff lo <= |x| < hi, No otherwise.
TotalDecider length_interval(std::uint64_t lo, std::uint64_t hi);

// Registry of the above by name: const-yes, const-no, const-outside, parity,
// parity-even-length, majority, length-in:<lo>:<hi>. Returns nullopt for
// unknown names.
std::optional<TotalDecider> builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace problems

struct Mapped {
  Word value;
  std::uint64_t cost = 1;
};

/// Total function on words used as a Karp reduction.
class ReductionFn {
 public:
  struct Builtin {};
  // With clocked = false an overrun of runtime(|x|) raises
  // ReductionFuelExhausted; with clocked = true it yields the empty word.
  struct MachineBacked {
    MachineDesc machine;
    Polynomial runtime;
    bool clocked = false;
  };
  using Realization = std::variant<Builtin, MachineBacked>;
  using Fn = std::function<Mapped(const Word&)>;

  ReductionFn(std::string name, Fn fn);
  static ReductionFn from_function(std::string name, std::function<Word(const Word&)> fn);
  static ReductionFn machine_backed(std::string name, MachineDesc machine, Polynomial runtime, bool clocked = false,
                                    const Caps& caps = {});
  static ReductionFn identity();

  const std::string& name() const noexcept { return name_; }
  const Realization& realization() const noexcept { return realization_; }

  Word operator()(const Word& x) const { return apply_costed(x).value; }
  Mapped apply_costed(const Word& x) const;

 private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
  Realization realization_;
};

/// The three difference notions restricted to words of length <= bound,
/// each in shortlex order.
struct Differences {
  std::vector<Word> sym_diff;        // (Ayes & Bno) | (Ano & Byes)
  std::vector<Word> a_minus_b;       // (Ayes \ Byes) | (Ano \ Bno)
  std::vector<Word> b_minus_a;
  std::vector<Word> total_sym_diff;  // a_minus_b | b_minus_a
};

// Pointwise membership tests behind Differences.
bool in_sym_diff(Verdict a, Verdict b) noexcept;
bool in_difference(Verdict a, Verdict b) noexcept;
bool in_total_sym_diff(Verdict a, Verdict b) noexcept;

Differences differences(const TotalDecider& a, const TotalDecider& b, std::size_t bound, const Caps& caps = {});

// 0x -> A(x), 1x -> A'(x), empty word -> OutsidePromise.
TotalDecider marked_union(const TotalDecider& a, const TotalDecider& a_prime);

struct KarpViolation {
  Word x;
  Word image;
  Verdict source;
  Verdict target;
};

struct KarpReport {
  std::uint64_t checked = 0;
  std::vector<KarpViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

// Checks x in Ayes => f(x) in Byes and x in Ano => f(x) in Bno for all
// |x| <= bound, collecting every violation.
KarpReport karp_check(const ReductionFn& f, const TotalDecider& a, const TotalDecider& b, std::size_t bound,
                      const Caps& caps = {});

/// Deterministic machine with a distinguished oracle state. Entering the
/// oracle state replaces the word under the head (up to the next blank) by
/// "1" or "0" according to the oracle; the step that enters it is the only
/// step charged for the query.
struct OracleMachine {
  MachineDesc machine;
  std::optional<State> oracle_state;
  Polynomial runtime;
};

struct CookResult {
  bool accepted = false;        // halted with output "1"
  Word output;
  std::uint64_t steps = 0;
  std::vector<Word> queries;
  std::uint64_t cost = 0;       // steps plus oracle classification cost
};

// Promise-respecting oracle semantics: a query outside the oracle's promise
// raises NonPromisedQuery; overrunning runtime(|x|) raises FuelExhausted.
// A runtime above caps.fuel is cut off there and raises FuelCap instead.
CookResult cook_run(const OracleMachine& o, const TotalDecider& oracle, const Word& x, const Caps& caps = {});

// Machine that computes f(x) then queries the oracle once and echoes the
// answer. Requires a machine-backed f.
OracleMachine karp_to_cook(const ReductionFn& f);

}  // namespace udt
