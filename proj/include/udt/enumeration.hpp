#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "udt/caps.hpp"
#include "udt/costed.hpp"
#include "udt/polynomial.hpp"
#include "udt/promise.hpp"
#include "udt/ptm.hpp"
#include "udt/verdict.hpp"

namespace udt {

// Cantor pairing N0 x N0 <-> N0; triple(j, k, l) = pair(j, pair(k, l)).
// pair throws CapExceeded on 64-bit overflow.
std::uint64_t pair(std::uint64_t j, std::uint64_t k);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t i);
std::uint64_t triple(std::uint64_t j, std::uint64_t k, std::uint64_t l);
std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> untriple(std::uint64_t i);

// Polynomials ordered by weight = coefficient sum + degree (weight w >= 1
// has 2^(w-1) members), then degree, then lexicographically on the
// coefficients below the leading one. Index 0 is the zero polynomial.
Polynomial poly_series(std::uint64_t i);
std::uint64_t poly_index(const Polynomial& p);

/// Index -> total decider. `count` is set for finite lists; indices are then
/// taken modulo the count.
struct Enumeration {
  std::string name;
  std::function<TotalDecider(std::uint64_t)> at;
  std::optional<std::uint64_t> count;

  TotalDecider operator()(std::uint64_t i) const;
};

// Cyclic presentation over a fixed list of deciders.
Enumeration list_enumeration(std::string name, std::vector<TotalDecider> items);

// Machine with Goedel word index_to_word(j).
MachineDesc series_machine(std::uint64_t j);

// Members of the series below, built from explicit machines. The index-based
// functions decode their index and delegate here.
TotalDecider clocked_decider(std::string name, const MachineDesc& m, const Polynomial& clock, const Caps& caps = {});
ReductionFn clocked_function(std::string name, const MachineDesc& m, const Polynomial& clock, const Caps& caps = {});
CostedFunction clocked_length(std::string name, const MachineDesc& m, const Polynomial& clock, const Polynomial& clamp,
                              const Caps& caps = {});
TotalDecider np_decider(std::string name, const MachineDesc& m, const Polynomial& clock, const CostedFunction& wit_len,
                        const Caps& caps = {});
TotalDecider bpp_decider(std::string name, const PTMDesc& m, const Polynomial& clock, const Thresholds& t = {},
                         const Caps& caps = {});
TotalDecider ma_decider(std::string name, const PTMDesc& m, const Polynomial& clock, const CostedFunction& wit_len,
                        const Thresholds& t = {}, const Caps& caps = {});

// (j, k) = unpair(i): machine j clocked by p_k; output "1" is Yes, anything
// else including a clock overrun is No.
TotalDecider p_machine(std::uint64_t i, const Caps& caps = {});
// (j, k) = unpair(i): machine j clocked by p_k as a string function; an
// overrun yields the empty word.
ReductionFn polyfunc_series(std::uint64_t i, const Caps& caps = {});
// (j, k, l) = untriple(i): machine j on 1^n with fuel p_k(n), output read as
// a binary number (empty or overrun reads as 0), clamped to p_l(n).
CostedFunction polyset_series(std::uint64_t i, const Caps& caps = {});
// (j, k, l) = untriple(i): Yes iff some witness y of length
// polyset_series(l)(|x|) makes machine j, clocked by p_k(|x|), output "1"
// on (x, y).
TotalDecider np_machine(std::uint64_t i, const Caps& caps = {});

enum class Family { P, NP, PromiseBPP, PromiseMA, BQP, QCMA, QMA };

// Generator-backed decider for BQP*, QCMA* or QMA*.
TotalDecider circuit_decider(std::string name, Family family, const MachineDesc& gen, const Polynomial& clock,
                             const Thresholds& t = {}, const Caps& caps = {});

std::string_view family_name(Family f) noexcept;  // "P", "NP", "PromiseBPP*", ...
std::optional<Family> parse_family(std::string_view name);

// Index layouts: P, NP as above; PromiseBPP*, BQP*, QCMA*, QMA* use
// (machine, clock) = unpair(i); PromiseMA* uses (machine, clock, witness
// length) = untriple(i) with the witness length from polyset_series. All
// machines are clocked: overruns reject (PTMs) or give the trivial circuit
// (generators).
TotalDecider class_presentation(Family family, std::uint64_t i, const Thresholds& t = {}, const Caps& caps = {});
Enumeration family_enumeration(Family family, const Thresholds& t = {}, const Caps& caps = {});

// classify(A, polyfunc_series(i)(x)).
TotalDecider reduction_closure(const TotalDecider& a, std::uint64_t i, const Caps& caps = {});
Enumeration reduction_closure_enumeration(const TotalDecider& a, const Caps& caps = {});

// (a, b) = unpair(j): machine a with its highest-numbered state as oracle
// state (none for the trivial machine) and runtime p_b.
OracleMachine oracle_series(std::uint64_t j, const Caps& caps = {});

enum class HarderMode { Karp, Cook };

// Reduction / oracle-machine series used by harder_set; defaults are
// polyfunc_series and oracle_series.
struct HarderSources {
  std::function<ReductionFn(std::uint64_t)> reductions;
  std::function<OracleMachine(std::uint64_t)> oracles;
};

// (j, k) = unpair(i). N_i(x) checks every y with |y| <= min(|x|,
// caps.check_word_length): in Karp mode that reduction j maps A's promised
// words correctly into P(M_k); in Cook mode that oracle machine j with
// oracle M_k stays promise-respecting, halts in time and accepts exactly
// A's yes-words among promised y. If every check passes N_i(x) = M_k(x),
// otherwise A(x).
TotalDecider harder_set(const TotalDecider& a, const Enumeration& c, HarderMode mode, std::uint64_t i,
                        const HarderSources& sources = {}, const Caps& caps = {});
Enumeration harder_enumeration(const TotalDecider& a, const Enumeration& c, HarderMode mode,
                               const HarderSources& sources = {}, const Caps& caps = {});

}  // namespace udt
