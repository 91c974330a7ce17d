#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udt/caps.hpp"
#include "udt/costed.hpp"
#include "udt/enumeration.hpp"
#include "udt/promise.hpp"
#include "udt/tm.hpp"

namespace udt {

// Step count of `tc` on 0^n, checked equal to the count on 1^n. Raises
// FuelCap when either run exceeds caps.fuel and NotTimeConstructible when
// the counts differ.
std::uint64_t eval_counted(const MachineDesc& tc, std::uint64_t n, const Caps& caps = {});
// eval_counted as a costed function with cost = value.
CostedFunction time_constructed(const MachineDesc& tc, const Caps& caps = {});

// r'(n) = f(n).value + f(n).cost + n + 1, with cost(r'(n)) = r'(n).
CostedFunction time_construct_wrap(const CostedFunction& f);

// Built-in gap functions, each with cost equal to value:
//   succ (n + 1), double2 (2n + 2), affine:<a>:<b> (a n + b, a >= 1, b >= 1),
//   tc:<goedel word> (time_constructed of the decoded machine).
// Unknown specs raise InvalidArgument; non-admissible affine parameters
// raise NotGapAdmissible.
CostedFunction gap_function(std::string_view spec, const Caps& caps = {});

// Index k of the interval [r^k(0), r^(k+1)(0)) containing `length`. Each
// iterate is computed with a budget of length + 1 units; an aborted iterate
// is taken to exceed `length`. Raises NotGapAdmissible if r(m) <= m.
std::uint64_t gap_interval_index(const CostedFunction& r, std::uint64_t length);
bool gap_member(const CostedFunction& r, const Word& x);

// Interval limits r^0(0), r^1(0), ... up to and including the first one
// above max_len, computed without budgets.
std::vector<std::uint64_t> gap_limits(const CostedFunction& r, std::uint64_t max_len);

enum class DiagMode { Representable, Presentable };

std::string_view mode_name(DiagMode m) noexcept;
std::optional<DiagMode> parse_mode(std::string_view s);

// Representable: the word lies in A \ P(M) (A committed, M not committed the
// same way). Presentable: the verdicts differ.
bool contradicts(Verdict a, Verdict m, DiagMode mode) noexcept;

struct Contradiction {
  Word z;
  std::uint64_t cost = 0;
};

// Smallest word z (shortlex) with |z| > n contradicting M against A, among
// the first `cap` candidates. Raises NoContradictionFound.
Contradiction find_contradiction(const TotalDecider& a, const TotalDecider& m, std::uint64_t n, DiagMode mode,
                                 std::uint64_t cap);

struct DiagInstance {
  TotalDecider a;
  TotalDecider a_prime;
  Enumeration pres;
  Enumeration pres_prime;
  DiagMode mode = DiagMode::Presentable;
  DiagMode mode_prime = DiagMode::Presentable;
  std::uint64_t search_cap = 1u << 16;
  std::uint64_t verify_machines = 3;
};

// q(n) = max over i <= n of |z_{i,n}| + 1, cost = the sum of all scan costs.
CostedFunction build_q(const TotalDecider& a, const Enumeration& pres, DiagMode mode, std::uint64_t search_cap,
                       std::string name);

struct RParts {
  CostedFunction q;
  CostedFunction q_prime;
  CostedFunction r;  // time_construct_wrap(max(q, q'))
};

RParts build_r_parts(const DiagInstance& inst);
CostedFunction build_r(const DiagInstance& inst);

// One contradiction witness for machine `machine` of pres (prime = false)
// or pres' (prime = true), placed in interval `iterate`, which is even for
// pres and odd for pres'.
struct DiagWitness {
  bool prime = false;
  std::uint64_t machine = 0;
  std::uint64_t iterate = 0;
  std::uint64_t start = 0;   // r^iterate(0)
  std::uint64_t end = 0;     // r(start)
  Word z;
  Verdict problem = Verdict::No;   // A(z) or A'(z)
  Verdict presented = Verdict::No; // M_i(z)
  Verdict b = Verdict::No;         // B(z)
  bool verified = false;           // all placement and verdict checks hold
};

struct DiagResult {
  TotalDecider b;
  CostedFunction r;
  CostedFunction q;
  CostedFunction q_prime;
  ReductionFn reduction;
  std::vector<DiagWitness> witnesses;
  std::optional<Word> no_instance;  // Ladner only: image of every "1"-marked word
};

// B(x) = A(x) on even intervals and A'(x) on odd ones; the reduction maps x
// to "0"x or "1"x accordingly. Witnesses are logged for the first
// inst.verify_machines machines of each presentation.
DiagResult diagonalize(const DiagInstance& inst);

// diagonalize with A' = const-no and C' = pres_harder, with the reduction
// post-composed into a reduction to A: "0"x -> x, "1"w -> the first
// no-instance of A in shortlex order up to caps.word_length.
DiagResult ladner(const TotalDecider& a, const Enumeration& pres, DiagMode mode, const Enumeration& pres_harder,
                  std::uint64_t search_cap = 1u << 16, std::uint64_t verify_machines = 3, const Caps& caps = {});

}  // namespace udt
