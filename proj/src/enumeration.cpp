#include "udt/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "udt/circuit.hpp"
#include "udt/errors.hpp"
#include "udt/ptm.hpp"

namespace udt {

namespace {

__extension__ using u128 = unsigned __int128;

void check_index(std::uint64_t i, const Caps& caps) {
  if (i > caps.enumeration_index)
    throw Error(ErrorKind::CapExceeded,
                "index " + std::to_string(i) + " exceeds " + std::to_string(caps.enumeration_index));
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::uint64_t t = 1; t <= k; ++t) {
    r = r * (n - k + t) / t;
    if (r > UINT64_MAX) throw Error(ErrorKind::CapExceeded, "binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

// Number of length-s vectors over N0 with sum <= budget.
std::uint64_t bounded_vectors(std::uint64_t s, std::uint64_t budget) { return binom(budget + s, s); }

std::uint64_t read_binary(const Word& w) {
  std::uint64_t v = 0;
  for (char ch : w) {
    if (v > (UINT64_MAX >> 1)) return UINT64_MAX;
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return v;
}

std::string indexed(std::string_view family, std::uint64_t i) { return std::string(family) + "#" + std::to_string(i); }

}  // namespace

std::uint64_t pair(std::uint64_t j, std::uint64_t k) {
  const u128 s = static_cast<u128>(j) + k;
  const u128 v = s * (s + 1) / 2 + k;
  if (v > UINT64_MAX) throw Error(ErrorKind::CapExceeded, "pair overflow");
  return static_cast<std::uint64_t>(v);
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t i) {
  // Largest w with w(w+1)/2 <= i.
  auto tri = [](u128 w) { return w * (w + 1) / 2; };
  u128 w = static_cast<u128>(std::sqrt(2.0L * static_cast<long double>(i)));
  while (tri(w) > i) --w;
  while (tri(w + 1) <= i) ++w;
  const std::uint64_t k = static_cast<std::uint64_t>(i - tri(w));
  return {static_cast<std::uint64_t>(w) - k, k};
}

std::uint64_t triple(std::uint64_t j, std::uint64_t k, std::uint64_t l) { return pair(j, pair(k, l)); }

std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> untriple(std::uint64_t i) {
  auto [j, rest] = unpair(i);
  auto [k, l] = unpair(rest);
  return {j, k, l};
}

Polynomial poly_series(std::uint64_t i) {
  if (i == 0) return {};
  std::uint64_t idx = i - 1;
  std::uint64_t w = 1;
  while (idx >= (std::uint64_t{1} << (w - 1))) {
    idx -= std::uint64_t{1} << (w - 1);
    ++w;
  }
  std::uint64_t d = 0;
  for (;; ++d) {
    const std::uint64_t block = binom(w - 1, d);
    if (idx < block) break;
    idx -= block;
  }
  std::vector<std::uint64_t> coeffs;
  std::uint64_t budget = w - d - 1;
  for (std::uint64_t t = 0; t < d; ++t) {
    const std::uint64_t slots = d - t - 1;
    std::uint64_t c = 0;
    for (;; ++c) {
      const std::uint64_t block = bounded_vectors(slots, budget - c);
      if (idx < block) break;
      idx -= block;
    }
    coeffs.push_back(c);
    budget -= c;
  }
  coeffs.push_back(budget + 1);
  return Polynomial(std::move(coeffs));
}

std::uint64_t poly_index(const Polynomial& p) {
  if (p.is_zero()) return 0;
  const auto& cs = p.coefficients();
  const std::uint64_t d = p.degree();
  u128 weight = d;
  for (std::uint64_t c : cs) weight += c;
  if (weight > 64) throw Error(ErrorKind::CapExceeded, "polynomial weight above 64");
  const std::uint64_t w = static_cast<std::uint64_t>(weight);
  u128 idx = u128{1} << (w - 1);
  for (std::uint64_t e = 0; e < d; ++e) idx += binom(w - 1, e);
  std::uint64_t budget = w - d - 1;
  for (std::uint64_t t = 0; t < d; ++t) {
    const std::uint64_t slots = d - t - 1;
    for (std::uint64_t c = 0; c < cs[t]; ++c) idx += bounded_vectors(slots, budget - c);
    budget -= cs[t];
  }
  if (idx > UINT64_MAX) throw Error(ErrorKind::CapExceeded, "polynomial index overflow");
  return static_cast<std::uint64_t>(idx);
}

TotalDecider Enumeration::operator()(std::uint64_t i) const {
  if (count) {
    if (*count == 0) throw Error(ErrorKind::InvalidArgument, name + " is empty");
    i %= *count;
  }
  return at(i);
}

Enumeration list_enumeration(std::string name, std::vector<TotalDecider> items) {
  const std::uint64_t n = items.size();
  auto shared = std::make_shared<const std::vector<TotalDecider>>(std::move(items));
  return Enumeration{std::move(name), [shared](std::uint64_t i) { return (*shared)[i % shared->size()]; }, n};
}

MachineDesc series_machine(std::uint64_t j) { return decode_godel(index_to_word(j)); }

TotalDecider clocked_decider(std::string name, const MachineDesc& m, const Polynomial& clock, const Caps& caps) {
  return TotalDecider(std::move(name), [m, clock, caps](const Word& x) {
    RunResult res = clocked_run(m, std::span<const Word>(&x, 1), clock(x.size()), caps);
    const bool yes = res.halted() && res.output == "1";
    return Classified{yes ? Verdict::Yes : Verdict::No, res.steps + 1};
  });
}

ReductionFn clocked_function(std::string name, const MachineDesc& m, const Polynomial& clock, const Caps& caps) {
  return ReductionFn::machine_backed(std::move(name), m, clock, true, caps);
}

CostedFunction clocked_length(std::string name, const MachineDesc& m, const Polynomial& clock, const Polynomial& clamp,
                              const Caps& caps) {
  return CostedFunction::exact(std::move(name), [m, clock, clamp, caps](std::uint64_t n) {
    const Word ones(n, '1');
    RunResult res = clocked_run(m, std::span<const Word>(&ones, 1), clock(n), caps);
    const std::uint64_t raw = res.halted() ? read_binary(res.output) : 0;
    return Costed{std::min(raw, clamp(n)), res.steps + 1};
  });
}

namespace {

// Calls visit(y) for every witness of length len in binary order until it
// returns true.
template <typename Visit>
bool for_each_witness(std::uint64_t len, std::vector<Word>& inputs, Visit visit) {
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << len); ++y) {
    for (std::uint64_t b = 0; b < len; ++b) inputs[1][b] = (y >> (len - 1 - b) & 1u) ? '1' : '0';
    if (visit()) return true;
  }
  return false;
}

std::uint64_t witness_length(const CostedFunction& wit_len, std::uint64_t n, const Caps& caps, std::uint64_t& cost) {
  const Costed len = wit_len(n);
  if (len.value > caps.witness_bits)
    throw Error(ErrorKind::WitnessSpaceTooLarge, "2^" + std::to_string(len.value) + " witnesses");
  cost += len.cost;
  return len.value;
}

// Exhaustive branch statistics under a clock, raising FuelCap when the cap
// rather than the clock stopped a branch.
BranchStats clocked_branches(const PTMDesc& m, std::span<const Word> inputs, std::uint64_t clock, const Caps& caps) {
  const std::uint64_t fuel = std::min(clock, caps.fuel);
  BranchStats stats = enumerate_branches(m, inputs, fuel, FuelPolicy::Clocked, caps);
  if (stats.exhausted > 0 && fuel < clock)
    throw Error(ErrorKind::FuelCap, "branch still running after " + std::to_string(caps.fuel) + " steps");
  return stats;
}

}  // namespace

TotalDecider np_decider(std::string name, const MachineDesc& m, const Polynomial& clock, const CostedFunction& wit_len,
                        const Caps& caps) {
  return TotalDecider(std::move(name), [m, clock, wit_len, caps](const Word& x) {
    std::uint64_t cost = 1;
    const std::uint64_t len = witness_length(wit_len, x.size(), caps, cost);
    std::vector<Word> inputs{x, Word(len, '0')};
    const std::uint64_t fuel = clock(x.size());
    const bool yes = for_each_witness(len, inputs, [&] {
      RunResult res = clocked_run(m, inputs, fuel, caps);
      cost += res.steps + 1;
      return res.halted() && res.output == "1";
    });
    return Classified{yes ? Verdict::Yes : Verdict::No, cost};
  });
}

TotalDecider bpp_decider(std::string name, const PTMDesc& m, const Polynomial& clock, const Thresholds& t,
                         const Caps& caps) {
  t.validate();
  return TotalDecider(std::move(name), [m, clock, t, caps](const Word& x) {
    BranchStats stats = clocked_branches(m, std::span<const Word>(&x, 1), clock(x.size()), caps);
    return Classified{classify_acceptance(stats.p_acc, t), stats.total + 1};
  });
}

TotalDecider ma_decider(std::string name, const PTMDesc& m, const Polynomial& clock, const CostedFunction& wit_len,
                        const Thresholds& t, const Caps& caps) {
  t.validate();
  return TotalDecider(std::move(name), [m, clock, wit_len, t, caps](const Word& x) {
    std::uint64_t cost = 1;
    const std::uint64_t len = witness_length(wit_len, x.size(), caps, cost);
    std::vector<Word> inputs{x, Word(len, '0')};
    const std::uint64_t fuel = clock(x.size());
    bool all_low = true;
    const bool yes = for_each_witness(len, inputs, [&] {
      BranchStats stats = clocked_branches(m, inputs, fuel, caps);
      cost += stats.total;
      if (stats.p_acc > t.s && stats.p_acc < t.c) all_low = false;
      return stats.p_acc >= t.c;
    });
    return Classified{yes ? Verdict::Yes : (all_low ? Verdict::No : Verdict::OutsidePromise), cost};
  });
}

TotalDecider circuit_decider(std::string name, Family family, const MachineDesc& gen, const Polynomial& clock,
                             const Thresholds& t, const Caps& caps) {
  if (family != Family::BQP && family != Family::QCMA && family != Family::QMA)
    throw Error(ErrorKind::InvalidArgument, "not a circuit family");
  t.validate();
  return TotalDecider(std::move(name), [family, gen, clock, t, caps](const Word& x) {
    const bool header = family != Family::BQP;
    RunResult res = clocked_run(gen, std::span<const Word>(&x, 1), clock(x.size()), caps);
    Circuit c = res.halted() ? parse_circuit(res.output, header) : Circuit::trivial();
    Verdict v = family == Family::BQP    ? classify_bqp_circuit(c, t, caps)
                : family == Family::QCMA ? classify_qcma_circuit(c, t, caps)
                                         : classify_qma_circuit(c, t, caps);
    return Classified{v, res.steps + 1};
  });
}

TotalDecider p_machine(std::uint64_t i, const Caps& caps) {
  check_index(i, caps);
  auto [j, k] = unpair(i);
  return clocked_decider(indexed("P", i), series_machine(j), poly_series(k), caps);
}

ReductionFn polyfunc_series(std::uint64_t i, const Caps& caps) {
  check_index(i, caps);
  auto [j, k] = unpair(i);
  return clocked_function(indexed("PolyFunc", i), series_machine(j), poly_series(k), caps);
}

CostedFunction polyset_series(std::uint64_t i, const Caps& caps) {
  check_index(i, caps);
  auto [j, k, l] = untriple(i);
  return clocked_length(indexed("PolySet", i), series_machine(j), poly_series(k), poly_series(l), caps);
}

TotalDecider np_machine(std::uint64_t i, const Caps& caps) {
  check_index(i, caps);
  auto [j, k, l] = untriple(i);
  return np_decider(indexed("NP", i), series_machine(j), poly_series(k), polyset_series(l, caps), caps);
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::P: return "P";
    case Family::NP: return "NP";
    case Family::PromiseBPP: return "PromiseBPP*";
    case Family::PromiseMA: return "PromiseMA*";
    case Family::BQP: return "BQP*";
    case Family::QCMA: return "QCMA*";
    case Family::QMA: return "QMA*";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::P, Family::NP, Family::PromiseBPP, Family::PromiseMA, Family::BQP, Family::QCMA,
                   Family::QMA}) {
    std::string_view full = family_name(f);
    if (name == full || (full.back() == '*' && name == full.substr(0, full.size() - 1))) return f;
  }
  return std::nullopt;
}

TotalDecider class_presentation(Family family, std::uint64_t i, const Thresholds& t, const Caps& caps) {
  check_index(i, caps);
  const std::string name = indexed(family_name(family), i);
  switch (family) {
    case Family::P: return p_machine(i, caps);
    case Family::NP: return np_machine(i, caps);
    case Family::PromiseBPP: {
      auto [j, k] = unpair(i);
      return bpp_decider(name, decode_ptm(index_to_word(j)), poly_series(k), t, caps);
    }
    case Family::PromiseMA: {
      auto [j, k, l] = untriple(i);
      return ma_decider(name, decode_ptm(index_to_word(j)), poly_series(k), polyset_series(l, caps), t, caps);
    }
    case Family::BQP:
    case Family::QCMA:
    case Family::QMA: {
      auto [j, k] = unpair(i);
      return circuit_decider(name, family, series_machine(j), poly_series(k), t, caps);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

Enumeration family_enumeration(Family family, const Thresholds& t, const Caps& caps) {
  return Enumeration{std::string(family_name(family)),
                     [family, t, caps](std::uint64_t i) { return class_presentation(family, i, t, caps); },
                     std::nullopt};
}

TotalDecider reduction_closure(const TotalDecider& a, std::uint64_t i, const Caps& caps) {
  ReductionFn f = polyfunc_series(i, caps);
  return TotalDecider(a.name() + "∘" + f.name(), [a, f](const Word& x) {
    Mapped m = f.apply_costed(x);
    Classified c = a.classify_costed(m.value);
    return Classified{c.verdict, m.cost + c.cost};
  });
}

Enumeration reduction_closure_enumeration(const TotalDecider& a, const Caps& caps) {
  return Enumeration{"closure(" + a.name() + ")",
                     [a, caps](std::uint64_t i) { return reduction_closure(a, i, caps); }, std::nullopt};
}

OracleMachine oracle_series(std::uint64_t j, const Caps& caps) {
  check_index(j, caps);
  auto [a, b] = unpair(j);
  MachineDesc m = series_machine(a);
  std::optional<State> oracle;
  if (!m.is_trivial()) oracle = m.states() - 1;
  return OracleMachine{std::move(m), oracle, poly_series(b)};
}

namespace {

// Memo of the length-by-length checks behind one harder_set decider.
struct CheckLog {
  std::mutex mutex;
  std::vector<std::uint64_t> cumulative;  // cumulative[L]: cost of all checks on |y| <= L
  std::optional<std::size_t> fail_length;
  std::uint64_t fail_cost = 0;            // cost up to and including the failing check
};

}  // namespace

TotalDecider harder_set(const TotalDecider& a, const Enumeration& c, HarderMode mode, std::uint64_t i,
                        const HarderSources& sources, const Caps& caps) {
  check_index(i, caps);
  auto [j, k] = unpair(i);
  const TotalDecider mk = c(k);
  std::function<bool(const Word&, std::uint64_t&)> check;
  if (mode == HarderMode::Karp) {
    ReductionFn f = sources.reductions ? sources.reductions(j) : polyfunc_series(j, caps);
    check = [a, mk, f](const Word& y, std::uint64_t& cost) {
      Classified ay = a.classify_costed(y);
      cost += ay.cost;
      if (ay.verdict == Verdict::OutsidePromise) return true;
      Mapped img = f.apply_costed(y);
      Classified target = mk.classify_costed(img.value);
      cost += img.cost + target.cost;
      return target.verdict == ay.verdict;
    };
  } else {
    OracleMachine o = sources.oracles ? sources.oracles(j) : oracle_series(j, caps);
    check = [a, mk, o, caps](const Word& y, std::uint64_t& cost) {
      Classified ay = a.classify_costed(y);
      cost += ay.cost;
      if (ay.verdict == Verdict::OutsidePromise) return true;
      try {
        CookResult r = cook_run(o, mk, y, caps);
        cost += r.cost;
        return r.accepted == (ay.verdict == Verdict::Yes);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonPromisedQuery && e.kind() != ErrorKind::FuelExhausted) throw;
        cost += 1;
        return false;
      }
    };
  }
  auto log = std::make_shared<CheckLog>();
  const std::string name = std::string(mode == HarderMode::Karp ? "HarderM" : "HarderT") + "#" + std::to_string(i);
  return TotalDecider(name, [a, mk, check, log, caps](const Word& x) {
    const std::size_t bound = std::min<std::size_t>(x.size(), caps.check_word_length);
    bool passed = true;
    std::uint64_t check_cost = 0;
    {
      std::lock_guard lock(log->mutex);
      while (!log->fail_length && log->cumulative.size() <= bound) {
        const std::size_t len = log->cumulative.size();
        std::uint64_t cost = len == 0 ? 0 : log->cumulative.back();
        Word y(len, '0');
        for (bool more = true; more;) {
          if (!check(y, cost)) {
            log->fail_length = len;
            log->fail_cost = cost;
            break;
          }
          auto pos = y.find_last_of('0');
          more = pos != Word::npos;
          if (more) {
            y[pos] = '1';
            std::fill(y.begin() + static_cast<std::ptrdiff_t>(pos) + 1, y.end(), '0');
          }
        }
        if (!log->fail_length) log->cumulative.push_back(cost);
      }
      if (log->fail_length && *log->fail_length <= bound) {
        passed = false;
        check_cost = log->fail_cost;
      } else {
        check_cost = log->cumulative[bound];
      }
    }
    Classified v = (passed ? mk : a).classify_costed(x);
    return Classified{v.verdict, check_cost + v.cost + 1};
  });
}

Enumeration harder_enumeration(const TotalDecider& a, const Enumeration& c, HarderMode mode,
                               const HarderSources& sources, const Caps& caps) {
  struct Memo {
    std::mutex mutex;
    std::map<std::uint64_t, TotalDecider> deciders;
  };
  auto memo = std::make_shared<Memo>();
  const std::string name =
      std::string(mode == HarderMode::Karp ? "HarderM(" : "HarderT(") + a.name() + ", " + c.name + ")";
  return Enumeration{name,
                     [a, c, mode, sources, caps, memo](std::uint64_t i) {
                       {
                         std::lock_guard lock(memo->mutex);
                         if (auto it = memo->deciders.find(i); it != memo->deciders.end()) return it->second;
                       }
                       TotalDecider d = harder_set(a, c, mode, i, sources, caps);
                       std::lock_guard lock(memo->mutex);
                       return memo->deciders.emplace(i, d).first->second;
                     },
                     std::nullopt};
}

}  // namespace udt
