#include "udt/gapdiag.hpp"

#include <algorithm>
#include <charconv>

#include "udt/errors.hpp"

namespace udt {

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// Binary successor within a length, moving to 0^(len+1) after 1^len.
void next_word(Word& w) {
  auto pos = w.find_last_of('0');
  if (pos == Word::npos) {
    w.assign(w.size() + 1, '0');
    return;
  }
  w[pos] = '1';
  std::fill(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end(), '0');
}

enum class ScanStatus { Found, OverBudget, CapReached };

struct Scan {
  ScanStatus status;
  Contradiction result;
};

Scan scan(const TotalDecider& a, const TotalDecider& m, std::uint64_t n, DiagMode mode, std::uint64_t cap,
          std::uint64_t budget) {
  Word z(n + 1, '0');
  std::uint64_t cost = 0;
  for (std::uint64_t k = 0; k < cap; ++k, next_word(z)) {
    Classified va = a.classify_costed(z);
    Classified vm = m.classify_costed(z);
    cost = sat_add(cost, sat_add(1, sat_add(va.cost, vm.cost)));
    if (cost > budget) return {ScanStatus::OverBudget, {{}, cost}};
    if (contradicts(va.verdict, vm.verdict, mode)) return {ScanStatus::Found, {z, cost}};
  }
  return {ScanStatus::CapReached, {{}, cost}};
}

[[noreturn]] void no_contradiction(const TotalDecider& m, std::uint64_t n, std::uint64_t cap, std::string_view who) {
  throw Error(ErrorKind::NoContradictionFound, std::string(who) + " n=" + std::to_string(n) + " " + m.name() +
                                                   ": none among " + std::to_string(cap) + " words");
}

}  // namespace

std::uint64_t eval_counted(const MachineDesc& tc, std::uint64_t n, const Caps& caps) {
  const Word zeros(n, '0'), ones(n, '1');
  RunResult r0 = run(tc, zeros, caps.fuel);
  RunResult r1 = run(tc, ones, caps.fuel);
  if (!r0.halted() || !r1.halted())
    throw Error(ErrorKind::FuelCap, "no halt within " + std::to_string(caps.fuel) + " steps at n=" + std::to_string(n));
  if (r0.steps != r1.steps)
    throw Error(ErrorKind::NotTimeConstructible, "n=" + std::to_string(n) + ": " + std::to_string(r0.steps) +
                                                     " steps on 0^n, " + std::to_string(r1.steps) + " on 1^n");
  return r0.steps;
}

CostedFunction time_constructed(const MachineDesc& tc, const Caps& caps) {
  return CostedFunction::exact("tc", [tc, caps](std::uint64_t n) {
    const std::uint64_t v = eval_counted(tc, n, caps);
    return Costed{v, v};
  });
}

CostedFunction time_construct_wrap(const CostedFunction& f) {
  return CostedFunction("wrap(" + f.name() + ")", [f](std::uint64_t n, std::uint64_t budget) -> std::optional<Costed> {
    const std::uint64_t floor = sat_add(n, 1);
    if (budget < floor) return std::nullopt;
    auto inner = f.eval(n, budget - floor);
    if (!inner) return std::nullopt;
    const std::uint64_t v = sat_add(sat_add(inner->value, inner->cost), floor);
    if (v > budget) return std::nullopt;
    return Costed{v, v};
  });
}

CostedFunction gap_function(std::string_view spec, const Caps& caps) {
  auto linear = [](std::string name, std::uint64_t a, std::uint64_t b) {
    return CostedFunction::exact(std::move(name), [a, b](std::uint64_t n) {
      const std::uint64_t v = sat_add(sat_mul(a, n), b);
      return Costed{v, v};
    });
  };
  if (spec == "succ") return linear("succ", 1, 1);
  if (spec == "double2") return linear("double2", 2, 2);
  if (spec.rfind("affine:", 0) == 0) {
    std::string_view rest = spec.substr(7);
    auto colon = rest.find(':');
    auto a = colon == std::string_view::npos ? std::nullopt : parse_u64(rest.substr(0, colon));
    auto b = colon == std::string_view::npos ? std::nullopt : parse_u64(rest.substr(colon + 1));
    if (!a || !b) throw Error(ErrorKind::InvalidArgument, "bad gap function '" + std::string(spec) + "'");
    if (*a < 1 || *b < 1)
      throw Error(ErrorKind::NotGapAdmissible, "affine:" + std::to_string(*a) + ":" + std::to_string(*b));
    return linear(std::string(spec), *a, *b);
  }
  if (spec.rfind("tc:", 0) == 0) {
    std::string_view bits = spec.substr(3);
    require_bits(bits, "machine");
    return time_constructed(decode_godel(bits), caps);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown gap function '" + std::string(spec) + "'");
}

std::uint64_t gap_interval_index(const CostedFunction& r, std::uint64_t length) {
  const std::uint64_t budget = sat_add(length, 1);
  std::uint64_t m = 0, k = 0;
  for (;;) {
    auto next = r.eval(m, budget);
    if (!next) return k;
    if (next->value <= m)
      throw Error(ErrorKind::NotGapAdmissible,
                  r.name() + "(" + std::to_string(m) + ") = " + std::to_string(next->value));
    if (next->value > length) return k;
    m = next->value;
    ++k;
  }
}

bool gap_member(const CostedFunction& r, const Word& x) {
  require_bits(x, "word");
  return gap_interval_index(r, x.size()) % 2 == 0;
}

std::vector<std::uint64_t> gap_limits(const CostedFunction& r, std::uint64_t max_len) {
  std::vector<std::uint64_t> out{0};
  while (out.back() <= max_len) {
    const std::uint64_t next = r(out.back()).value;
    if (next <= out.back())
      throw Error(ErrorKind::NotGapAdmissible,
                  r.name() + "(" + std::to_string(out.back()) + ") = " + std::to_string(next));
    out.push_back(next);
  }
  return out;
}

std::string_view mode_name(DiagMode m) noexcept {
  return m == DiagMode::Representable ? "representable" : "presentable";
}

std::optional<DiagMode> parse_mode(std::string_view s) {
  if (s == "representable") return DiagMode::Representable;
  if (s == "presentable") return DiagMode::Presentable;
  return std::nullopt;
}

bool contradicts(Verdict a, Verdict m, DiagMode mode) noexcept {
  return mode == DiagMode::Representable ? in_difference(a, m) : in_total_sym_diff(a, m);
}

Contradiction find_contradiction(const TotalDecider& a, const TotalDecider& m, std::uint64_t n, DiagMode mode,
                                 std::uint64_t cap) {
  Scan s = scan(a, m, n, mode, cap, kUnbounded);
  if (s.status != ScanStatus::Found) no_contradiction(m, n, cap, a.name());
  return s.result;
}

CostedFunction build_q(const TotalDecider& a, const Enumeration& pres, DiagMode mode, std::uint64_t search_cap,
                       std::string name) {
  return CostedFunction(std::move(name), [a, pres, mode, search_cap](std::uint64_t n,
                                                                     std::uint64_t budget) -> std::optional<Costed> {
    std::uint64_t longest = 0, cost = 0;
    for (std::uint64_t i = 0; i <= n; ++i) {
      const TotalDecider m = pres(i);
      Scan s = scan(a, m, n, mode, search_cap, budget - cost);
      if (s.status == ScanStatus::OverBudget) return std::nullopt;
      if (s.status == ScanStatus::CapReached) no_contradiction(m, n, search_cap, "i=" + std::to_string(i));
      cost += s.result.cost;
      longest = std::max<std::uint64_t>(longest, s.result.z.size());
    }
    return Costed{longest + 1, cost};
  });
}

RParts build_r_parts(const DiagInstance& inst) {
  if (inst.search_cap < 1) throw Error(ErrorKind::InvalidArgument, "search cap must be >= 1");
  CostedFunction q = build_q(inst.a, inst.pres, inst.mode, inst.search_cap, "q");
  CostedFunction qp = build_q(inst.a_prime, inst.pres_prime, inst.mode_prime, inst.search_cap, "q'");
  CostedFunction both("max(q,q')", [q, qp](std::uint64_t n, std::uint64_t budget) -> std::optional<Costed> {
    auto a = q.eval(n, budget);
    if (!a) return std::nullopt;
    auto b = qp.eval(n, budget - a->cost);
    if (!b) return std::nullopt;
    return Costed{std::max(a->value, b->value), a->cost + b->cost};
  });
  return {q, qp, time_construct_wrap(both)};
}

CostedFunction build_r(const DiagInstance& inst) { return build_r_parts(inst).r; }

DiagResult diagonalize(const DiagInstance& inst) {
  RParts parts = build_r_parts(inst);
  const CostedFunction r = parts.r;
  const TotalDecider a = inst.a, ap = inst.a_prime;
  TotalDecider b("B", [r, a, ap](const Word& x) {
    Classified c = (gap_member(r, x) ? a : ap).classify_costed(x);
    return Classified{c.verdict, c.cost + 1};
  });
  ReductionFn f = ReductionFn::from_function("mark", [r](const Word& x) { return (gap_member(r, x) ? "0" : "1") + x; });

  std::vector<DiagWitness> log;
  std::vector<std::uint64_t> starts{0};
  auto start_at = [&](std::uint64_t k) {
    while (starts.size() <= k) starts.push_back(r(starts.back()).value);
    return starts[k];
  };
  for (int side = 0; side < 2; ++side) {
    const bool prime = side == 1;
    const TotalDecider& problem = prime ? ap : a;
    const Enumeration& pres = prime ? inst.pres_prime : inst.pres;
    const DiagMode mode = prime ? inst.mode_prime : inst.mode;
    for (std::uint64_t i = 0; i < inst.verify_machines; ++i) {
      std::uint64_t k = prime ? 1 : 0;
      while (start_at(k) < i) k += 2;
      DiagWitness w;
      w.prime = prime;
      w.machine = i;
      w.iterate = k;
      w.start = start_at(k);
      w.end = start_at(k + 1);
      const TotalDecider m = pres(i);
      w.z = find_contradiction(problem, m, w.start, mode, inst.search_cap).z;
      w.problem = problem.classify(w.z);
      w.presented = m.classify(w.z);
      w.b = b.classify(w.z);
      w.verified = w.start <= w.z.size() && w.z.size() < w.end && gap_interval_index(r, w.z.size()) == k &&
                   w.b == w.problem && contradicts(w.b, w.presented, mode);
      log.push_back(std::move(w));
    }
  }
  return DiagResult{b, r, parts.q, parts.q_prime, f, std::move(log), std::nullopt};
}

DiagResult ladner(const TotalDecider& a, const Enumeration& pres, DiagMode mode, const Enumeration& pres_harder,
                  std::uint64_t search_cap, std::uint64_t verify_machines, const Caps& caps) {
  std::optional<Word> no;
  Word w;
  do {
    if (a.classify(w) == Verdict::No) {
      no = w;
      break;
    }
  } while (next_shortlex(w, caps.word_length));
  if (!no)
    throw Error(ErrorKind::NoInstanceOfA, a.name() + " has no no-instance up to length " +
                                              std::to_string(caps.word_length));
  DiagInstance inst{a, problems::const_no(), pres, pres_harder, mode, DiagMode::Presentable, search_cap,
                    verify_machines};
  DiagResult res = diagonalize(inst);
  const ReductionFn mark = res.reduction;
  res.reduction = ReductionFn::from_function("ladner", [mark, target = *no](const Word& x) {
    Word marked = mark(x);
    return marked[0] == '0' ? marked.substr(1) : target;
  });
  res.no_instance = no;
  return res;
}

}  // namespace udt
