#include "udt/tm.hpp"

#include <algorithm>
#include <string>

#include "udt/errors.hpp"

namespace udt {

char symbol_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    case Symbol::Blank: return '_';
  }
  return '?';
}

MachineDesc::MachineDesc(State states, State initial, std::vector<State> finals, std::vector<Transition> transitions)
    : states_(states), initial_(initial), finals_(std::move(finals)) {
  auto bad = [](const std::string& why) { return Error(ErrorKind::InvalidArgument, "machine: " + why); };
  if (states_ == 0) throw bad("needs at least one state");
  if (initial_ >= states_) throw bad("initial state out of range");
  std::sort(finals_.begin(), finals_.end());
  if (std::adjacent_find(finals_.begin(), finals_.end()) != finals_.end()) throw bad("duplicate final state");
  final_flags_.assign(states_, false);
  for (State f : finals_) {
    if (f >= states_) throw bad("final state out of range");
    final_flags_[f] = true;
  }
  table_.assign(std::size_t{states_} * 3, std::nullopt);
  for (const Transition& t : transitions) {
    if (t.from >= states_ || t.act.next >= states_) throw bad("transition state out of range");
    auto& slot = table_[t.from * 3 + static_cast<unsigned>(t.read)];
    if (slot) throw bad("two transitions for state " + std::to_string(t.from));
    slot = t.act;
  }
  for (State s = 0; s < states_; ++s) {
    if (final_flags_[s]) continue;
    for (unsigned sym = 0; sym < 3; ++sym)
      if (!table_[s * 3 + sym]) throw bad("missing transition for state " + std::to_string(s));
  }
}

MachineDesc MachineDesc::trivial() {
  MachineDesc m;
  m.trivial_ = true;
  m.states_ = 1;
  m.final_flags_.assign(1, false);
  m.table_.assign(3, std::nullopt);
  return m;
}

std::vector<Transition> MachineDesc::transitions() const {
  std::vector<Transition> out;
  for (State s = 0; s < states_ && !trivial_; ++s)
    for (unsigned sym = 0; sym < 3; ++sym)
      if (const auto& act = table_[s * 3 + sym]) out.push_back({s, static_cast<Symbol>(sym), *act});
  return out;
}

Tape::Tape(std::span<const Word> inputs) {
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    require_bits(inputs[k], "input");
    if (k > 0) cells_.push_back(Symbol::Blank);
    for (char ch : inputs[k]) cells_.push_back(ch == '1' ? Symbol::One : Symbol::Zero);
  }
}

Symbol Tape::read(std::int64_t pos) const noexcept {
  std::int64_t idx = pos - origin_;
  if (idx < 0 || idx >= static_cast<std::int64_t>(cells_.size())) return Symbol::Blank;
  return cells_[static_cast<std::size_t>(idx)];
}

void Tape::write(std::int64_t pos, Symbol s) {
  std::int64_t idx = pos - origin_;
  if (idx < 0) {
    if (s == Symbol::Blank) return;
    auto grow = static_cast<std::size_t>(-idx);
    cells_.insert(cells_.begin(), grow, Symbol::Blank);
    origin_ = pos;
    idx = 0;
  } else if (idx >= static_cast<std::int64_t>(cells_.size())) {
    if (s == Symbol::Blank) return;
    cells_.resize(static_cast<std::size_t>(idx) + 1, Symbol::Blank);
  }
  cells_[static_cast<std::size_t>(idx)] = s;
}

Word Tape::word_at(std::int64_t pos) const {
  Word out;
  for (Symbol s = read(pos); s != Symbol::Blank; s = read(++pos)) out.push_back(symbol_char(s));
  return out;
}

std::uint64_t Tape::nonblank_count() const noexcept {
  return static_cast<std::uint64_t>(std::count_if(cells_.begin(), cells_.end(), [](Symbol s) { return s != Symbol::Blank; }));
}

void apply_action(Tape& tape, const Action& act) {
  tape.write(tape.head, act.write);
  if (act.move == Move::L) --tape.head;
  else if (act.move == Move::R) ++tape.head;
}

RunResult run(const MachineDesc& m, std::span<const Word> inputs, std::uint64_t fuel) {
  for (const Word& w : inputs) require_bits(w, "input");
  if (m.is_trivial()) {
    if (fuel == 0) return {RunResult::Outcome::FuelExhausted, {}, 0};
    return {RunResult::Outcome::Halted, "0", 1};
  }
  Tape tape(inputs);
  State state = m.initial();
  std::uint64_t steps = 0;
  while (!m.is_final(state)) {
    if (steps == fuel) return {RunResult::Outcome::FuelExhausted, {}, steps};
    const Action& act = *m.at(state, tape.read(tape.head));
    apply_action(tape, act);
    state = act.next;
    ++steps;
  }
  return {RunResult::Outcome::Halted, tape.word_at(tape.head), steps};
}

namespace detail {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view bits) : bits_(bits) {}

  bool done() const { return pos_ == bits_.size(); }
  bool peek(char ch, std::size_t ahead = 0) const {
    return pos_ + ahead < bits_.size() && bits_[pos_ + ahead] == ch;
  }
  bool take(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }
  // Run of ones terminated by a single "0"; returns the run length (>= 1).
  std::optional<std::uint64_t> unary() {
    std::uint64_t n = 0;
    while (take('1')) ++n;
    if (n == 0 || !take('0')) return std::nullopt;
    return n;
  }
  // Code "1" | "10" | "11" followed by `sep` zeros. The trailing separator is
  // what disambiguates "1"+"0..." from "10"+"0...".
  std::optional<unsigned> code(std::size_t sep) {
    if (!take('1')) return std::nullopt;
    unsigned value = 0;
    if (take('1')) {
      value = 2;
    } else {
      bool long_form = true;
      for (std::size_t k = 0; k <= sep; ++k) long_form = long_form && peek('0', k);
      if (long_form) {
        ++pos_;
        value = 1;
      }
    }
    for (std::size_t k = 0; k < sep; ++k)
      if (!take('0')) return std::nullopt;
    return value;
  }

 private:
  std::string_view bits_;
  std::size_t pos_ = 0;
};

constexpr std::uint64_t kMaxStates = 1u << 24;

void put_unary(Word& out, std::uint64_t n) {
  out.append(n, '1');
  out.push_back('0');
}

void put_code(Word& out, unsigned value, std::size_t sep) {
  static const char* const codes[] = {"1", "10", "11"};
  out += codes[value];
  out.append(sep, '0');
}

}  // namespace

std::optional<GodelImage> parse_godel(std::string_view bits) {
  if (!is_bits(bits)) return std::nullopt;
  Reader in(bits);
  GodelImage img;
  auto states = in.unary();
  if (!states || *states > kMaxStates) return std::nullopt;
  img.states = static_cast<State>(*states);
  while (in.peek('1')) {
    auto f = in.unary();
    if (!f || *f > img.states) return std::nullopt;
    img.finals.push_back(static_cast<State>(*f - 1));
  }
  if (!in.take('0') || !in.take('0')) return std::nullopt;
  while (!in.done()) {
    auto from = in.unary();
    if (!from || *from > img.states) return std::nullopt;
    auto read = in.code(1);
    if (!read) return std::nullopt;
    auto next = in.unary();
    if (!next || *next > img.states) return std::nullopt;
    auto write = in.code(1);
    auto move = write ? in.code(2) : std::nullopt;
    if (!move) return std::nullopt;
    img.transitions.push_back({static_cast<State>(*from - 1), static_cast<Symbol>(*read),
                               {static_cast<State>(*next - 1), static_cast<Symbol>(*write), static_cast<Move>(*move)}});
  }
  return img;
}

Word emit_godel(State states, const std::vector<State>& finals, const std::vector<Transition>& transitions) {
  Word out;
  put_unary(out, states);
  for (State f : finals) put_unary(out, std::uint64_t{f} + 1);
  out += "00";
  for (const Transition& t : transitions) {
    put_unary(out, std::uint64_t{t.from} + 1);
    put_code(out, static_cast<unsigned>(t.read), 1);
    put_unary(out, std::uint64_t{t.act.next} + 1);
    put_code(out, static_cast<unsigned>(t.act.write), 1);
    put_code(out, static_cast<unsigned>(t.act.move), 2);
  }
  return out;
}

}  // namespace detail

MachineDesc decode_godel(std::string_view bits) {
  auto img = detail::parse_godel(bits);
  if (!img) return MachineDesc::trivial();
  try {
    return MachineDesc(img->states, 0, img->finals, img->transitions);
  } catch (const Error&) {
    return MachineDesc::trivial();
  }
}

Word encode_godel(const MachineDesc& m) {
  if (m.is_trivial()) return {};
  // The grammar fixes state 0 as initial; relabel by swapping 0 and initial.
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

}  // namespace udt
