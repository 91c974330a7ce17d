#include "udt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "udt/circuit.hpp"
#include "udt/enumeration.hpp"
#include "udt/errors.hpp"
#include "udt/gapdiag.hpp"
#include "udt/machines.hpp"
#include "udt/promise.hpp"
#include "udt/ptm.hpp"

namespace udt::cli {

namespace {

// Tab-separated table preceded by "#table <name>" and a column header line.
class Table {
 public:
  Table(std::string name, std::vector<std::string> columns) : name_(std::move(name)), columns_(std::move(columns)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    os << "#table " << name_ << '\n';
    line(os, columns_);
    for (const auto& r : rows_) line(os, r);
  }

 private:
  static void line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "\t" : "") << cells[k];
    os << '\n';
  }

  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(Verdict v) { return std::string(verdict_token(v)); }
std::string decimal(const Rational& q) { return to_decimal(FieldElem(q)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_space(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  return s;
}

// Bitstring given inline or as file:<path> / an existing path.
Word bits_ref(const std::string& ref) {
  if (is_bits(ref)) return ref;
  std::string path = ref.rfind("file:", 0) == 0 ? ref.substr(5) : ref;
  Word w = strip_space(read_file(path));
  require_bits(w, "file contents");
  return w;
}

MachineDesc stock_machine(const std::string& name) {
  if (name == "identity") return machines::identity();
  if (name == "parity") return machines::parity();
  if (name == "sweep") return machines::sweep();
  if (name == "diverge") return machines::diverge();
  if (name == "halt-at-first-one") return machines::halt_at_first_one();
  if (name.rfind("constant:", 0) == 0) {
    Word w = name.substr(9);
    require_bits(w, "constant output");
    return machines::constant(w);
  }
  if (name.rfind("prepend:", 0) == 0 && name.size() == 9 && (name[8] == '0' || name[8] == '1'))
    return machines::prepend(name[8]);
  if (name == "trivial") return MachineDesc::trivial();
  throw Error(ErrorKind::InvalidArgument, "unknown stock machine '" + name + "'");
}

MachineDesc machine_ref(const std::string& ref) {
  if (ref.rfind("stock:", 0) == 0) return stock_machine(ref.substr(6));
  return decode_godel(bits_ref(ref));
}

PTMDesc ptm_ref(const std::string& ref) {
  if (ref == "stock:coin") return machines::tree_ptm(machines::Tree::branch({machines::Tree::leaf("1"), machines::Tree::leaf("0")}));
  if (ref.rfind("stock:", 0) == 0) return PTMDesc::from_deterministic(stock_machine(ref.substr(6)));
  return decode_ptm(bits_ref(ref));
}

struct Context {
  Caps caps;
  Thresholds t;
};

// builtin:<name> | machine:<machine ref>@<poly> | family:<family>:<index>
TotalDecider problem_ref(const std::string& ref, const Context& ctx) {
  if (ref.rfind("builtin:", 0) == 0) {
    if (auto d = problems::builtin(ref.substr(8))) return *d;
    throw Error(ErrorKind::InvalidArgument, "unknown builtin problem '" + ref.substr(8) + "'");
  }
  if (ref.rfind("machine:", 0) == 0) {
    std::string rest = ref.substr(8);
    auto at = rest.rfind('@');
    if (at == std::string::npos) throw Error(ErrorKind::InvalidArgument, "machine problem needs @<fuel polynomial>");
    return TotalDecider::machine_backed(ref, machine_ref(rest.substr(0, at)), Polynomial::parse(rest.substr(at + 1)),
                                        ctx.caps);
  }
  if (ref.rfind("family:", 0) == 0) {
    std::string rest = ref.substr(7);
    auto colon = rest.rfind(':');
    auto fam = colon == std::string::npos ? std::nullopt : parse_family(rest.substr(0, colon));
    if (!fam) throw Error(ErrorKind::InvalidArgument, "bad family reference '" + ref + "'");
    return class_presentation(*fam, std::stoull(rest.substr(colon + 1)), ctx.t, ctx.caps);
  }
  throw Error(ErrorKind::InvalidArgument, "bad problem reference '" + ref + "'");
}

// list:<ref>;<ref>... | file:<path> (one problem reference per line) |
// <family>:<count> (the first count members, cycled)
Enumeration presentation_ref(const std::string& ref, const Context& ctx) {
  std::vector<TotalDecider> items;
  if (ref.rfind("list:", 0) == 0) {
    std::stringstream ss(ref.substr(5));
    for (std::string item; std::getline(ss, item, ';');)
      if (!item.empty()) items.push_back(problem_ref(item, ctx));
  } else if (ref.rfind("file:", 0) == 0) {
    std::stringstream ss(read_file(ref.substr(5)));
    for (std::string line; std::getline(ss, line);) {
      line = strip_space(line);
      if (!line.empty() && line[0] != '#') items.push_back(problem_ref(line, ctx));
    }
  } else {
    auto colon = ref.rfind(':');
    auto fam = colon == std::string::npos ? std::nullopt : parse_family(ref.substr(0, colon));
    if (!fam) throw Error(ErrorKind::InvalidArgument, "bad presentation '" + ref + "'");
    const std::uint64_t count = std::stoull(ref.substr(colon + 1));
    for (std::uint64_t i = 0; i < count; ++i) items.push_back(class_presentation(*fam, i, ctx.t, ctx.caps));
  }
  if (items.empty()) throw Error(ErrorKind::InvalidArgument, "empty presentation '" + ref + "'");
  return list_enumeration(ref, std::move(items));
}

DiagMode mode_ref(const std::string& s) {
  if (auto m = parse_mode(s)) return *m;
  throw Error(ErrorKind::InvalidArgument, "bad mode '" + s + "'");
}

const CLI::Validator kBits(
    [](std::string& s) { return is_bits(s) ? std::string() : "not a bitstring: '" + s + "'"; }, "BITS");

const CLI::Validator kRational(
    [](std::string& s) {
      try {
        parse_rational(s);
        return std::string();
      } catch (const std::exception&) {
        return "not a rational: '" + s + "'";
      }
    },
    "P/Q");

void print_kv(std::ostream& out, const std::string& name, const std::vector<std::pair<std::string, std::string>>& kv) {
  Table t(name, {"key", "value"});
  for (const auto& [k, v] : kv) t.add({k, v});
  t.print(out);
}

void print_diag(std::ostream& out, const DiagResult& res, std::uint64_t bound) {
  Table rt("r", {"n", "q", "q_prime", "r", "r_cost"});
  for (std::uint64_t n = 0; n <= bound; ++n) {
    Costed r = res.r(n);
    rt.add({str(n), str(res.q(n).value), str(res.q_prime(n).value), str(r.value), str(r.cost)});
  }
  rt.print(out);
  Table it("intervals", {"k", "start", "end", "parity", "b_follows"});
  std::vector<std::uint64_t> lim = gap_limits(res.r, bound);
  for (std::size_t k = 0; k + 1 < lim.size(); ++k)
    it.add({str(k), str(lim[k]), str(lim[k + 1]), k % 2 ? "odd" : "even", k % 2 ? "A'" : "A"});
  it.print(out);
  Table wt("witnesses", {"side", "machine", "k", "start", "end", "z_length", "z", "problem", "presented", "b", "verified"});
  for (const DiagWitness& w : res.witnesses)
    wt.add({w.prime ? "C'" : "C", str(w.machine), str(w.iterate), str(w.start), str(w.end), str(w.z.size()), w.z,
            str(w.problem), str(w.presented), str(w.b), str(w.verified)});
  wt.print(out);
}

void print_karp(std::ostream& out, const KarpReport& rep, std::uint64_t bound, const std::string& target) {
  Table kt("reduction", {"target", "bound", "checked", "violations"});
  kt.add({target, str(bound), str(rep.checked), str(rep.violations.size())});
  kt.print(out);
  if (!rep.ok()) {
    Table vt("violations", {"x", "image", "source", "target"});
    for (const auto& v : rep.violations) vt.add({v.x, v.image, str(v.source), str(v.target)});
    vt.print(out);
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact promise-problem and uniform-diagonalization toolkit", "udt"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; command-line flags override it");

  Context ctx;
  std::string c_text = "2/3", s_text = "1/3";
  app.add_option("--qubits", ctx.caps.qubits, "Qubit cap")->capture_default_str();
  app.add_option("--witness-qubits", ctx.caps.witness_qubits, "Witness qubit cap")->capture_default_str();
  app.add_option("--witness-bits", ctx.caps.witness_bits, "Classical witness length cap")->capture_default_str();
  app.add_option("--index-cap", ctx.caps.enumeration_index, "Enumeration index cap")->capture_default_str();
  app.add_option("--check-length", ctx.caps.check_word_length, "harder_set check length cap")->capture_default_str();
  app.add_option("--word-length", ctx.caps.word_length, "Word length cap")->capture_default_str();
  app.add_option("--psd-dim", ctx.caps.psd_dim, "PSD test dimension cap")->capture_default_str();
  app.add_option("--fuel-cap", ctx.caps.fuel, "Step cap for any single run")->capture_default_str();
  app.add_option("--branch-leaves", ctx.caps.branch_leaves, "Branch count cap")->capture_default_str();
  app.add_option("--c", c_text, "Completeness threshold")->check(kRational)->capture_default_str();
  app.add_option("--s", s_text, "Soundness threshold")->check(kRational)->capture_default_str();

  std::function<void()> action;

  // run
  auto* run_cmd = app.add_subcommand("run", "Run a deterministic machine");
  std::string machine;
  std::vector<std::string> inputs;
  std::uint64_t fuel = 0;
  run_cmd->add_option("--machine", machine, "Goedel bits, file:<path> or stock:<name>")->required();
  run_cmd->add_option("--input", inputs, "Input word (repeatable)")->check(kBits);
  run_cmd->add_option("--fuel", fuel, "Step budget (default: the fuel cap)");
  run_cmd->callback([&] {
    action = [&] {
      RunResult r = run(machine_ref(machine), inputs, fuel ? fuel : ctx.caps.fuel);
      Table t("run", {"outcome", "output", "steps"});
      t.add({r.halted() ? "halted" : "fuel-exhausted", r.output, str(r.steps)});
      t.print(out);
    };
  });

  // branches
  auto* br_cmd = app.add_subcommand("branches", "Enumerate all branches of a probabilistic machine");
  std::string ptm;
  bool clocked = false;
  br_cmd->add_option("--ptm", ptm, "Goedel bits, file:<path>, stock:coin or stock:<deterministic>")->required();
  br_cmd->add_option("--input", inputs, "Input word (repeatable)")->check(kBits);
  br_cmd->add_option("--fuel", fuel, "Steps per branch")->required();
  br_cmd->add_flag("--clocked", clocked, "Count overrunning branches instead of failing");
  br_cmd->callback([&] {
    action = [&] {
      BranchStats s = enumerate_branches(ptm_ref(ptm), inputs, fuel,
                                         clocked ? FuelPolicy::Clocked : FuelPolicy::Strict, ctx.caps);
      Table t("branches", {"accepting", "rejecting", "other", "exhausted", "total", "p_acc", "p_acc_decimal", "p_rej",
                           "verdict"});
      t.add({str(s.accepting), str(s.rejecting), str(s.other), str(s.exhausted), str(s.total), to_string(s.p_acc),
             decimal(s.p_acc), to_string(s.p_rej), str(classify_acceptance(s.p_acc, ctx.t))});
      t.print(out);
    };
  });

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Parse and simulate a circuit exactly");
  std::string circuit, basis;
  bool header = false;
  sim_cmd->add_option("--circuit", circuit, "Circuit bits, file:<path> or a path")->required();
  sim_cmd->add_flag("--header", header, "The encoding starts with a witness-size header");
  sim_cmd->add_option("--input", basis, "Basis input, one bit per qubit (default all zeros)")->check(kBits);
  sim_cmd->callback([&] {
    action = [&] {
      Circuit c = parse_circuit(bits_ref(circuit), header);
      std::string in = basis.empty() ? std::string(c.total_qubits(), '0') : basis;
      FieldElem p = p_acc(c, in, ctx.caps);
      print_kv(out, "circuit",
               {{"listing", gate_listing(c)},
                {"gates", str(static_cast<std::uint64_t>(c.gates().size()))},
                {"qubits", str(std::uint64_t{c.total_qubits()})},
                {"witness_qubits", str(std::uint64_t{c.witness_qubits()})},
                {"trivial", str(c.is_trivial())},
                {"input", in},
                {"p_acc", to_string(p)},
                {"p_acc_decimal", to_decimal(p)}});
    };
  });

  // decide
  auto* dec_cmd = app.add_subcommand("decide", "Decide a BQP / QCMA / QMA instance");
  std::string kind, gen, runtime, input;
  dec_cmd->add_option("kind", kind, "bqp | qcma | qma")->required()->check(CLI::IsMember({"bqp", "qcma", "qma"}));
  auto* gen_opt = dec_cmd->add_option("--gen", gen, "Generator machine reference");
  auto* circ_opt = dec_cmd->add_option("--circuit", circuit, "Circuit bits or file instead of a generator");
  gen_opt->excludes(circ_opt);
  dec_cmd->add_option("--runtime", runtime, "Generator runtime polynomial, e.g. 3,0,1 (default: the fuel cap)")->needs(gen_opt);
  dec_cmd->add_option("--input", input, "Instance word")->check(kBits)->needs(gen_opt);
  dec_cmd->add_flag("--clocked", clocked, "Treat a generator overrun as the trivial circuit");
  dec_cmd->callback([&] {
    if (gen.empty() && circuit.empty()) throw CLI::RequiredError("--gen or --circuit");
    action = [&] {
      const bool hdr = kind != "bqp";
      Circuit c = circuit.empty()
                      ? generate_circuit(machine_ref(gen), runtime.empty() ? Polynomial::constant(ctx.caps.fuel) : Polynomial::parse(runtime), input,
                                         hdr, clocked ? FuelPolicy::Clocked : FuelPolicy::Strict)
                      : parse_circuit(bits_ref(circuit), hdr);
      Verdict v = kind == "bqp"    ? classify_bqp_circuit(c, ctx.t, ctx.caps)
                  : kind == "qcma" ? classify_qcma_circuit(c, ctx.t, ctx.caps)
                                   : classify_qma_circuit(c, ctx.t, ctx.caps);
      out << verdict_token(v) << '\n';
    };
  });

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "Classify words with a total decider");
  std::string problem;
  std::uint64_t cls_bound = 0;
  cls_cmd->add_option("--problem", problem, "builtin:<name> | machine:<ref>@<poly> | family:<F>:<i>")->required();
  auto* in_opt = cls_cmd->add_option("--input", inputs, "Word (repeatable)")->check(kBits);
  cls_cmd->add_option("--bound", cls_bound, "All words up to this length")->excludes(in_opt);
  cls_cmd->callback([&] {
    action = [&] {
      TotalDecider d = problem_ref(problem, ctx);
      std::vector<Word> words = inputs.empty() ? words_up_to(cls_bound) : inputs;
      Table t("classify", {"word", "verdict", "cost"});
      for (const Word& w : words) {
        Classified c = d.classify_costed(w);
        t.add({w, str(c.verdict), str(c.cost)});
      }
      t.print(out);
    };
  });

  // enumerate
  auto* en_cmd = app.add_subcommand("enumerate", "Browse an enumeration member");
  std::string family;
  std::uint64_t index = 0, en_bound = 4;
  en_cmd->add_option("family", family, "P NP PromiseBPP* PromiseMA* BQP* QCMA* QMA* Poly PolyFunc PolySet")->required();
  en_cmd->add_option("index", index, "Index")->required();
  en_cmd->add_option("--bound", en_bound, "Word length or argument bound")->capture_default_str();
  en_cmd->callback([&] {
    action = [&] {
      if (index > ctx.caps.enumeration_index)
        throw Error(ErrorKind::CapExceeded, "index " + str(index) + " exceeds " + str(ctx.caps.enumeration_index));
      if (family == "Poly") {
        Table t("poly", {"index", "coefficients"});
        t.add({str(index), poly_series(index).to_string()});
        t.print(out);
      } else if (family == "PolyFunc") {
        ReductionFn f = polyfunc_series(index, ctx.caps);
        Table t("polyfunc", {"word", "image"});
        for (const Word& w : words_up_to(en_bound)) t.add({w, f(w)});
        t.print(out);
      } else if (family == "PolySet") {
        CostedFunction f = polyset_series(index, ctx.caps);
        Table t("polyset", {"n", "value", "cost"});
        for (std::uint64_t n = 0; n <= en_bound; ++n) {
          Costed c = f(n);
          t.add({str(n), str(c.value), str(c.cost)});
        }
        t.print(out);
      } else {
        auto fam = parse_family(family);
        if (!fam) throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
        TotalDecider d = class_presentation(*fam, index, ctx.t, ctx.caps);
        Table t("enumerate", {"word", "verdict"});
        for (const Word& w : words_up_to(en_bound)) t.add({w, str(d.classify(w))});
        t.print(out);
      }
    };
  });

  // gaplang
  auto* gap_cmd = app.add_subcommand("gaplang", "Query a gap language");
  std::string r_spec, member;
  std::uint64_t intervals = 0;
  gap_cmd->add_option("--r", r_spec, "succ | double2 | affine:<a>:<b> | tc:<goedel bits>")->required();
  auto* mem_opt = gap_cmd->add_option("--member", member, "Word to test")->check(kBits);
  auto* int_opt = gap_cmd->add_option("--intervals", intervals, "List intervals covering lengths up to N");
  mem_opt->excludes(int_opt);
  gap_cmd->callback([&] {
    if (mem_opt->count() == 0 && int_opt->count() == 0) throw CLI::RequiredError("--member or --intervals");
    action = [&] {
      CostedFunction r = gap_function(r_spec, ctx.caps);
      if (mem_opt->count()) {
        out << str(gap_member(r, member)) << '\n';
        return;
      }
      Table t("intervals", {"k", "start", "end", "parity"});
      std::vector<std::uint64_t> lim = gap_limits(r, intervals);
      for (std::size_t k = 0; k + 1 < lim.size(); ++k)
        t.add({str(k), str(lim[k]), str(lim[k + 1]), k % 2 ? "odd" : "even"});
      t.print(out);
    };
  });

  // diagonalize
  auto* dg_cmd = app.add_subcommand("diagonalize", "Run the uniform diagonalization construction");
  std::string a_ref, a_pres, ap_ref = "builtin:const-no", ap_pres, mode = "presentable", mode_prime = "presentable";
  std::uint64_t search_cap = 1u << 16, verify = 3, bound = 8;
  dg_cmd->add_option("--a", a_ref, "Problem A")->required();
  dg_cmd->add_option("--a-pres", a_pres, "Presentation of C: list:<ref>;..., file:<path> or <family>:<count>")
      ->required();
  dg_cmd->add_option("--aprime", ap_ref, "Problem A'")->capture_default_str();
  dg_cmd->add_option("--aprime-pres", ap_pres, "Presentation of C'")->required();
  dg_cmd->add_option("--mode", mode, "representable | presentable (for C)")->capture_default_str();
  dg_cmd->add_option("--mode-prime", mode_prime, "representable | presentable (for C')")->capture_default_str();
  dg_cmd->add_option("--bound", bound, "Table and reduction-check bound")->capture_default_str();
  dg_cmd->add_option("--search-cap", search_cap, "Words examined per contradiction search")->capture_default_str();
  dg_cmd->add_option("--verify", verify, "Machines per presentation in the witness log")->capture_default_str();
  dg_cmd->callback([&] {
    action = [&] {
      DiagInstance inst{problem_ref(a_ref, ctx),         problem_ref(ap_ref, ctx), presentation_ref(a_pres, ctx),
                        presentation_ref(ap_pres, ctx),  mode_ref(mode),           mode_ref(mode_prime),
                        search_cap,                      verify};
      DiagResult res = diagonalize(inst);
      print_diag(out, res, bound);
      print_karp(out, karp_check(res.reduction, res.b, marked_union(inst.a, inst.a_prime), bound, ctx.caps), bound,
                 "A+A'");
    };
  });

  // ladner
  auto* ld_cmd = app.add_subcommand("ladner", "Ladner specialization: A' = const-no, C' = harder sets");
  ld_cmd->add_option("--a", a_ref, "Problem A")->required();
  ld_cmd->add_option("--pres", a_pres, "Presentation of C")->required();
  ld_cmd->add_option("--mode", mode, "representable | presentable")->capture_default_str();
  ld_cmd->add_option("--bound", bound, "Table and reduction-check bound")->capture_default_str();
  ld_cmd->add_option("--search-cap", search_cap, "Words examined per contradiction search")->capture_default_str();
  ld_cmd->add_option("--verify", verify, "Machines per presentation in the witness log")->capture_default_str();
  ld_cmd->callback([&] {
    action = [&] {
      TotalDecider a = problem_ref(a_ref, ctx);
      Enumeration pres = presentation_ref(a_pres, ctx);
      Enumeration harder = harder_enumeration(a, pres, HarderMode::Cook, {}, ctx.caps);
      DiagResult res = ladner(a, pres, mode_ref(mode), harder, search_cap, verify, ctx.caps);
      print_diag(out, res, bound);
      print_karp(out, karp_check(res.reduction, res.b, a, bound, ctx.caps), bound, "A");
      // First hole in the first odd interval: A says yes, B follows const-no.
      const std::uint64_t len = res.r(0).value;
      Table ht("holes", {"length", "word", "a", "b"});
      Word w(len, '0');
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << std::min<std::uint64_t>(len, 20)); ++k) {
        if (a.classify(w) == Verdict::Yes) {
          ht.add({str(len), w, str(a.classify(w)), str(res.b.classify(w))});
          break;
        }
        auto pos = w.find_last_of('0');
        if (pos == Word::npos) break;
        w[pos] = '1';
        std::fill(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end(), '0');
      }
      ht.print(out);
      Table nt("no_instance", {"word"});
      nt.add({*res.no_instance});
      nt.print(out);
    };
  });

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();  // program name
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    ctx.t.c = parse_rational(c_text);
    ctx.t.s = parse_rational(s_text);
    ctx.t.validate();
    action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    out << e.name() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: InvalidArgument: " << e.what() << '\n';
    out << "InvalidArgument\n";
    return 1;
  }
  return 0;
}

}  // namespace udt::cli
