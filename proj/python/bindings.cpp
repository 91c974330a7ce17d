#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "udt/circuit.hpp"
#include "udt/cli.hpp"
#include "udt/enumeration.hpp"
#include "udt/errors.hpp"
#include "udt/gapdiag.hpp"
#include "udt/promise.hpp"
#include "udt/tm.hpp"

namespace py = pybind11;
using namespace udt;

namespace {

TotalDecider builtin_or_throw(const std::string& name) {
  auto d = problems::builtin(name);
  if (!d) throw Error(ErrorKind::InvalidArgument, "unknown builtin problem " + name);
  return *d;
}

std::string verdict_str(Verdict v) { return std::string(verdict_token(v)); }

}  // namespace

PYBIND11_MODULE(_udt, m) {
  m.doc() = "Exact promise-problem and quantum-circuit toolkit";

  static py::exception<Error> error(m, "UdtError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });
  m.def("error_kind", [](const std::string& what) { return what.substr(0, what.find(':')); },
        "Error kind name from a UdtError message");

  m.def("parse_circuit",
        [](const std::string& bits, bool witness_header) {
          Circuit c = parse_circuit(bits, witness_header);
          py::dict d;
          d["listing"] = gate_listing(c);
          d["gates"] = c.gates().size();
          d["qubits"] = c.total_qubits();
          d["witness_qubits"] = c.witness_qubits();
          d["trivial"] = c.is_trivial();
          d["encoding"] = encode_circuit(c, witness_header);
          return d;
        },
        py::arg("bits"), py::arg("witness_header") = false);
  m.def("p_acc",
        [](const std::string& bits, const std::string& input) {
          const Circuit c = parse_circuit(bits, false);
          const Word basis = input.empty() ? Word(c.total_qubits(), '0') : Word(input);
          const FieldElem p = p_acc(c, basis);
          return py::make_tuple(to_string(p), to_double(p));
        },
        py::arg("bits"), py::arg("input") = "", "Exact acceptance probability as (text, float); input defaults to all zeros");
  m.def("classify_circuit",
        [](const std::string& family, const std::string& bits) {
          if (family == "bqp") return verdict_str(classify_bqp_circuit(parse_circuit(bits, false)));
          if (family == "qcma") return verdict_str(classify_qcma_circuit(parse_circuit(bits, true)));
          if (family == "qma") return verdict_str(classify_qma_circuit(parse_circuit(bits, true)));
          throw Error(ErrorKind::InvalidArgument, "family must be bqp, qcma or qma");
        },
        py::arg("family"), py::arg("bits"));

  m.def("run",
        [](const std::string& godel, const std::string& input, std::uint64_t fuel) {
          RunResult r = run(decode_godel(godel), Word(input), fuel);
          return py::make_tuple(r.halted(), r.output, r.steps);
        },
        py::arg("godel"), py::arg("input"), py::arg("fuel") = 1u << 20);
  m.def("normalize_godel", [](const std::string& bits) { return encode_godel(decode_godel(bits)); });

  m.def("builtin_names", &problems::builtin_names);
  m.def("classify_builtin",
        [](const std::string& name, const std::string& x) { return verdict_str(builtin_or_throw(name).classify(x)); },
        py::arg("name"), py::arg("word"));
  m.def("p_machine_verdict",
        [](std::uint64_t i, const std::string& x) { return verdict_str(p_machine(i).classify(x)); },
        py::arg("index"), py::arg("word"));

  m.def("pair", &pair);
  m.def("unpair", &unpair);
  m.def("poly_series", [](std::uint64_t i) { return poly_series(i).to_string(); });
  m.def("poly_index", [](const std::string& p) { return poly_index(Polynomial::parse(p)); });

  m.def("gap_member",
        [](const std::string& spec, const std::string& x) { return gap_member(gap_function(spec), x); },
        py::arg("r"), py::arg("word"));
  m.def("gap_limits",
        [](const std::string& spec, std::uint64_t max_len) { return gap_limits(gap_function(spec), max_len); },
        py::arg("r"), py::arg("max_len"));

  m.def("cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "udt");
          std::ostringstream out, err;
          const int code = cli::dispatch(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process, returning (exit_code, stdout, stderr)");
}
