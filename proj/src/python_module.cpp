#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dycknf/cli.hpp"
#include "dycknf/cyk.hpp"
#include "dycknf/dyck.hpp"
#include "dycknf/elin.hpp"
#include "dycknf/enumerate.hpp"
#include "dycknf/errors.hpp"
#include "dycknf/grammar_io.hpp"
#include "dycknf/normal_forms.hpp"
#include "dycknf/phi.hpp"
#include "dycknf/predicates.hpp"

namespace py = pybind11;
using namespace dycknf;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dyck normal form toolkit";

  auto error = py::register_exception<Error>(m, "DycknfError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "GrammarParseError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<DerivationTooShort>(m, "DerivationTooShort", precondition.ptr());
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", error.ptr());

  py::class_<Grammar>(m, "Grammar")
      .def_static("parse", [](const std::string& text) { return parse_grammar(text); })
      .def_static("load", [](const std::string& path) { return load_grammar(path); })
      .def_property_readonly("start", &Grammar::start)
      .def_property_readonly("nonterminals", &Grammar::nonterminals)
      .def_property_readonly("terminals", [](const Grammar& g) {
        return std::string(g.terminals().begin(), g.terminals().end());
      })
      .def_property_readonly("rules", [](const Grammar& g) {
        std::vector<std::string> out;
        for (const auto& r : g.rules()) out.push_back(format_rule(r));
        return out;
      })
      .def("serialize", &serialize_grammar)
      .def("__eq__", [](const Grammar& a, const Grammar& b) { return a == b; })
      .def("__repr__", [](const Grammar& g) {
        return "<Grammar start=" + g.start() + " rules=" + std::to_string(g.rules().size()) + ">";
      });

  m.def("is_cnf", &is_cnf);
  m.def("is_dyck_nf", &is_dyck_nf);
  m.def("to_cnf", &to_cnf);
  m.def("to_dyck_nf", [](const Grammar& g) {
    auto conv = to_dyck_nf(g);
    return py::make_tuple(conv.grammar, conv.ledger.serialize());
  }, "Returns (grammar, ledger text).");
  m.def("member", &member);
  m.def("enumerate_words", [](const Grammar& g, std::size_t max_len) {
    return enumerate_words(g, max_len);
  });
  m.def("trace", [](const Grammar& g, const std::string& w) {
    const auto pairing = pairing_of(g);
    const auto t = trace_word(pairing, extract_tree(g, w));
    return py::make_tuple(format_dyck_word(t), format_trace(pairing, t));
  }, "Trace-word of the canonical tree as (numeric, named).");
  m.def("in_dk_lemma", [](const std::string& w) { return in_dk_lemma(parse_dyck_word(w)); });
  m.def("in_dk_stack", [](const std::string& w) { return in_dk_stack(parse_dyck_word(w)); });
  m.def("verify_characterization", [](const Grammar& g, std::size_t max_len) {
    const auto report = verify_characterization(extend_grammar(g), max_len);
    return py::make_tuple(report.passed, report.text());
  });
  m.def("is_even_linear", &is_even_linear);
  m.def("elin_recognize", [](const Grammar& g, const std::string& w) {
    const auto r = recognize_atm(elin_to_dyck_nf(g), w);
    py::dict out;
    out["accepted"] = r.accepted;
    out["base_case"] = r.trace.base_case;
    out["alternation_depth"] = r.trace.alternation_depth;
    out["work_tape_cells"] = r.trace.work_tape_cells;
    out["report"] = format_recognition_report(r);
    return out;
  });
  m.def("iterated_division", [](std::uint64_t p) {
    const auto d = iterated_division(p);
    return py::make_tuple(d.divisor, d.quotients, d.remainders);
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
