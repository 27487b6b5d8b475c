#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "focq/coremap.hpp"
#include "focq/cqgen.hpp"
#include "focq/errors.hpp"
#include "focq/kif.hpp"
#include "focq/microprover.hpp"
#include "focq/ontology.hpp"
#include "focq/report.hpp"
#include "focq/runner.hpp"
#include "focq/tptp.hpp"
#include "focq/verdict.hpp"

namespace py = pybind11;
using namespace focq;

namespace {

py::dict result_dict(const ProverResult& r) {
  py::dict d;
  d["szs"] = std::string(to_string(r.szs));
  d["wall_seconds"] = r.wall_seconds;
  d["prover_seconds"] = r.prover_seconds ? py::cast(*r.prover_seconds) : py::none();
  d["used_axioms"] = r.used_axioms;
  return d;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["cq_id"] = v.cq_id;
  d["polarity"] = std::string(to_string(v.polarity));
  d["classification"] = std::string(to_string(v.classification));
  d["effective"] = std::string(to_string(v.effective));
  d["szs"] = std::string(to_string(v.szs));
  d["flagged"] = v.flagged;
  d["used_axioms"] = v.used_axioms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_focq, m) {
  m.doc() = "Competency-question evaluation of first-order ontologies";

  static py::exception<Error> focq_error(m, "FocqError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(focq_error, (e.code() + ": " + e.what()).c_str());
    }
  });

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return kif::print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula(" + kif::print(f) + ")"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def_property_readonly("kind", [](const Formula& f) { return static_cast<int>(f.kind()); })
      .def("free_variables", [](const Formula& f) { return free_variables(f); })
      .def("symbols", [](const Formula& f) { return symbols(f); });

  m.def("parse_kif", [](const std::string& text) { return kif::parse(text); }, py::arg("text"),
        "All formulas of a SUO-KIF text.");
  m.def("parse_formula", [](const std::string& text) { return kif::parse_formula(text); }, py::arg("text"));
  m.def("print_kif", [](const Formula& f) { return kif::print(f); });
  m.def("nnf", &nnf);
  m.def("negate", [](const Formula& f) { return nnf(Formula::negation(f)); }, "NNF of the negation.");
  m.def("alpha_equivalent", &alpha_equivalent);

  m.def("mangle_symbol", [](const std::string& s) { return tptp::mangle_symbol(s); });
  m.def("demangle_symbol", [](const std::string& s) { return tptp::demangle_symbol(s); });
  m.def("to_fof", &tptp::to_fof);
  m.def("emit_fof", [](const Formula& f, const std::string& role, const std::string& name) {
    return tptp::emit_fof(f, role, name);
  });
  m.def("parse_fof", [](const std::string& text) { return tptp::parse_formula(text); });
  m.def("parse_szs", [](const std::string& output) { return result_dict(tptp::parse_szs(output)); });

  m.def(
      "classify",
      [](const std::string& polarity, const std::string& szs, const std::string& cq_id) {
        ProverResult r;
        r.szs = szs_from_string(szs);
        return verdict_dict(classify(polarity_from_string(polarity), r, cq_id));
      },
      py::arg("polarity"), py::arg("szs"), py::arg("cq_id") = "");

  m.def("clausify", [](const Formula& f) {
    std::vector<std::string> out;
    for (const auto& c : microprover::clausify(f)) out.push_back(microprover::to_string(c));
    return out;
  });

  m.def(
      "prove",
      [](const std::vector<std::pair<std::string, std::string>>& axioms, std::optional<std::string> conjecture,
         double timeout, std::size_t max_clauses) {
        std::vector<microprover::LabeledFormula> ax;
        for (const auto& [name, text] : axioms) ax.push_back({name, kif::parse_formula(text)});
        std::optional<microprover::LabeledFormula> goal;
        if (conjecture) goal = microprover::LabeledFormula{"conjecture", kif::parse_formula(*conjecture)};
        microprover::ProverOptions opt;
        opt.limit_seconds = timeout;
        opt.max_clauses = max_clauses;
        microprover::ProofAttempt attempt;
        {
          py::gil_scoped_release release;
          attempt = microprover::prove(ax, goal, opt);
        }
        auto d = result_dict(attempt.result);
        d["transcript"] = attempt.transcript;
        return d;
      },
      py::arg("axioms"), py::arg("conjecture") = py::none(), py::arg("timeout") = 10.0,
      py::arg("max_clauses") = 50000,
      "Axioms are (name, SUO-KIF) pairs; returns the SZS status and used axioms.");

  m.def(
      "load_corpus",
      [](const std::filesystem::path& path) {
        py::list out;
        auto loads = py::module_::import("json").attr("loads");
        for (const auto& cq : cqgen::load_corpus(path)) out.append(loads(cqgen::to_json(cq).dump()));
        return out;
      },
      py::arg("path"));

  m.def(
      "load_creative",
      [](const std::string& text) {
        py::list out;
        for (const auto& cq : cqgen::load_creative(text)) {
          py::dict d;
          d["id"] = cq.id;
          d["polarity"] = std::string(to_string(cq.polarity));
          d["formula"] = cq.formula;
          out.append(d);
        }
        return out;
      },
      py::arg("text"));

  m.def(
      "emit_problem",
      [](const std::filesystem::path& ontology, const std::string& cq_id, const std::string& polarity,
         const std::string& kif) {
        const auto onto = load_ontology(ontology);
        CompetencyQuestion cq{cq_id, polarity_from_string(polarity), PatternKind::Creative, kif::parse_formula(kif), {}};
        return tptp::emit_problem(onto, cq).render();
      },
      py::arg("ontology"), py::arg("cq_id"), py::arg("polarity"), py::arg("kif"),
      "TPTP problem text for one CQ against an ontology file (inline axioms).");
}
