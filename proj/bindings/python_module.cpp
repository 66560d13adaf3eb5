// python_module.cpp
// -----------------
// pybind11 surface mirroring the CLI verbs: algebra data, atypical sets,
// the dhat / S' / Hopf canonical strings, the link-invariant pipeline on the
// JSON format, the acceptance suite, and a direct in-process CLI driver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <superlink/characters.hpp>
#include <superlink/cli.hpp>
#include <superlink/errors.hpp>
#include <superlink/selfcheck.hpp>
#include <superlink/tangle.hpp>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace superlink;

namespace {

AlgebraSpec to_spec(const std::string& family, int m, int n) {
  if (family == "sl") return AlgebraSpec{Family::sl, m, n};
  if (family == "osp") return AlgebraSpec{Family::osp, m, n};
  raise(Errc::invalid_spec, "unknown family '" + family + "' (expected sl or osp)");
}

std::shared_ptr<const RootData> algebra(const std::string& family, int m, int n) {
  return std::make_shared<const RootData>(build_root_data(to_spec(family, m, n)));
}

TypicalLabel label_of(const std::string& family, int m, int n, const std::vector<long>& c,
                      const std::string& param, SymbolTable& table) {
  return make_label(algebra(family, m, n), c, ExponentForm::symbol(table.intern(param)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "multivariable link invariants from type-I Lie superalgebras";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (exit_code_for(e.code()) == 3)
        PyErr_SetString(PyExc_RuntimeError, e.what());
      else
        PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "root_data_json",
      [](const std::string& family, int m_, int n_) { return root_data_json(*algebra(family, m_, n_)); },
      py::arg("family"), py::arg("m"), py::arg("n"),
      "Root data of sl(m|n) or osp(2|2n) as a JSON string.");

  m.def(
      "atypical_values",
      [](const std::string& family, int m_, int n_, const std::vector<long>& c) {
        std::vector<std::string> out;
        for (const Rational& x : atypical_values(*algebra(family, m_, n_), c))
          out.push_back(rational_to_string(x));
        return out;
      },
      py::arg("family"), py::arg("m"), py::arg("n"), py::arg("c"),
      "Values of the parameter a (as rational strings, ascending) where the "
      "labeled weight is atypical.");

  m.def(
      "dhat_strings",
      [](const std::string& family, int m_, int n_, const std::vector<long>& c,
         const std::string& param) {
        SymbolTable table = SymbolTable::defaults();
        DhatParts parts = dhat(label_of(family, m_, n_, c, param, table));
        return py::make_tuple(to_canonical_string(parts.m0, table),
                              to_canonical_string(parts.m1, table));
      },
      py::arg("family"), py::arg("m"), py::arg("n"), py::arg("c"), py::arg("param") = "a1",
      "The pair (M0, M1) with dhat = M0 / M1, as canonical strings.");

  m.def(
      "sprime_string",
      [](const std::string& family, int m_, int n_, const std::vector<long>& c1,
         const std::vector<long>& c2, const std::string& param1, const std::string& param2) {
        SymbolTable table = SymbolTable::defaults();
        TypicalLabel lambda = label_of(family, m_, n_, c1, param1, table);
        TypicalLabel mu = label_of(family, m_, n_, c2, param2, table);
        return to_canonical_string(sprime(lambda, mu), table);
      },
      py::arg("family"), py::arg("m"), py::arg("n"), py::arg("c1"), py::arg("c2"),
      py::arg("param1") = "a1", py::arg("param2") = "a2",
      "S'(lambda, mu) as a canonical string.");

  m.def(
      "hopf_string",
      [](const std::string& family, int m_, int n_, const std::vector<long>& c1,
         const std::vector<long>& c2, const std::string& param1, const std::string& param2) {
        SymbolTable table = SymbolTable::defaults();
        TypicalLabel lambda = label_of(family, m_, n_, c1, param1, table);
        TypicalLabel mu = label_of(family, m_, n_, c2, param2, table);
        return to_canonical_string(normalized_hopf(lambda, mu), table);
      },
      py::arg("family"), py::arg("m"), py::arg("n"), py::arg("c1"), py::arg("c2"),
      py::arg("param1") = "a1", py::arg("param2") = "a2",
      "The normalized Hopf pairing dhat(mu) * S'(lambda, mu) as a canonical string.");

  m.def(
      "invariant_json",
      [](const std::string& link_json) {
        ParsedLink link = parse_link_json(link_json);
        InvariantResult result = normalize_invariant(link.braid);
        return format_invariant_json(result, link.table);
      },
      py::arg("link_json"),
      "Computes the normalized invariant of a colored braid closure given in "
      "the link JSON format; returns the result JSON string.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a CLI invocation in-process; returns (exit_code, stdout, stderr).");

  m.def(
      "selfcheck",
      []() {
        std::ostringstream out;
        int failed = run_selfcheck(out);
        return py::make_tuple(failed, out.str());
      },
      "Runs the acceptance suite; returns (failed_count, report_text).");
}
