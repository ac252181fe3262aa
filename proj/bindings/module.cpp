#include "slhyper/checker.hpp"
#include "slhyper/generator.hpp"
#include "slhyper/hypersl_to_slii.hpp"
#include "slhyper/ilar.hpp"
#include "slhyper/parser.hpp"
#include "slhyper/slii_to_hypersl.hpp"
#include "slhyper/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace slhyper;

namespace {

CgsDocument prepare(const std::string& cgs_json) {
  CgsDocument doc = load_cgs_json(cgs_json);
  if (already_il_ar(doc))
    return doc;
  return make_il_ar(doc.cgs, doc.fam);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strategy-logic translation toolkit (string-based core bindings)";

  m.def("validate", [](const std::string& cgs_json) {
    CgsDocument doc = load_cgs_json(cgs_json);
    validate_cgs(doc);
    return input_digest(cgs_json);
  });

  m.def("transform", [](const std::string& cgs_json) {
    CgsDocument doc = load_cgs_json(cgs_json);
    if (already_il_ar(doc))
      return save_cgs_json(doc);
    return save_cgs_json(make_il_ar(doc.cgs, doc.fam));
  });

  m.def("parse_slii", [](const std::string& text) { return print_slii(parse_slii(text)); });
  m.def("parse_hypersl",
        [](const std::string& text) { return print_hypersl(parse_hypersl(text)); });

  m.def("encode_s2h", [](const std::string& cgs_json, const std::string& formula) {
    CgsDocument doc = prepare(cgs_json);
    return print_hypersl(translate_slii(parse_slii(formula), doc.cgs, doc.fam, *doc.cert));
  });

  m.def(
      "encode_h2s",
      [](const std::string& cgs_json, const std::string& formula, bool prune) {
        CgsDocument doc = prepare(cgs_json);
        auto [comp, out] =
            translate_hypersl(parse_hypersl(formula), doc.cgs, *doc.cert, prune);
        CgsDocument composed;
        composed.cgs = comp.cgs;
        composed.fam = comp.fam;
        return py::make_tuple(save_cgs_json(composed), print_slii(out));
      },
      py::arg("cgs_json"), py::arg("formula"), py::arg("prune") = false);

  m.def("check_slii",
        [](const std::string& cgs_json, const std::string& formula, int window) {
          CgsDocument doc = load_cgs_json(cgs_json);
          return check_slii(doc.cgs, doc.fam, parse_slii(formula), window);
        });

  m.def("check_hypersl",
        [](const std::string& cgs_json, const std::string& formula, int window) {
          CgsDocument doc = load_cgs_json(cgs_json);
          return check_hypersl(doc.cgs, parse_hypersl(formula), window);
        });

  m.def("verify_s2h",
        [](const std::string& cgs_json, const std::string& formula, int window) {
          return verify_report_json(
              verify_s2h(load_cgs_json(cgs_json), parse_slii(formula), window));
        });

  m.def(
      "verify_h2s",
      [](const std::string& cgs_json, const std::string& formula, int window, bool prune) {
        return verify_report_json(verify_h2s(load_cgs_json(cgs_json),
                                                  parse_hypersl(formula), window, prune));
      },
      py::arg("cgs_json"), py::arg("formula"), py::arg("window"),
      py::arg("prune") = false);

  m.def(
      "gen_instance",
      [](std::uint64_t seed, int states, int actions, int agents, int aps,
         int observations) {
        GenSizes sizes;
        sizes.states = states;
        sizes.actions = actions;
        sizes.agents = agents;
        sizes.aps = aps;
        sizes.observations = observations;
        return save_cgs_json(random_instance(seed, sizes));
      },
      py::arg("seed"), py::arg("states") = 2, py::arg("actions") = 2,
      py::arg("agents") = 1, py::arg("aps") = 2, py::arg("observations") = 1);

  m.def(
      "random_slii",
      [](std::uint64_t seed, const std::string& cgs_json, int qdepth, int tdepth) {
        return print_slii(
            random_slii_formula(seed, load_cgs_json(cgs_json), qdepth, tdepth));
      },
      py::arg("seed"), py::arg("cgs_json"), py::arg("qdepth") = 2,
      py::arg("tdepth") = 2);

  m.def(
      "random_hypersl",
      [](std::uint64_t seed, const std::string& cgs_json, int qdepth, int tdepth,
         int pathvars) {
        return print_hypersl(random_hypersl_formula(seed, load_cgs_json(cgs_json),
                                                    qdepth, tdepth, pathvars));
      },
      py::arg("seed"), py::arg("cgs_json"), py::arg("qdepth") = 2,
      py::arg("tdepth") = 2, py::arg("pathvars") = 2);
}
