#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kauffman/idcheck.hpp"
#include "kauffman/jones.hpp"
#include "kauffman/kauffman.hpp"
#include "kauffman/parse.hpp"
#include "kauffman/render.hpp"
#include "kauffman/verify.hpp"

namespace py = pybind11;
using namespace kauffman;

namespace {

Verdict check_by_name(const std::string& monoid, const std::string& identity_text) {
  Identity id = parse_identity(identity_text);
  if (monoid == "K3" || monoid == "K4") {
    Verdict v = check_k3_k4(id);
    v.monoid = monoid;
    return v;
  }
  if (monoid == "J4") {
    return check_j4(id);
  }
  throw InvalidArgument("unknown monoid: " + monoid + " (expected K3, K4 or J4)");
}

}  // namespace

PYBIND11_MODULE(_kauffman, m) {
  m.doc() = "diagram monoid arithmetic: Jones/Kauffman elements and identity checking";

  py::register_exception<Error>(m, "KauffmanError");

  py::class_<WireDiagram>(m, "WireDiagram")
      .def_static("from_literal", [](const std::string& text) {
        return parse_diagram_literal(text);
      })
      .def_static("identity", &WireDiagram::identity)
      .def_static("hook", &WireDiagram::hook)
      .def_static("circle", &WireDiagram::circle)
      .def_property_readonly("rank", &WireDiagram::rank)
      .def_property_readonly("circles", &WireDiagram::circles)
      .def_property_readonly("t_wires", &WireDiagram::t_wire_count)
      .def("is_planar", &WireDiagram::is_planar)
      .def("literal", [](const WireDiagram& d) { return to_literal(d); })
      .def("render", [](const WireDiagram& d, const std::string& format) {
        return render(d, format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii);
      }, py::arg("format") = "ascii")
      .def("__mul__", [](const WireDiagram& a, const WireDiagram& b) { return a * b; })
      .def("__eq__", [](const WireDiagram& a, const WireDiagram& b) { return a == b; })
      .def("__hash__", &WireDiagram::hash)
      .def("__repr__", [](const WireDiagram& d) { return to_literal(d); });

  m.def("evaluate", [](const std::string& word, int rank) {
    ExtKauffmanElement x = evaluate(parse_generator_word(word), rank);
    return py::make_tuple(to_literal(x.jones().diagram()), x.circles());
  }, py::arg("word"), py::arg("rank"),
     "evaluate a generator word; returns (jones_literal, circles)");

  m.def("multiply", [](const std::string& a, const std::string& b) {
    return to_literal(parse_diagram_literal(a) * parse_diagram_literal(b));
  }, "multiply two diagram literals");

  m.def("enumerate_jones", [](int rank) {
    std::vector<std::string> out;
    for (const JonesElement& x : enumerate_jones(rank)) {
      out.push_back(to_literal(x.diagram()));
    }
    return out;
  });

  m.def("catalan", &catalan);

  m.def("check", [](const std::string& monoid, const std::string& identity_text) {
    return check_by_name(monoid, identity_text).holds;
  }, py::arg("monoid"), py::arg("identity"),
     "decide an identity in K3, K4 or J4");

  m.def("check_verdict", [](const std::string& monoid, const std::string& identity_text) {
    return check_by_name(monoid, identity_text).to_json_text();
  }, py::arg("monoid"), py::arg("identity"), "same, as a JSON verdict string");

  m.def("verify", [](const std::string& suite, int max_rank) {
    Report r = run_verify_suite(suite, max_rank);
    return py::make_tuple(r.all_pass(), r.to_text());
  }, py::arg("suite"), py::arg("max_rank") = 0);
}
