// Python bindings. Structured results cross the boundary as JSON text;
// the package turns them into dicts and ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aprings/annihilator.hpp"
#include "aprings/error.hpp"
#include "aprings/expression.hpp"
#include "aprings/group.hpp"
#include "aprings/ring_model.hpp"
#include "aprings/serialization.hpp"
#include "aprings/spectrum.hpp"
#include "aprings/verify_suite.hpp"

namespace py = pybind11;
using namespace aprings;

namespace {

SignMode parse_mode(const std::string& mode) {
  if (mode == "signed") return SignMode::Signed;
  if (mode == "unsigned") return SignMode::Unsigned;
  throw Error(ErrorKind::InvalidArgument, "mode must be \"signed\" or \"unsigned\"");
}

ModelPtr ring_from(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return construct_model(parse_json_text(spec));
  return preset_model(spec);
}

std::string poly_json(const IntPolynomial& p) { return polynomial_to_json(p).dump(); }

}  // namespace

PYBIND11_MODULE(_aprings, m) {
  m.doc() = "AP rings core";

  static py::exception<Error> base(m, "ApringsError");
  static py::exception<Error> bound(m, "BoundExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.is_bound()) {
        py::set_error(bound, e.what());
      } else {
        py::set_error(base, e.what());
      }
    }
  });

  m.def("annihilating_polynomial", [](const std::string& roots_json, int n, const std::string& mode) {
    const auto spec = root_spec_from_json(parse_json_text(roots_json));
    return poly_json(annihilating_polynomial(spec, n, parse_mode(mode)));
  });
  m.def("sum_set", [](const std::string& roots_json, int n, const std::string& mode) {
    const auto spec = root_spec_from_json(parse_json_text(roots_json));
    return sum_set_to_json(root_sum_set(spec, n, parse_mode(mode))).dump();
  });
  m.def("lewis_polynomial", [](int n) { return poly_json(lewis_polynomial(n)); });
  m.def("quartic_t", [](int n) { return poly_json(quartic_t(n)); });
  m.def("quartic_p", [](int n) { return poly_json(quartic_p(n)); });
  m.def("pfister_chain_polynomial", [](int n, unsigned k) { return poly_json(pfister_chain_polynomial(n, k)); });

  m.def("table_of_marks", [](const std::string& group) {
    auto g = named_group(group);
    if (!g) throw Error(ErrorKind::InvalidArgument, "unknown named group \"" + group + "\"");
    auto table = table_of_marks(*g, group);
    if (group == "A5") table = table.relabeled(a5_label_aliases());
    return table_to_json(table).dump();
  });
  m.def("bundled_a5_table", [] { return table_to_json(bundled_a5_table()).dump(); });
  m.def("named_groups", &named_group_names);
  m.def("presets", &preset_model_names);

  m.def("spectrum", [](const std::string& ring, unsigned primes_up_to) {
    return spectrum_report(*ring_from(ring), primes_up_to).dump();
  });
  m.def("analyze", [](const std::string& ring_spec, const std::string& element) {
    const auto ring = ring_from(ring_spec);
    const auto r = parse_element(*ring, element);
    const auto ann = verify_annihilated(*ring, r);
    nlohmann::json out{{"ring", ring->name()},
                       {"element", format_element(*ring, r)},
                       {"length", integer_to_json(ann.length)},
                       {"annihilator", polynomial_to_json(ann.polynomial)},
                       {"annihilated", ann.annihilated}};
    try {
      out["predicates"] = element_predicates(*ring, r).to_json();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unsupported) throw;
      out["predicates"] = nullptr;
    }
    return out.dump();
  });
  m.def("is_admissible", [](const std::string& ring) {
    const auto a = is_admissible(*ring_from(ring));
    return py::make_tuple(a.admissible, a.witness);
  });

  m.def("run_suite", [](const std::string& suite, const std::string& filter) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : run_suite(suite, filter)) {
      out.push_back({{"id", r.id}, {"criterion", r.criterion}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return out.dump();
  });
}
