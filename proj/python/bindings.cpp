#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "puiseux/blocks.hpp"
#include "puiseux/cli.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/homs.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/numerical.hpp"
#include "puiseux/primary.hpp"
#include "puiseux/serialize.hpp"

namespace py = pybind11;
using puiseux::Rational;
using puiseux::json::Json;

namespace {

// Specs cross the boundary as dicts (or JSON strings) in the CLI schema;
// structured results come back as plain Python objects.
Json to_json_value(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return Json::parse(obj.cast<std::string>());
  const auto dumps = py::module_::import("json").attr("dumps");
  return Json::parse(dumps(obj).cast<std::string>());
}

py::object to_python(const Json& j) {
  const auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

puiseux::PuiseuxSpec spec_of(const py::object& obj) { return puiseux::json::spec_from(to_json_value(obj)); }

std::vector<Rational> rationals_of(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(Rational::parse(s));
  return out;
}

std::vector<std::string> strings_of(const std::vector<Rational>& items) {
  std::vector<std::string> out;
  for (const auto& q : items) out.push_back(q.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(puiseux, m) {
  m.doc() = "Exact computations in Puiseux, numerical and block monoids";

  py::register_exception<puiseux::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<puiseux::AtomicityUnknown>(m, "AtomicityUnknown", PyExc_RuntimeError);
  py::register_exception<puiseux::ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<puiseux::ScanCapError>(m, "ScanCapError", PyExc_RuntimeError);

  m.def("frobenius", [](const std::vector<std::uint64_t>& gens) {
    return puiseux::NumericalMonoid(std::span<const std::uint64_t>(gens)).frobenius();
  }, py::arg("generators"));
  m.def("apery_set", [](const std::vector<std::uint64_t>& gens, std::uint64_t element) {
    return puiseux::NumericalMonoid(std::span<const std::uint64_t>(gens)).apery_set(element);
  }, py::arg("generators"), py::arg("element"));

  m.def("member", [](const py::object& spec, const std::string& x, std::size_t depth) {
    return to_python(puiseux::json::to_json(puiseux::member(spec_of(spec), Rational::parse(x), depth)));
  }, py::arg("spec"), py::arg("x"), py::arg("depth") = 8);
  m.def("atoms", [](const py::object& spec, std::size_t depth) {
    return strings_of(puiseux::atoms_up_to(spec_of(spec), depth));
  }, py::arg("spec"), py::arg("depth") = 8);
  m.def("classify", [](const py::object& spec) {
    const auto c = puiseux::classify(spec_of(spec));
    Json j = puiseux::json::to_json(c);
    j["evidence"] = c.evidence;
    return to_python(j);
  }, py::arg("spec"));

  m.def("factorizations", [](const py::object& spec, const std::string& x) {
    Json all = Json::array();
    for (const auto& f : puiseux::factorizations(spec_of(spec), Rational::parse(x))) {
      all.push_back(puiseux::json::to_json(f));
    }
    return to_python(all);
  }, py::arg("spec"), py::arg("x"));
  m.def("length_set", [](const py::object& spec, const std::string& x) {
    return to_python(puiseux::json::to_json(puiseux::length_set(spec_of(spec), Rational::parse(x))));
  }, py::arg("spec"), py::arg("x"));
  m.def("elasticity", [](const py::object& spec, const std::string& x) {
    return puiseux::elasticity(spec_of(spec), Rational::parse(x)).to_string();
  }, py::arg("spec"), py::arg("x"));

  m.def("verify_finitary_certificate",
        [](const py::object& spec, const std::string& n, const std::vector<std::string>& s,
           const std::string& bound, std::size_t depth) {
          const auto r = puiseux::verify_finitary_certificate(spec_of(spec), Rational::parse(n).num(),
                                                              rationals_of(s), Rational::parse(bound), depth);
          return to_python(puiseux::json::to_json(r));
        },
        py::arg("spec"), py::arg("n"), py::arg("S"), py::arg("x_bound"), py::arg("depth"));
  m.def("refute_strongly_primary",
        [](const py::object& spec, const std::string& n, const std::vector<std::string>& s) {
          const auto r = puiseux::refute_strongly_primary(spec_of(spec), Rational::parse(n).num(), rationals_of(s));
          return to_python(puiseux::json::to_json(r));
        },
        py::arg("spec"), py::arg("n"), py::arg("S"));
  m.def("build_primary_construction",
        [](const std::string& p, const std::string& q, const std::string& f,
           const std::vector<std::vector<std::uint64_t>>& sn, std::size_t depth) {
          std::vector<puiseux::NumericalMonoid> levels;
          for (const auto& g : sn) levels.emplace_back(std::span<const std::uint64_t>(g));
          const auto r = puiseux::build_primary_construction(Rational::parse(p).num(), Rational::parse(q).num(),
                                                             puiseux::Polynomial::parse(f), std::move(levels), depth);
          return to_python(puiseux::json::to_json(r));
        },
        py::arg("p"), py::arg("q"), py::arg("f"), py::arg("sn"), py::arg("depth"));

  m.def("check_hom", [](const std::string& q, const py::object& dom, const py::object& cod, std::size_t depth) {
    return to_python(puiseux::json::to_json(puiseux::check_hom(Rational::parse(q), spec_of(dom), spec_of(cod), depth)));
  }, py::arg("q"), py::arg("domain"), py::arg("codomain"), py::arg("depth") = 8);
  m.def("is_transfer", [](const std::string& q, const py::object& dom, const py::object& cod) {
    return to_python(puiseux::json::to_json(puiseux::is_transfer(Rational::parse(q), spec_of(dom), spec_of(cod))));
  }, py::arg("q"), py::arg("domain"), py::arg("codomain"));
  m.def("automorphism_search", [](const py::object& spec, std::size_t window) {
    return strings_of(puiseux::automorphism_search(spec_of(spec), window).multipliers);
  }, py::arg("spec"), py::arg("window"));

  m.def("block_atoms", [](const std::vector<std::uint64_t>& orders) {
    const puiseux::FiniteAbelianGroup g(orders);
    std::vector<std::vector<puiseux::GroupElement>> out;
    for (const auto& a : puiseux::block_atoms(g, g.elements())) out.push_back(a.terms());
    return out;
  }, py::arg("orders"));
  m.def("davenport", [](const std::vector<std::uint64_t>& orders) {
    return puiseux::davenport(puiseux::FiniteAbelianGroup(orders));
  }, py::arg("orders"));
  m.def("gcd_stabilization", [](const std::vector<std::uint64_t>& terms, std::size_t cap) {
    return puiseux::gcd_stabilization(puiseux::from_list(terms), cap).m;
  }, py::arg("terms"), py::arg("cap") = 100);

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = puiseux::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
