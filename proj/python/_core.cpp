#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqcoh/cellular.hpp"
#include "eqcoh/coeff.hpp"
#include "eqcoh/cohops.hpp"
#include "eqcoh/decomp.hpp"
#include "eqcoh/degree.hpp"
#include "eqcoh/error.hpp"
#include "eqcoh/ringstr.hpp"
#include "eqcoh/serialize.hpp"
#include "eqcoh/slice.hpp"

namespace py = pybind11;
using namespace eqcoh;

// Results cross the boundary as JSON text; the Python side decodes it.
namespace {

std::string dump(const Json& j) { return j.dump(); }

Mode mode_from(const std::string& s) {
  if (s == "z") return Mode::Z;
  if (s == "modp") return Mode::ModP;
  if (s == "modp-printed") return Mode::ModPPrinted;
  throw DomainError("unknown mode '" + s + "'");
}

CoeffMode ring_mode_from(const std::string& s) {
  if (s == "z") return CoeffMode::Z;
  if (s == "modp") return CoeffMode::ModP;
  throw DomainError("unknown ring mode '" + s + "'");
}

Decomposition build(const std::string& family, int n, int m, const std::vector<int>& mults) {
  switch (family_from_string(family)) {
    case Family::Cp: return decompose_cp(n, mults);
    case Family::Regular: return decompose_regular(n, m);
    case Family::Quaternionic: return decompose_quat(n, m);
    case Family::Conjugation: return decompose_conj(m);
  }
  throw DomainError("unknown family");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<SectorError>(mod, "SectorError", PyExc_ValueError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

  mod.def("parse_degree", [](const std::string& text, int n) { return dump(to_json(parse_degree(text, n))); },
          py::arg("text"), py::arg("n"));

  mod.def(
      "coeff",
      [](int n, const std::string& degree, const std::string& mode) {
        VirtualRep a = parse_degree(degree, n);
        Json j = {{"degree", to_json(a)}, {"vanishing", nullptr}};
        if (auto rule = vanishing_reason(a)) j["vanishing"] = to_string(*rule);
        Mode md = mode_from(mode);
        if (md == Mode::Z) {
          j["group"] = to_json(coeff_group(a));
        } else {
          if (!is_prime(n)) throw DomainError("mod p coefficients need a group of prime order");
          j["mackey"] = to_string(md == Mode::ModPPrinted ? mackey_modp_table(a) : mackey_modp(a), n);
        }
        return dump(j);
      },
      py::arg("n"), py::arg("degree"), py::arg("mode") = "z");

  mod.def("cellular_pi", [](int n, const std::string& degree) { return dump(to_json(cellular_pi(parse_degree(degree, n)))); },
          py::arg("n"), py::arg("degree"));

  mod.def(
      "decompose",
      [](const std::string& family, int n, int m, const std::vector<int>& mults) {
        return dump(to_json(build(family, n, m, mults)));
      },
      py::arg("family"), py::arg("n") = 2, py::arg("m") = 1, py::arg("mults") = std::vector<int>{});

  mod.def(
      "cohomology",
      [](const std::string& family, int n, int m, const std::vector<int>& mults, const std::string& degree,
         const std::string& mode, bool infinite) {
        if (infinite) {
          Family fam = family_from_string(family);
          int order = fam == Family::Conjugation ? 2 : n;
          return dump(to_json(cohomology_query_infinite(fam, order, parse_degree(degree, order), mode_from(mode))));
        }
        Decomposition d = build(family, n, m, mults);
        return dump(to_json(cohomology_query(d, parse_degree(degree, d.n), mode_from(mode))));
      },
      py::arg("family"), py::arg("n") = 2, py::arg("m") = 1, py::arg("mults") = std::vector<int>{},
      py::arg("degree") = "0", py::arg("mode") = "z", py::arg("infinite") = false);

  mod.def(
      "certify_slice",
      [](const std::string& family, int n, int ell) {
        return dump(to_json(certify_slice(slice_family_from_string(family), n, ell)));
      },
      py::arg("family"), py::arg("n"), py::arg("ell"));

  mod.def(
      "q0",
      [](int p, int m, int d, const std::string& mode, bool via_tau) {
        auto R = make_ring(p, m, ring_mode_from(mode));
        return dump(to_json(via_tau ? q0_via_tau(R, d) : q0_closed(R, d)));
      },
      py::arg("p"), py::arg("m"), py::arg("d"), py::arg("mode") = "z", py::arg("via_tau") = false);

  mod.def(
      "verify_relation",
      [](const std::string& kind, int p, int m, int r) {
        return dump(to_json(verify_relation(relation_from_string(kind), p, m, r)));
      },
      py::arg("kind"), py::arg("p"), py::arg("m"), py::arg("r"));

  mod.def(
      "series_terms", [](int p, int m, int r, bool symbolic) { return dump(to_json(series_terms(p, m, r, symbolic))); },
      py::arg("p"), py::arg("m"), py::arg("r"), py::arg("symbolic") = false);

  mod.def(
      "injectivity_profile", [](int p, int m, int j) { return dump(to_json(injectivity_profile(p, m, j))); },
      py::arg("p"), py::arg("m"), py::arg("j"));

  mod.def(
      "basis_monomial", [](int k, int i, int p, int m) { return dump(to_json(basis_monomial(k, i, p, m))); },
      py::arg("k"), py::arg("i"), py::arg("p"), py::arg("m"));

  mod.def("conj_ring", [](int n_cap) { return dump(to_json(conj_ring(n_cap))); }, py::arg("n_cap"));

  mod.def(
      "obstruction_check",
      [](int p, int r, bool printed) {
        return dump(to_json(p == 2 ? obstruction_check_c2(r, printed) : obstruction_check(p, r, printed)));
      },
      py::arg("p"), py::arg("r"), py::arg("printed") = false);
}
