#include "eqcoh/serialize.hpp"

namespace eqcoh {

namespace {

Json rule_json(const std::optional<VanishingRule>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

std::string kind_name(CoeffGroup::Kind k) {
  switch (k) {
    case CoeffGroup::Kind::Zero: return "zero";
    case CoeffGroup::Kind::FreeZ: return "Z";
    case CoeffGroup::Kind::Cyclic: return "cyclic";
  }
  return "?";
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Z: return "z";
    case Mode::ModP: return "modp";
    case Mode::ModPPrinted: return "modp-printed";
  }
  return "?";
}

}  // namespace

Json to_json(const VirtualRep& v) {
  Json lam = Json::object();
  for (auto [i, m] : v.lambdas()) lam[std::to_string(i)] = m;
  return {{"n", v.order()}, {"text", v.str()}, {"dim", v.dim()}, {"trivial", v.trivial_dim()},
          {"sigma", v.sigma()}, {"lambda", lam}};
}

Json to_json(const Monomial& m) {
  Json a = Json::object(), u = Json::object();
  for (auto [d, e] : m.a) a[std::to_string(d)] = e;
  for (auto [d, e] : m.u) u[std::to_string(d)] = e;
  return {{"a", a}, {"u", u}, {"text", m.str()}};
}

Json to_json(const CoeffGroup& g) {
  Json gen = Json::array();
  for (auto& [c, m] : g.generator) gen.push_back({{"coeff", c}, {"monomial", to_json(m)}});
  Json mons = Json::array();
  for (std::size_t i = 0; i < g.monomials.size(); ++i)
    mons.push_back({{"monomial", to_json(g.monomials[i])}, {"residue", g.residues[i]}});
  return {{"kind", kind_name(g.kind)},
          {"order", g.kind == CoeffGroup::Kind::Cyclic ? Json(g.order) : Json(nullptr)},
          {"text", g.str()},
          {"generator", gen},
          {"monomials", mons}};
}

Json to_json(const AbelianGroup& g) {
  return {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", g.str()}};
}

Json to_json(const MackeySum& s) {
  Json c = Json::object();
  for (auto [m, k] : s.count) c[to_string(m, s.p)] = k;
  return {{"p", s.p}, {"summands", c}, {"text", s.str()}};
}

Json to_json(const Decomposition& d) {
  Json summands = Json::array(), cells = Json::array(), obs = Json::array();
  for (auto& v : d.summands) summands.push_back(v.str());
  for (auto& v : d.cells) cells.push_back(v.str());
  for (auto& o : d.obstructions)
    obs.push_back({{"upper", o.upper}, {"lower", o.lower}, {"degree", o.alpha.str()}, {"rule", rule_json(o.rule)}});
  Json free = nullptr;
  if (d.freeness_failure) {
    auto& w = *d.freeness_failure;
    free = {{"i", w.i}, {"j", w.j}, {"h", w.h}, {"k", w.k}};
  }
  return {{"family", to_string(d.family)}, {"n", d.n},         {"twist", d.twist},
          {"lines", d.lines},              {"cells", cells},   {"summands", summands},
          {"splits", d.splits()},          {"freeness_failure", free}, {"obstructions", obs}};
}

Json to_json(const CohomologyAnswer& a) {
  Json groups = Json::array();
  for (auto& g : a.groups) groups.push_back(to_json(g));
  Json j = {{"mode", mode_name(a.mode)}, {"summands_used", a.summands_used}, {"text", a.str()}};
  if (a.mode == Mode::Z)
    j["groups"] = groups;
  else
    j["mackey"] = to_json(a.mackey);
  return j;
}

Json to_json(const SliceCertificate& c) {
  Json inst = Json::array();
  for (auto& i : c.instances)
    inst.push_back({{"m", i.m}, {"k", i.k}, {"r", i.r}, {"degree", i.degree.str()}, {"rule", rule_json(i.rule)},
                    {"chain_zero", i.chain_zero}});
  return {{"family", to_string(c.family)},
          {"n", c.n},
          {"ell", c.ell},
          {"level", c.level},
          {"summand", c.summand.str()},
          {"connective", c.connective},
          {"closed_form_agrees", c.closed_form_agrees},
          {"coconnective", c.coconnective},
          {"ok", c.ok()},
          {"instances", inst}};
}

Json to_json(const Poly& p) {
  Json terms = Json::array();
  const RingSpec& r = p.ring();
  for (auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (int i = 0; i < r.nvars(); ++i)
      if (m[i]) exps[r.var_name(i)] = m[i];
    terms.push_back({{"coeff", c}, {"exponents", exps}});
  }
  return {{"text", p.str()}, {"terms", terms}};
}

Json to_json(const SeriesTerms& s) {
  auto list = [](const std::vector<Poly>& v) {
    Json a = Json::array();
    for (auto& p : v) a.push_back(to_json(p));
    return a;
  };
  return {{"r", s.r},
          {"B", to_json(s.B)},
          {"T_images", list(s.T_images)},
          {"A_images", list(s.A_images)},
          {"T_symbolic", list(s.T_symbolic)},
          {"A_symbolic", list(s.A_symbolic)},
          {"images_match_closed", s.images_match_closed},
          {"factorization_holds", s.factorization_holds},
          {"symbolic_maps_to_images", s.symbolic_maps_to_images}};
}

Json to_json(const RelationCheck& c) {
  return {{"kind", to_string(c.kind)}, {"p", c.p},
          {"m", c.m},                  {"r", c.r},
          {"holds", c.holds},          {"relation", c.relation},
          {"residual", c.residual},    {"note", c.note}};
}

Json to_json(const InjectivityProfile& p) {
  return {{"p", p.p},
          {"m", p.m},
          {"j", p.j},
          {"index", p.index},
          {"source_orders", p.source_orders},
          {"target_orders", p.target_orders},
          {"t", p.t},
          {"matrix", p.matrix},
          {"diagonal_expected", p.diagonal_expected},
          {"sources_match", p.sources_match},
          {"targets_match", p.targets_match},
          {"lower_triangular", p.lower_triangular},
          {"diagonal_matches", p.diagonal_matches},
          {"injective", p.injective}};
}

Json to_json(const BasisMonomial& b) {
  Json f = Json::array();
  for (auto [d, e] : b.factors) f.push_back({{"d", d}, {"exponent", e}});
  return {{"factors", f}, {"res_degree", b.res_degree}, {"text", b.str()}};
}

Json to_json(const ConjRing& c) {
  return {{"generator", c.generator},
          {"degrees", c.degrees},
          {"res_degrees", c.res_degrees},
          {"matches_decomposition", c.matches_decomposition}};
}

Json to_json(const ObstructionReport& r) {
  Json census = Json::array();
  for (auto& e : r.census)
    census.push_back({{"summand", e.summand.str()},
                      {"multiplicity", e.multiplicity},
                      {"source", to_string(e.source, r.p)},
                      {"target", to_string(e.target, r.p)}});
  return {{"p", r.p},
          {"r", r.r},
          {"s", r.s},
          {"bound", r.bound},
          {"alpha", r.alpha.str()},
          {"table", r.printed_table ? "printed" : "corrected"},
          {"source", to_json(r.source)},
          {"target", to_json(r.target)},
          {"verdict", to_string(r.verdict)},
          {"census", census}};
}

}  // namespace eqcoh
