#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ranges.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eqcoh/cellular.hpp"
#include "eqcoh/coeff.hpp"
#include "eqcoh/cohops.hpp"
#include "eqcoh/decomp.hpp"
#include "eqcoh/degree.hpp"
#include "eqcoh/error.hpp"
#include "eqcoh/ringstr.hpp"
#include "eqcoh/serialize.hpp"
#include "eqcoh/slice.hpp"

using namespace eqcoh;

namespace {

struct Options {
  int n = 0, p = 0, m = 0;
  std::string degree, mults, family, mode = "z", query;
  bool json = false, printed = false, cellular = false, infinite = false;
  // slice
  int ell = -1, max_ell = -1;
  // ring
  std::string verify;
  int r = -1, q0 = -1, tau = -1, series = -1, injectivity = -1, conj = -1;
  std::string basis;
  bool symbolic = false;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    fmt::print("{}\n", j.dump(2));
  else
    fmt::print("{}\n", text);
}

int group_order_n(const Options& o) {
  if (o.n > 0) return o.n;
  if (o.p > 0) return o.m > 0 ? static_cast<int>(ipow(o.p, o.m)) : o.p;
  throw DomainError("give the group order with --n (or --p and --m)");
}

// --m is the projective-space size here, not an exponent.
int plain_n(const Options& o) {
  int n = o.n > 0 ? o.n : o.p;
  if (n <= 0) throw DomainError("give the group order with --n");
  return n;
}

std::vector<int> parse_csv(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in list", static_cast<std::size_t>(ss.tellg()));
    }
  }
  return out;
}

Mode parse_mode(const std::string& s) {
  if (s == "z") return Mode::Z;
  if (s == "modp") return Mode::ModP;
  if (s == "modp-printed") return Mode::ModPPrinted;
  throw DomainError("unknown mode '" + s + "' (expected z, modp or modp-printed)");
}

void run_coeff(const Options& o) {
  const int n = group_order_n(o);
  VirtualRep a = parse_degree(o.degree, n);
  Json j = {{"degree", to_json(a)}, {"vanishing", nullptr}};
  std::string text;
  if (auto rule = vanishing_reason(a)) j["vanishing"] = to_string(*rule);
  if (o.mode == "z") {
    CoeffGroup g = coeff_group(a);
    j["group"] = to_json(g);
    text = g.str();
  } else {
    Mode mode = parse_mode(o.mode);
    if (!is_prime(n)) throw DomainError("mod p coefficients need a group of prime order");
    MackeyName name = mode == Mode::ModPPrinted ? mackey_modp_table(a) : mackey_modp(a);
    j["mackey"] = to_string(name, n);
    text = to_string(name, n);
  }
  if (o.cellular) {
    if (o.mode == "z") {
      AbelianGroup g = cellular_pi(a);
      j["cellular"] = to_json(g);
      text += fmt::format("\nchain level: {}", g.str());
    } else {
      CellularMackey c = cellular_mackey_modp(a);
      std::string name = c.name ? to_string(*c.name, n) : "untabulated";
      j["cellular"] = {{"top", c.top}, {"bottom", c.bottom}, {"res_nonzero", c.res_nonzero},
                       {"tr_nonzero", c.tr_nonzero}, {"name", name}};
      text += fmt::format("\nchain level: {} (G/G rank {}, G/e rank {})", name, c.top, c.bottom);
    }
  }
  emit(o, j, text);
}

void run_mackey(const Options& o) {
  if (o.p <= 0) throw DomainError("mackey needs --p");
  VirtualRep a = parse_degree(o.degree, o.p);
  MackeyName corrected = mackey_modp(a), printed = mackey_modp_table(a);
  MackeyName shown = o.printed ? printed : corrected;
  Json j = {{"degree", to_json(a)},
            {"dim", a.dim()},
            {"fixed", fixed_dim(a, o.p)},
            {"mackey", to_string(shown, o.p)},
            {"table", o.printed ? "printed" : "corrected"},
            {"tables_agree", corrected == printed}};
  std::string text = to_string(shown, o.p);
  if (corrected != printed)
    text += fmt::format("  (printed table: {}, corrected: {})", to_string(printed, o.p), to_string(corrected, o.p));
  if (o.cellular) {
    CellularMackey c = cellular_mackey_modp(a);
    std::string name = c.name ? to_string(*c.name, o.p) : "untabulated";
    j["cellular"] = name;
    text += "\nchain level: " + name;
  }
  emit(o, j, text);
}

void run_decompose(const Options& o) {
  if (o.family.empty()) throw DomainError("decompose needs --family");
  Family fam = family_from_string(o.family);
  Mode mode = parse_mode(o.mode);

  if (o.infinite) {
    if (fam == Family::Cp) throw DomainError("--infinite applies to regular, quat and conj");
    const int n = fam == Family::Conjugation ? 2 : group_order_n(o);
    if (o.query.empty()) throw DomainError("--infinite needs --query");
    VirtualRep a = parse_degree(o.query, n);
    CohomologyAnswer ans = cohomology_query_infinite(fam, n, a, mode);
    emit(o, {{"family", to_string(fam)}, {"n", n}, {"query", to_json(a)}, {"answer", to_json(ans)}}, ans.str());
    return;
  }

  Decomposition dec;
  switch (fam) {
    case Family::Cp:
      if (o.p <= 0 || o.mults.empty()) throw DomainError("family cp needs --p and --mults");
      dec = decompose_cp(o.p, parse_csv(o.mults));
      break;
    case Family::Regular:
      if (o.m <= 0) throw DomainError("family regular needs --n and --m");
      dec = decompose_regular(plain_n(o), o.m);
      break;
    case Family::Quaternionic:
      if (o.m <= 0) throw DomainError("family quat needs --n and --m");
      dec = decompose_quat(plain_n(o), o.m);
      break;
    case Family::Conjugation:
      if (o.m < 0) throw DomainError("family conj needs --m");
      dec = decompose_conj(o.m);
      break;
  }
  Json j = {{"decomposition", to_json(dec)}};
  std::string text;
  for (auto& s : dec.summands) text += (text.empty() ? "" : "\n") + s.str();
  if (!dec.splits()) text += "\n(warning: splitting not certified)";
  if (!o.query.empty()) {
    VirtualRep a = parse_degree(o.query, dec.n);
    CohomologyAnswer ans = cohomology_query(dec, a, mode);
    j["query"] = to_json(a);
    j["answer"] = to_json(ans);
    text = ans.str();
  }
  emit(o, j, text);
}

void run_slice(const Options& o) {
  SliceFamily fam = slice_family_from_string(o.family.empty() ? "complex" : o.family);
  const int n = group_order_n(o);
  int lo = o.ell, hi = o.ell;
  if (o.max_ell >= 0) {
    lo = 0;
    hi = o.max_ell;
  }
  if (lo < 0) throw DomainError("slice needs --ell or --max-ell");
  Json list = Json::array();
  std::string text;
  for (int ell = lo; ell <= hi; ++ell) {
    SliceCertificate c = certify_slice(fam, n, ell);
    list.push_back(to_json(c));
    text += fmt::format("{}ell={} summand {} level {}: {}", text.empty() ? "" : "\n", ell, c.summand.str(), c.level,
                        c.ok() ? "slice" : "NOT certified");
    if (!c.ok())
      for (auto& i : c.instances)
        if (!i.rule && !i.chain_zero) text += fmt::format("\n  nonzero at m={} degree {}", i.m, i.degree.str());
  }
  emit(o, list.size() == 1 ? list[0] : list, text);
}

void run_ring(const Options& o) {
  if (o.p <= 0 || o.m <= 0) throw DomainError("ring needs --p and --m");
  const CoeffMode cm = o.mode == "z" ? CoeffMode::Z : CoeffMode::ModP;
  if (o.mode != "z" && o.mode != "modp") throw DomainError("ring modes are z and modp");
  Json j = Json::object();
  std::vector<std::string> lines;
  bool acted = false;
  if (!o.verify.empty()) {
    acted = true;
    RelationCheck c = verify_relation(relation_from_string(o.verify), o.p, o.m, o.r < 0 ? 1 : o.r);
    j["relation"] = to_json(c);
    lines.push_back(c.holds ? "OK (residual 0)" : "FAILED (residual " + c.residual + ")");
  }
  if (o.q0 >= 0) {
    acted = true;
    Poly q = q0_closed(make_ring(o.p, o.m, cm), o.q0);
    j["q0"] = to_json(q);
    lines.push_back(q.str());
  }
  if (o.tau >= 0) {
    acted = true;
    auto ring = make_ring(o.p, o.m, cm);
    Poly t = q0_via_tau(ring, o.tau);
    bool same = t == q0_closed(ring, o.tau);
    j["tau"] = to_json(t);
    j["tau_matches_closed"] = same;
    lines.push_back(t.str() + (same ? "  (matches closed form)" : "  (DIFFERS from closed form)"));
  }
  if (o.series >= 0) {
    acted = true;
    SeriesTerms s = series_terms(o.p, o.m, o.series, o.symbolic);
    j["series"] = to_json(s);
    lines.push_back(fmt::format("B_{} = {}\nfactorization {}", o.series, s.B.str(),
                                s.factorization_holds ? "holds" : "FAILS"));
  }
  if (o.injectivity >= 0) {
    acted = true;
    InjectivityProfile p = injectivity_profile(o.p, o.m, o.injectivity);
    j["injectivity"] = to_json(p);
    std::string rows;
    for (auto& row : p.matrix) rows += fmt::format("\n  {}", fmt::join(row, " "));
    lines.push_back(fmt::format("index {}{}\nlower triangular: {}, diagonal as predicted: {}", fmt::join(p.index, " "),
                                rows, p.lower_triangular, p.diagonal_matches));
  }
  if (!o.basis.empty()) {
    acted = true;
    auto ki = parse_csv(o.basis);
    if (ki.size() != 2) throw DomainError("--basis takes k,i");
    BasisMonomial b = basis_monomial(ki[0], ki[1], o.p, o.m);
    j["basis"] = to_json(b);
    lines.push_back(fmt::format("{}  (res_e = x^{})", b.str(), b.res_degree));
  }
  if (o.conj >= 0) {
    acted = true;
    ConjRing c = conj_ring(o.conj);
    j["conj"] = to_json(c);
    lines.push_back(fmt::format("{}: degrees {}", c.generator, fmt::join(c.degrees, ", ")));
  }
  if (!acted) throw DomainError("ring needs one of --verify, --q0, --tau, --series, --injectivity, --basis, --conj");
  std::string text;
  for (auto& l : lines) text += (text.empty() ? "" : "\n") + l;
  emit(o, j, text);
}

void run_ops(const Options& o) {
  if (o.p <= 0 || o.r < 0) throw DomainError("ops needs --p and --r");
  ObstructionReport rep = o.p == 2 ? obstruction_check_c2(o.r, o.printed) : obstruction_check(o.p, o.r, o.printed);
  emit(o, to_json(rep),
       fmt::format("source {} -> target {}: {}", rep.source.str(), rep.target.str(), to_string(rep.verdict)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RO(C_n)-graded Bredon cohomology of projective spaces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--n", o.n, "group order");
    s->add_option("--p", o.p, "prime");
    s->add_option("--m", o.m, "exponent, or projective-space size");
    s->add_flag("--json", o.json, "JSON output");
  };

  auto* coeff = app.add_subcommand("coeff", "homotopy of HZ at G/G in a degree");
  common(coeff);
  coeff->add_option("--degree", o.degree)->required();
  coeff->add_option("--mode", o.mode, "z | modp | modp-printed");
  coeff->add_flag("--cellular", o.cellular, "also compute from the chain model");

  auto* mackey = app.add_subcommand("mackey", "mod p Mackey functor over C_p");
  common(mackey);
  mackey->add_option("--degree", o.degree)->required();
  mackey->add_flag("--printed", o.printed, "use the table as printed");
  mackey->add_flag("--cellular", o.cellular, "also compute from the chain model");

  auto* decompose = app.add_subcommand("decompose", "wedge decomposition of HZ smash a projective space");
  common(decompose);
  decompose->add_option("--family", o.family, "cp | regular (complex) | quat | conj")->required();
  decompose->add_option("--mults", o.mults, "multiplicities of lambda^0..lambda^{p-1}");
  decompose->add_option("--query", o.query, "cohomology degree");
  decompose->add_option("--mode", o.mode, "z | modp | modp-printed");
  decompose->add_flag("--infinite", o.infinite, "use the infinite projective space");

  auto* slice = app.add_subcommand("slice", "slice certificate for a wedge summand");
  common(slice);
  slice->add_option("--family", o.family, "complex | quat");
  slice->add_option("--ell", o.ell);
  slice->add_option("--max-ell", o.max_ell, "certify every ell up to this bound");

  auto* ring = app.add_subcommand("ring", "ring structure computations over C_{p^m}");
  common(ring);
  ring->add_option("--mode", o.mode, "z | modp");
  ring->add_option("--verify", o.verify, "rho | mu | lewis | lemma");
  ring->add_option("--r", o.r, "relation index for --verify");
  ring->add_option("--q0", o.q0, "closed image of the generator at phi_d");
  ring->add_option("--tau", o.tau, "same via the restriction calculus");
  ring->add_option("--series", o.series, "series terms up to r (mod p)");
  ring->add_flag("--symbolic", o.symbolic, "also expand the series in the generators");
  ring->add_option("--injectivity", o.injectivity, "matrix of q0 at zeta_{p^j}");
  ring->add_option("--basis", o.basis, "k,i");
  ring->add_option("--conj", o.conj, "ring of CP^N with conjugation");

  auto* ops = app.add_subcommand("ops", "obstruction to lifting a cohomology operation");
  common(ops);
  ops->add_option("--r", o.r, "degree of the operation")->required();
  ops->add_flag("--printed", o.printed, "use the mod p table as printed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*coeff) run_coeff(o);
    else if (*mackey) run_mackey(o);
    else if (*decompose) run_decompose(o);
    else if (*slice) run_slice(o);
    else if (*ring) run_ring(o);
    else if (*ops) run_ops(o);
  } catch (const ParseError& e) {
    fmt::print(stderr, "parse error: {}\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  } catch (const SectorError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  } catch (const std::overflow_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
