#include "eqcoh/decomp.hpp"

#include <algorithm>
#include <sstream>

#include "eqcoh/error.hpp"

namespace eqcoh {

std::vector<VirtualRep> cells_from_lines(int n, const std::vector<int>& lines) {
  std::vector<VirtualRep> cells;
  VirtualRep partial(n);
  for (int e : lines) {
    cells.push_back(twist(partial, e));
    partial += VirtualRep::lambda(n, e);
  }
  return cells;
}

std::optional<FreenessWitness> check_free_hypothesis(const std::vector<VirtualRep>& cells) {
  if (cells.empty()) return std::nullopt;
  const int n = cells.front().order();
  const auto divs = divisors(n);
  std::vector<std::vector<int>> f(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int d : divs) f[c].push_back(fixed_dim(cells[c], d));
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      for (std::size_t h = 0; h < divs.size(); ++h) {
        if (f[i][h] >= f[j][h]) continue;
        for (std::size_t k = 0; k < divs.size(); ++k)
          if (divs[k] % divs[h] == 0 && f[i][k] > f[j][k])
            return FreenessWitness{static_cast<int>(i), static_cast<int>(j), divs[h], divs[k]};
      }
  return std::nullopt;
}

Obstruction connecting_obstruction(const VirtualRep& upper, const VirtualRep& lower) {
  Obstruction o;
  o.alpha = upper - lower - VirtualRep::trivial(upper.order(), 1);
  o.rule = vanishing_reason(o.alpha);
  return o;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::Cp: return "cp";
    case Family::Regular: return "regular";
    case Family::Quaternionic: return "quat";
    case Family::Conjugation: return "conj";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "cp") return Family::Cp;
  if (s == "regular" || s == "complex") return Family::Regular;
  if (s == "quat") return Family::Quaternionic;
  if (s == "conj") return Family::Conjugation;
  throw DomainError("unknown family '" + s + "'");
}

bool Decomposition::splits() const {
  if (freeness_failure) return false;
  return std::all_of(obstructions.begin(), obstructions.end(), [](const Obstruction& o) { return o.rule.has_value(); });
}

namespace {

void finish(Decomposition& d) {
  d.freeness_failure = check_free_hypothesis(d.cells);
  for (std::size_t k = 0; k < d.cells.size(); ++k)
    for (std::size_t i = 0; i < k; ++i) {
      Obstruction o = connecting_obstruction(d.cells[k], d.cells[i]);
      o.upper = static_cast<int>(k);
      o.lower = static_cast<int>(i);
      d.obstructions.push_back(std::move(o));
    }
}

}  // namespace

Decomposition decompose_cp(int p, std::vector<int> mults) {
  if (!is_prime(p)) throw DomainError("decompose_cp needs a prime, got " + std::to_string(p));
  if (mults.empty() || static_cast<int>(mults.size()) > p)
    throw DomainError("expected between 1 and p multiplicities");
  mults.resize(p, 0);
  int dim = 0;
  for (int m : mults) {
    if (m < 0) throw DomainError("multiplicities must be nonnegative");
    dim += m;
  }
  if (dim == 0) throw DomainError("representation must be nonzero");

  Decomposition d;
  d.family = Family::Cp;
  d.n = p;
  d.twist = static_cast<int>(std::max_element(mults.begin(), mults.end()) - mults.begin());
  std::vector<int> nt(p);
  for (int i = 0; i < p; ++i) nt[i] = mults[(i + d.twist) % p];

  // Blocks A_b = lines i with nt[i] >= b, ascending.
  const int top = nt[0];
  int pos = 0;
  for (int b = 1; b <= top; ++b) {
    int a_b = 0;
    for (int i = 0; i < p; ++i)
      if (nt[i] >= b) {
        d.lines.push_back(i);
        ++a_b;
      }
    for (int t = 0; t < a_b; ++t, ++pos)
      d.summands.push_back(VirtualRep::lambda(p, 1, pos - (b - 1)) + VirtualRep::trivial(p, 2 * (b - 1)));
  }
  d.cells = cells_from_lines(p, d.lines);
  for (std::size_t i = 0; i < d.cells.size(); ++i)
    if (hz_normalize(d.cells[i]) != d.summands[i])
      throw std::logic_error("cell " + std::to_string(i) + " disagrees with the block formula");
  finish(d);
  return d;
}

Decomposition decompose_regular(int n, int m) {
  if (n < 1 || m < 1) throw DomainError("decompose_regular needs n, m >= 1");
  Decomposition d;
  d.family = Family::Regular;
  d.n = n;
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < n; ++i) d.lines.push_back(i);
  d.cells = cells_from_lines(n, d.lines);
  for (int k = 0; k < n * m; ++k) {
    d.summands.push_back(phi(k, n));
    if (d.cells[k] != d.summands[k]) throw std::logic_error("cell " + std::to_string(k) + " is not phi_k");
  }
  finish(d);
  return d;
}

Decomposition decompose_quat(int n, int m) {
  if (n < 1 || m < 1) throw DomainError("decompose_quat needs n, m >= 1");
  Decomposition d;
  d.family = Family::Quaternionic;
  d.n = n;
  for (int k = 0; k < n * m; ++k) d.cells.push_back(quat_w(k, n));
  d.summands = d.cells;
  finish(d);
  return d;
}

Decomposition decompose_conj(int N) {
  if (N < 0) throw DomainError("decompose_conj needs N >= 0");
  Decomposition d;
  d.family = Family::Conjugation;
  d.n = 2;
  for (int i = 0; i <= N; ++i) d.cells.push_back(family_summand(Family::Conjugation, 2, i));
  d.summands = d.cells;
  finish(d);
  return d;
}

VirtualRep family_summand(Family family, int n, int i) {
  switch (family) {
    case Family::Regular: return phi(i, n);
    case Family::Quaternionic: return quat_w(i, n);
    case Family::Conjugation:
      if (n != 2) throw DomainError("conjugation family lives over C_2");
      return VirtualRep::trivial(2, i) + VirtualRep::sign(2, i);
    case Family::Cp: break;
  }
  throw DomainError("the cp family has no canonical infinite summand list");
}

namespace {

void accumulate(CohomologyAnswer& ans, const VirtualRep& w, const VirtualRep& alpha) {
  VirtualRep gamma = w - alpha;
  ++ans.summands_used;
  if (ans.mode == Mode::ModP) {
    ans.mackey.add(mackey_modp(gamma));
  } else if (ans.mode == Mode::ModPPrinted) {
    ans.mackey.add(mackey_modp_table(gamma));
  } else {
    CoeffGroup g = coeff_group(gamma);
    if (g.kind != CoeffGroup::Kind::Zero) ans.groups.push_back(std::move(g));
  }
}

CohomologyAnswer start(int n, Mode mode) {
  CohomologyAnswer a;
  a.mode = mode;
  if (mode != Mode::Z && !is_prime(n)) throw DomainError("mod p mode needs a group of prime order");
  a.mackey.p = n;
  return a;
}

}  // namespace

CohomologyAnswer cohomology_query(const Decomposition& dec, const VirtualRep& alpha, Mode mode) {
  if (alpha.order() != dec.n) throw DomainError("degree and space live over different groups");
  CohomologyAnswer ans = start(dec.n, mode);
  for (const auto& w : dec.summands) accumulate(ans, w, alpha);
  return ans;
}

CohomologyAnswer cohomology_query_infinite(Family family, int n, const VirtualRep& alpha, Mode mode) {
  if (alpha.order() != n) throw DomainError("degree and space live over different groups");
  CohomologyAnswer ans = start(n, mode);
  // Fixed dimensions of the summands never decrease, so once W_i - alpha has
  // all fixed dimensions positive, every later summand contributes zero.
  const int limit = 4 * (std::abs(alpha.dim()) + 8) * n;
  for (int i = 0; i < limit; ++i) {
    VirtualRep w = family_summand(family, n, i);
    if (vanishing_reason(w - alpha) == VanishingRule::AllFixedPositive) return ans;
    accumulate(ans, w, alpha);
  }
  throw std::logic_error("summand search did not terminate");
}

std::string CohomologyAnswer::str() const {
  if (mode != Mode::Z) return mackey.str();
  if (groups.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) os << " + ";
    const auto& g = groups[i];
    os << (g.kind == CoeffGroup::Kind::FreeZ ? std::string("Z") : "Z/" + std::to_string(g.order));
  }
  return os.str();
}

}  // namespace eqcoh
