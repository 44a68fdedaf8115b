#include "eqcoh/cohops.hpp"

#include <functional>
#include <map>
#include <utility>

#include "eqcoh/decomp.hpp"
#include "eqcoh/error.hpp"

namespace eqcoh {

std::string to_string(Verdict v) { return v == Verdict::LiftExcluded ? "lift-excluded" : "inconclusive"; }

namespace {

using DimPair = std::pair<int, int>;  // (underlying dim, fixed dim)

// Multiset of (dim, fixed) over s-fold sums of single-factor summands,
// keeping only sums whose fixed dim stays within `cap`.
std::map<DimPair, long long> smash_power(const std::vector<DimPair>& factor, int s, int cap) {
  std::map<DimPair, long long> acc{{{0, 0}, 1}};
  for (int t = 0; t < s; ++t) {
    std::map<DimPair, long long> next;
    for (auto& [d, c] : acc)
      for (auto& f : factor) {
        DimPair sum{d.first + f.first, d.second + f.second};
        if (sum.second > cap) continue;
        next[sum] += c;
      }
    acc = std::move(next);
  }
  return acc;
}

MackeyName classify(int p, int dim, int fixed, bool printed) {
  return printed ? mackey_modp_table(p, dim, fixed) : mackey_modp(p, dim, fixed);
}

void finish(ObstructionReport& rep, const std::map<DimPair, long long>& sums, int adim, int afixed,
            const std::function<VirtualRep(DimPair)>& rep_of) {
  rep.source.p = rep.target.p = rep.p;
  for (auto& [w, c] : sums) {
    // The summand S^W contributes pi_{W - beta} in cohomological degree beta.
    CensusEntry e;
    e.summand = rep_of(w);
    e.multiplicity = c;
    e.source = classify(rep.p, w.first - adim, w.second - afixed, rep.printed_table);
    e.target = classify(rep.p, w.first - adim - rep.r, w.second - afixed - rep.r, rep.printed_table);
    if (e.source != MackeyName::Zero) rep.source.add(e.source, static_cast<int>(c));
    if (e.target != MackeyName::Zero) rep.target.add(e.target, static_cast<int>(c));
    if (e.source != MackeyName::Zero || e.target != MackeyName::Zero) rep.census.push_back(std::move(e));
  }
  // Only the constant functor restricts nontrivially to G/e, and the
  // underlying operation is nonzero there.
  bool source_const = rep.source.count.size() == 1 && rep.source[MackeyName::Const] == 1;
  rep.verdict = source_const && rep.target[MackeyName::Const] == 0 ? Verdict::LiftExcluded : Verdict::Inconclusive;
}

}  // namespace

ObstructionReport obstruction_check(int p, int r, bool printed) {
  if (!is_prime(p) || p == 2) throw DomainError("obstruction_check needs an odd prime");
  if (r <= 0 || r % 2 != 0) throw DomainError("degree must be positive and even");
  if (r % (p - 1) != 0) throw DomainError("degree " + std::to_string(r) + " is not divisible by p - 1");
  ObstructionReport rep;
  rep.p = p;
  rep.r = r;
  rep.s = r / (p - 1);
  rep.printed_table = printed;
  rep.alpha = VirtualRep::lambda(p, 1, rep.s);

  // A nonzero contribution needs |gamma| <= 0 or fixed(gamma) < -1 in one of
  // the two degrees; either caps the number of trivial summands.
  const int adim = 2 * rep.s, afixed = 0;
  rep.bound = std::max((adim + r) / (2 * p), (r - 2) / 2);
  std::vector<DimPair> factor;
  for (int ell = 1; ell <= p * (rep.bound + 1); ++ell) {
    VirtualRep w = family_summand(Family::Regular, p, ell);
    factor.emplace_back(w.dim(), fixed_dim(w, p));
  }
  auto sums = smash_power(factor, rep.s, 2 * rep.bound);
  finish(rep, sums, adim, afixed, [p](DimPair w) {
    return VirtualRep::trivial(p, w.second) + VirtualRep::lambda(p, 1, (w.first - w.second) / 2);
  });
  return rep;
}

ObstructionReport obstruction_check_c2(int r, bool printed) {
  if (r < 0 || r % 2 != 0) throw DomainError("degree must be even and non-negative");
  ObstructionReport rep;
  rep.p = 2;
  rep.r = r;
  rep.s = r / 2;
  rep.printed_table = printed;
  rep.source.p = rep.target.p = 2;
  if (r == 0) return rep;  // identity operation lifts
  rep.alpha = rep.s * (VirtualRep::trivial(2, 1) + VirtualRep::sign(2, 1));
  rep.bound = rep.s + r;
  Decomposition dec = decompose_conj(rep.bound);
  std::vector<DimPair> factor;
  for (std::size_t i = 1; i < dec.summands.size(); ++i)
    factor.emplace_back(dec.summands[i].dim(), fixed_dim(dec.summands[i], 2));
  auto sums = smash_power(factor, rep.s, rep.bound);
  finish(rep, sums, 2 * rep.s, rep.s, [](DimPair w) {
    return VirtualRep::trivial(2, w.second) + VirtualRep::sign(2, w.first - w.second);
  });
  return rep;
}

}  // namespace eqcoh
