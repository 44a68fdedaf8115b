#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqcoh/coeff.hpp"
#include "eqcoh/reps.hpp"

namespace eqcoh {

// cells[i] = lambda^{-e_{i+1}} (x) (lambda^{e_1} + ... + lambda^{e_i}), cells[0] = 0.
std::vector<VirtualRep> cells_from_lines(int n, const std::vector<int>& lines);

// Indices i, j into the cell list and subgroups C_h <= C_k where
// dim W^h < dim V^h but |W^k| > |V^k|.
struct FreenessWitness {
  int i, j, h, k;
};

std::optional<FreenessWitness> check_free_hypothesis(const std::vector<VirtualRep>& cells);

struct Obstruction {
  int upper = 0, lower = 0;  // cell indices
  VirtualRep alpha{1};       // degree of the connecting map's group
  std::optional<VanishingRule> rule;
};

// Degree upper - lower - 1 of the group holding the attaching component,
// and the rule (if any) showing it is zero.
Obstruction connecting_obstruction(const VirtualRep& upper, const VirtualRep& lower);

enum class Family { Cp, Regular, Quaternionic, Conjugation };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct Decomposition {
  Family family = Family::Cp;
  int n = 1;
  int twist = 0;                    // Cp only: relabeling applied before sorting
  std::vector<int> lines;           // line order when built from lines
  std::vector<VirtualRep> cells;    // literal cells of the filtration
  std::vector<VirtualRep> summands; // wedge summands of HZ smash X_+
  std::optional<FreenessWitness> freeness_failure;
  std::vector<Obstruction> obstructions;  // every pair lower < upper

  bool splits() const;
};

// V = sum mults[i] lambda^i over C_p; summands are normalized (lambda^i -> lambda).
Decomposition decompose_cp(int p, std::vector<int> mults);
// P(m rho) over C_n: summands phi_0 .. phi_{nm-1}.
Decomposition decompose_regular(int n, int m);
// Quaternionic P_H(m rho) over C_n: summands W_0 .. W_{mn-1}.
Decomposition decompose_quat(int n, int m);
// CP^N with complex conjugation: summands i + i sigma, i = 0..N.
Decomposition decompose_conj(int N);

// ModP reads summands off the corrected mod p table; ModPPrinted uses the
// table as printed, for comparison.
enum class Mode { Z, ModP, ModPPrinted };

struct CohomologyAnswer {
  Mode mode = Mode::Z;
  int summands_used = 0;
  std::vector<CoeffGroup> groups;  // Z mode: nonzero summand groups
  MackeySum mackey;                // mod p mode
  std::string str() const;
};

// Cohomology of the space in degree alpha, summand by summand: the summand
// S^W contributes the homotopy of HZ (or HZ/p) in degree W - alpha.
CohomologyAnswer cohomology_query(const Decomposition& dec, const VirtualRep& alpha, Mode mode);

// Same for the infinite spaces P(U), P_H(U), CP^infty with conjugation; the
// summand list is cut where every later summand is provably zero.
CohomologyAnswer cohomology_query_infinite(Family family, int n, const VirtualRep& alpha, Mode mode);

VirtualRep family_summand(Family family, int n, int i);

}  // namespace eqcoh
