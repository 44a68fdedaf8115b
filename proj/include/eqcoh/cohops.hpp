#pragma once

#include <string>
#include <vector>

#include "eqcoh/coeff.hpp"
#include "eqcoh/reps.hpp"

namespace eqcoh {

enum class Verdict { LiftExcluded, Inconclusive };

std::string to_string(Verdict v);

// One summand S^W of the smash power, with its multiplicity and the Mackey
// functors it contributes in the source and target degree.
struct CensusEntry {
  VirtualRep summand{1};
  long long multiplicity = 0;
  MackeyName source = MackeyName::Zero;
  MackeyName target = MackeyName::Zero;
};

struct ObstructionReport {
  int p = 2;
  int r = 0;
  int s = 0;             // number of smash factors
  int bound = 0;         // cap on the sum of the filtration indices
  VirtualRep alpha{1};   // source degree; the target is alpha + r
  bool printed_table = false;
  MackeySum source;
  MackeySum target;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CensusEntry> census;  // entries with a nonzero contribution
};

// X = P(U)^{s} over C_p with s = r/(p-1), alpha = s lambda. `printed` reads
// the summands off the table as printed instead of the corrected one.
ObstructionReport obstruction_check(int p, int r, bool printed = false);

// X = (CP^infty with conjugation)^{s} with s = r/2, alpha = s rho.
ObstructionReport obstruction_check_c2(int r, bool printed = false);

}  // namespace eqcoh
