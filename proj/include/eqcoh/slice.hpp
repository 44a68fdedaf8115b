#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqcoh/coeff.hpp"
#include "eqcoh/reps.hpp"

namespace eqcoh {

// S^V smash HZ lies in tau_{>= level}: d * dim V^{C_d} >= level for all d | n.
bool in_tau_geq(const VirtualRep& V, int level);

enum class SliceFamily { Complex, Quaternionic };

std::string to_string(SliceFamily f);
SliceFamily slice_family_from_string(const std::string& s);

// One degree beta = k rho_H + r - res_H(summand) over H = C_m whose vanishing
// the coconnectivity half needs.
struct SliceInstance {
  int m = 1, k = 0, r = 0;
  VirtualRep degree{1};
  std::optional<VanishingRule> rule;
  bool chain_zero = false;  // no rule applies; the chain-level group was computed to be 0
};

struct SliceCertificate {
  SliceFamily family = SliceFamily::Complex;
  int n = 1, ell = 0, level = 0;
  VirtualRep summand{1};
  bool connective = false;
  bool closed_form_agrees = false;  // fixed-point count matches the q, s bookkeeping
  bool coconnective = false;
  std::vector<SliceInstance> instances;  // all instances not settled by positivity alone

  bool ok() const { return connective && closed_form_agrees && coconnective; }
};

// Summand phi_l + 2 at level 2l+2, or W_l + 4 at level 4l+4.
SliceCertificate certify_slice(SliceFamily family, int n, int ell);

}  // namespace eqcoh
