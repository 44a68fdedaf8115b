#pragma once

#include <vector>

namespace eqcoh {

using IntMatrix = std::vector<std::vector<long long>>;

// Smith form of a relation matrix (rows are relations among `cols` generators).
// The quotient Z^cols / rowspace is  (+)_c Z/invariants[c]  and generator j maps
// to coordinates  V[j][c]  (a zero invariant means a free summand).
struct SmithForm {
  std::vector<long long> invariants;  // size cols, nonnegative, each divides the next nonzero one
  IntMatrix V;                        // cols x cols, unimodular
};

SmithForm smith_form(IntMatrix rel, int cols);

}  // namespace eqcoh
