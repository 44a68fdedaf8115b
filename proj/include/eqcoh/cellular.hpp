#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqcoh/coeff.hpp"
#include "eqcoh/reps.hpp"

namespace eqcoh {

// Chain complex of permutation modules Z[C_n / C_k] modelling HZ smashed with a
// (virtual) representation sphere. Maps Z[G/C_a] -> Z[G/C_b] are stored as the
// image of the base coset: a C_a-invariant vector of length n/b (empty = zero).
struct PermComplex {
  int n = 1;
  std::map<int, std::vector<int>> cells;  // degree -> subgroup orders
  std::map<int, std::vector<std::vector<std::vector<long long>>>> d;  // d[i][target][source]

  int size() const;
};

// Model of HZ smash S^beta, built by tensoring cell structures of the
// irreducible summands and cancelling invertible components.
PermComplex sphere_chains(const VirtualRep& beta);

struct AbelianGroup {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_cyclic() const { return free_rank + static_cast<int>(torsion.size()) <= 1; }
  std::string str() const;
};

// G/G homotopy of HZ in degree alpha, from the chain model of S^{-alpha}.
AbelianGroup cellular_pi(const VirtualRep& alpha);

// Mod p Mackey functor of C_p in degree alpha, read off from the dimensions
// at both levels and whether restriction and transfer vanish.
struct CellularMackey {
  int top = 0, bottom = 0;  // F_p dimensions at G/G and G/e
  bool res_nonzero = false, tr_nonzero = false;
  std::optional<MackeyName> name;  // nullopt when not one of the tabulated names
};

CellularMackey cellular_mackey_modp(const VirtualRep& alpha);

}  // namespace eqcoh
