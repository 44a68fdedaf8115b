#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqcoh/reps.hpp"

namespace eqcoh {

enum class VanishingRule {
  AllFixedPositive,
  AllFixedNegative,
  EvenPositiveNonNegFixed,
  OddWithCondition,
  LambdaSum,   // alpha is a nonzero sum of lambda^i with i != 0
  SignSphere,  // alpha = sigma over C_2
};

std::string to_string(VanishingRule r);

// First rule certifying that the G/G homotopy of HZ in degree alpha vanishes.
std::optional<VanishingRule> vanishing_reason(const VirtualRep& alpha);

// Monomial in a_{lambda^d}, u_{lambda^d} for proper divisors d of n.
struct Monomial {
  std::map<int, int> a;
  std::map<int, int> u;

  bool is_unit_free() const { return a.empty(); }
  std::string str() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Letters sorted by divisor with a before u, compared lexicographically.
bool lex_less(const Monomial& x, const Monomial& y);

// Upper bound for the additive order of a monomial: n / lcm of its a-divisors.
long long monomial_order_bound(int n, const Monomial& m);

struct CoeffGroup {
  enum class Kind { Zero, FreeZ, Cyclic };
  Kind kind = Kind::Zero;
  long long order = 1;  // for Cyclic

  std::vector<Monomial> monomials;
  std::vector<long long> residues;  // image of each monomial, relative to the generator
  std::vector<std::pair<long long, Monomial>> generator;

  bool generator_is_monomial() const { return generator.size() == 1 && generator[0].first == 1; }
  // Residue of a monomial of this degree (throws if it is not one).
  long long residue(const Monomial& m) const;
  std::string str() const;
  std::string generator_str() const;
};

// Homotopy of HZ at G/G in degree alpha = l - sum b_d lambda^d (b_d >= 0).
// Exponents are first replaced by gcd(i, n). Throws SectorError otherwise.
CoeffGroup pi_star_e(const VirtualRep& alpha);

// Same group computed from the full presentation (orders plus cross relations)
// via Smith form, never taking the prime power shortcut.
CoeffGroup pi_star_e_smith(const VirtualRep& alpha);

// True when alpha lies in the sector pi_star_e covers (after normalization).
bool in_star_e(const VirtualRep& alpha);

// |alpha| = 0 and every fixed dimension is even and nonnegative: the group is Z
// generated by a u-class.
bool is_u_degree(const VirtualRep& alpha);

// Vanishing rules, then the u-degree rule, then pi_star_e.
CoeffGroup coeff_group(const VirtualRep& alpha);

// ---------------------------------------------------------------------------
// Mackey functor valued homotopy of HZ/p for G = C_p.

enum class MackeyName { Zero, Const, Dual, Point, Lambda };

std::string to_string(MackeyName m, int p);

// The two case tables exactly as commonly printed. For odd p the parity
// conditions on the <Z/p> rows are too strict: 1 - lambda already carries
// Tor(pi_{-lambda} HZ, Z/p) = Z/p at G/G.
MackeyName mackey_modp_table(const VirtualRep& alpha);
MackeyName mackey_modp_table(int p, int dim, int fixed);

// Corrected table, checked against the chain-level computation: the C_2
// pattern holds for every p, with <Lambda> only reachable when p = 2.
MackeyName mackey_modp(const VirtualRep& alpha);
MackeyName mackey_modp(int p, int dim, int fixed);

struct MackeySum {
  int p = 2;
  std::map<MackeyName, int> count;

  void add(MackeyName m, int k = 1);
  int operator[](MackeyName m) const;
  bool is_zero() const { return count.empty(); }
  std::string str() const;
  friend bool operator==(const MackeySum&, const MackeySum&) = default;
};

// ---------------------------------------------------------------------------

struct URewrite {
  std::string lhs;
  std::string rhs;
  long long lhs_order;  // order of the class being multiplied
  long long rhs_order;  // order of the product as computed in its degree
  bool consistent;
};

// Rewrite rules for u_{lambda^k - lambda^{dk}} used by ring normalization,
// checked against orders computed by pi_star_e.
std::vector<URewrite> u_a_relation_check(int n, int k, int d);

}  // namespace eqcoh
