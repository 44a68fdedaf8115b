#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqcoh/poly.hpp"

namespace eqcoh {

enum class CoeffMode { Z, ModP };

std::string to_string(CoeffMode m);

// Ring for G = C_{p^m}; throws DomainError unless p is prime and m >= 1.
std::shared_ptr<const RingSpec> make_ring(int p, int m, CoeffMode mode, bool quaternionic = false);

enum class ClassKind { A, U };

// a_{lambda^j} -> (s mod p^m) a_k and u_{lambda^j} -> u_k for j = s p^k; j = 0 mod p^m
// gives a -> 0, u -> 1.
Poly normalize_class(const std::shared_ptr<const RingSpec>& ring, ClassKind kind, long long j);

// q_0^* of the generator at phi_d, from the closed formulas.
Poly q0_closed(const std::shared_ptr<const RingSpec>& ring, int d);

// Term of the restriction calculus: Delta^{V_{I,k}}_{omega_I} or
// Omega^{V_{I,k}}_{V_{I,ell}}, with a coefficient.
struct DeltaOmegaTerm {
  enum class Kind { Delta, Omega };
  Kind kind = Kind::Delta;
  std::vector<int> I;
  int ell = 0;
  Poly coeff;
};

// The same class computed by removing lambda^1 .. lambda^{d-1} and then
// lambda^d one at a time with the tau rewrite rules.
Poly q0_via_tau(const std::shared_ptr<const RingSpec>& ring, int d);

// Q_0 on polynomials in the generators alpha_{p^j}: substitutes q0_closed(p^j).
Poly q0_apply(const Poly& f);

struct SeriesTerms {
  int r = 0;
  Poly B;                          // B_r
  std::vector<Poly> T_images;      // T_0 .. T_r as images in R[x]
  std::vector<Poly> A_images;      // A_0 .. A_{r-1} in R[x]
  std::vector<Poly> T_symbolic;    // T_j in the generators (if requested)
  std::vector<Poly> A_symbolic;    // calligraphic A_j in the generators (if requested)
  bool images_match_closed = false;  // T_j image equals B_j (x u_j + a_j)
  bool factorization_holds = false;  // B_r = prod A_i
  bool symbolic_maps_to_images = false;
};

// Mod p only. With `symbolic` the generator-side series are also expanded and
// pushed through Q_0.
SeriesTerms series_terms(int p, int m, int r, bool symbolic = false);

enum class RelationKind { Rho, Mu, Lewis, Lemma };

std::string to_string(RelationKind k);
RelationKind relation_from_string(const std::string& s);

struct RelationCheck {
  RelationKind kind = RelationKind::Rho;
  int p = 2, m = 1, r = 1;
  bool holds = false;
  std::string relation;  // the relation itself, in the generators
  std::string residual;  // its image; "0" when it holds
  std::string note;
};

RelationCheck verify_relation(RelationKind kind, int p, int m, int r);

struct InjectivityProfile {
  int p = 2, m = 1, j = 1;
  // Rows and columns indexed by i = p^j, p^j - 1, ..., 0.
  std::vector<int> index;
  std::vector<long long> source_orders;  // 0 = Z
  std::vector<long long> target_orders;  // p^{t_{j,i}}, 0 = Z
  std::vector<int> t;                    // t_{j,i} from the valuation count
  std::vector<std::vector<long long>> matrix;  // [row][col] residues
  std::vector<long long> diagonal_expected;    // 1, then p^{t - m + j - 1}
  bool sources_match = false;   // group orders agree with the coefficient calculator
  bool targets_match = false;
  bool lower_triangular = false;
  bool diagonal_matches = false;
  bool injective = false;
};

InjectivityProfile injectivity_profile(int p, int m, int j);

struct BasisMonomial {
  std::vector<std::pair<int, int>> factors;  // (d, exponent), d a power of p, largest first
  int res_degree = 0;                         // power of x under res_e
  std::string str() const;
};

BasisMonomial basis_monomial(int k, int i, int p, int m);

struct ConjRing {
  std::string generator = "eps_{1+s}";
  std::vector<std::string> degrees;  // degree of eps^k, k = 0..n_cap
  std::vector<int> res_degrees;      // res_e(eps^k) = x^k
  bool matches_decomposition = false;
};

ConjRing conj_ring(int n_cap);

}  // namespace eqcoh
