#pragma once

#include <map>
#include <string>
#include <vector>

namespace eqcoh {

std::vector<int> divisors(int n);
int mod(long long a, int n);
int pvaluation(long long x, int p);
long long ipow(long long b, int e);
bool is_prime(int p);

// Virtual real representation of C_n:
//   trivial + sum_i mult_i * lambda^i (i in 1..n-1) + sigma * sign.
// lambda^0 is folded into trivial as +2. The sign rep only exists for even n.
class VirtualRep {
 public:
  explicit VirtualRep(int n);

  static VirtualRep trivial(int n, int dim);
  static VirtualRep lambda(int n, int i, int mult = 1);
  static VirtualRep sign(int n, int mult = 1);
  static VirtualRep real_regular(int n);

  int order() const { return n_; }
  int trivial_dim() const { return trivial_; }
  int sigma() const { return sigma_; }
  int lambda_mult(int i) const;
  const std::map<int, int>& lambdas() const { return lambda_; }

  int dim() const;
  bool is_zero() const;
  bool is_actual() const;

  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep operator-() const;
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(int k, const VirtualRep& a);
  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

  // Canonical text form in the degree grammar, e.g. "2 - L2 - L3".
  std::string str() const;

 private:
  void add_lambda(int i, int mult);

  int n_;
  int trivial_ = 0;
  int sigma_ = 0;
  std::map<int, int> lambda_;
};

// Real dimension of the C_d-fixed subspace; d must divide n.
int fixed_dim(const VirtualRep& a, int d);

// lambda^{-j} tensor a. Requires sigma == 0 and an even trivial part.
VirtualRep twist(const VirtualRep& a, int j);

VirtualRep phi(int ell, int n);
VirtualRep quat_w(int k, int n);

// Restriction to the subgroup C_m of C_n.
VirtualRep restrict_to(const VirtualRep& a, int m);

// Replace every lambda^i by lambda^{gcd(i,n)}; these give equivalent
// suspensions of HZ, so degrees agree after this normalization.
VirtualRep hz_normalize(const VirtualRep& a);

}  // namespace eqcoh
