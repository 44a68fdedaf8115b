#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace eqcoh {

// Polynomial ring over the normalized classes of G = C_{p^m}:
//   a_k = a_{lambda^{p^k}}, u_k = u_{lambda^{p^k}}  (0 <= k < m)
//   v_r = u_{lambda^{p^{r-1}} - lambda^{p^r}}       (1 <= r <= m)
//   x, and the projective-space generators g_j for d = p^j (0 <= j <= m).
// With integer coefficients a monomial containing a_k is read modulo
// p^{m-k}; mod p everything is read modulo p. v_r is rewritten eagerly:
// v_r u_r -> u_{r-1} first, otherwise v_r a_r -> p a_{r-1}; v_m is u_{m-1}.
// These rewrites are not confluent without the au cross relation, which the
// ring deliberately omits.
struct RingSpec {
  int p = 2, m = 1;
  bool modp = false;
  bool quaternionic = false;  // only changes how the generators g_j print

  int nvars() const { return 4 * m + 2; }
  int a(int k) const { return k; }
  int u(int k) const { return m + k; }
  int v(int r) const { return 2 * m + r - 1; }
  int x() const { return 3 * m; }
  int gen(int j) const { return 3 * m + 1 + j; }
  std::string var_name(int i) const;
  long long pm() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

constexpr int kMaxVars = 18;
using Mono = std::array<std::uint16_t, kMaxVars>;

struct MonoOrder {  // graded lex, larger first
  bool operator()(const Mono& l, const Mono& r) const;
};

class Poly {
 public:
  Poly() : Poly(std::make_shared<RingSpec>()) {}  // zero in the smallest ring
  explicit Poly(std::shared_ptr<const RingSpec> ring);
  static Poly constant(std::shared_ptr<const RingSpec> ring, long long c);
  static Poly var(std::shared_ptr<const RingSpec> ring, int index, int power = 1);

  const RingSpec& ring() const { return *ring_; }
  std::shared_ptr<const RingSpec> ring_ptr() const { return ring_; }
  const std::map<Mono, long long, MonoOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Mono mono, long long coeff);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(long long c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(long long c, Poly a) { return a *= c; }
  Poly pow(int e) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // Replace variable `index` by `value` everywhere.
  Poly substitute(int index, const Poly& value) const;
  // Same polynomial read in another ring (e.g. integral -> mod p).
  Poly reduce_to(std::shared_ptr<const RingSpec> ring) const;
  // Double every exponent of a_k, u_k, v_r.
  Poly square_classes() const;
  // Set a_k -> 0 and u_k, v_r -> 1.
  Poly underlying() const;

  std::string str() const;
  // Coefficient list of x^e for each e, with a polynomial in the other variables.
  std::map<int, Poly> by_x_power() const;

 private:
  std::shared_ptr<const RingSpec> ring_;
  std::map<Mono, long long, MonoOrder> terms_;
};

}  // namespace eqcoh
