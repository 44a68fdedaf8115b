#include "eqcoh/coeff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eqcoh/error.hpp"
#include "eqcoh/smith.hpp"

namespace eqcoh {

std::string to_string(VanishingRule r) {
  switch (r) {
    case VanishingRule::AllFixedPositive: return "AllFixedPositive";
    case VanishingRule::AllFixedNegative: return "AllFixedNegative";
    case VanishingRule::EvenPositiveNonNegFixed: return "EvenPositiveNonNegFixed";
    case VanishingRule::OddWithCondition: return "OddWithCondition";
    case VanishingRule::LambdaSum: return "LambdaSum";
    case VanishingRule::SignSphere: return "SignSphere";
  }
  return "?";
}

std::optional<VanishingRule> vanishing_reason(const VirtualRep& alpha) {
  const int n = alpha.order();
  const auto divs = divisors(n);
  std::map<int, int> f;
  for (int d : divs) f[d] = fixed_dim(alpha, d);

  auto all = [&](auto pred) {
    return std::all_of(divs.begin(), divs.end(), [&](int d) { return pred(d, f[d]); });
  };

  if (all([](int, int v) { return v > 0; })) return VanishingRule::AllFixedPositive;
  if (all([](int, int v) { return v < 0; })) return VanishingRule::AllFixedNegative;
  if (all([](int d, int v) { return v % 2 == 0 && (d == 1 ? v > 0 : v >= 0); }))
    return VanishingRule::EvenPositiveNonNegFixed;

  // All fixed dimensions odd forces an even sign multiplicity, and 2 sigma is
  // lambda^{n/2}, so no separate sigma test is needed.
  if (all([](int, int v) { return v % 2 != 0; })) {
    bool ok = true;
    for (int h : divs)
      for (int k : divs)
        if (k % h == 0 && f[h] > -1 && f[k] < -1) ok = false;
    if (ok) return VanishingRule::OddWithCondition;
  }

  if (alpha.trivial_dim() == 0 && alpha.sigma() == 0 && !alpha.lambdas().empty() &&
      std::all_of(alpha.lambdas().begin(), alpha.lambdas().end(), [](auto kv) { return kv.second > 0; }))
    return VanishingRule::LambdaSum;

  if (n == 2 && alpha == VirtualRep::sign(2)) return VanishingRule::SignSphere;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char kind, int d, int e) {
    if (!first) os << " ";
    first = false;
    os << kind << "_L" << d;
    if (e != 1) os << "^" << e;
  };
  std::map<int, std::pair<int, int>> by_div;
  for (auto [d, e] : a) by_div[d].first = e;
  for (auto [d, e] : u) by_div[d].second = e;
  for (auto [d, xy] : by_div) {
    if (xy.first) emit('a', d, xy.first);
    if (xy.second) emit('u', d, xy.second);
  }
  return first ? "1" : os.str();
}

namespace {

std::vector<std::pair<int, int>> letters(const Monomial& m) {
  std::vector<std::pair<int, int>> out;
  for (auto [d, e] : m.a) out.insert(out.end(), e, {d, 0});
  for (auto [d, e] : m.u) out.insert(out.end(), e, {d, 1});
  std::sort(out.begin(), out.end());
  return out;
}

struct StarE {
  int n;
  int ell;
  std::vector<std::pair<int, int>> b;  // (divisor, multiplicity of -lambda^d)
};

StarE star_e_form(const VirtualRep& alpha) {
  VirtualRep h = hz_normalize(alpha);
  if (h.sigma() != 0) throw SectorError("degree " + alpha.str() + " has a sign component");
  StarE s{h.order(), h.trivial_dim(), {}};
  for (auto [d, m] : h.lambdas()) {
    if (m > 0) throw SectorError("degree " + alpha.str() + " has a positive lambda component");
    s.b.emplace_back(d, -m);
  }
  return s;
}

// All monomials of the degree: y_d u-factors and b_d - y_d a-factors per divisor.
std::vector<Monomial> enumerate_monomials(const StarE& s) {
  std::vector<Monomial> out;
  if (s.ell % 2 != 0 || s.ell < 0) return out;
  const int want = s.ell / 2;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == s.b.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    auto [d, b] = s.b[i];
    for (int y = 0; y <= std::min(b, left); ++y) {
      if (b - y) cur.a[d] = b - y;
      if (y) cur.u[d] = y;
      self(self, i + 1, left - y);
      cur.a.erase(d);
      cur.u.erase(d);
    }
  };
  rec(rec, 0, want);
  return out;
}

long long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, r = ((a % m) + m) % m;
  while (r != 0) {
    long long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::logic_error("not invertible");
  return ((x % m) + m) % m;
}

// Choose a generator and express residues relative to it.
void finish_cyclic(CoeffGroup& g) {
  const long long k = g.order;
  for (auto& r : g.residues) r = ((r % k) + k) % k;
  int best = -1;
  for (std::size_t j = 0; j < g.monomials.size(); ++j)
    if (std::gcd(g.residues[j], k) == 1 && (best < 0 || lex_less(g.monomials[j], g.monomials[best])))
      best = static_cast<int>(j);
  if (best >= 0) {
    long long inv = mod_inverse(g.residues[best], k);
    for (auto& r : g.residues) r = r * inv % k;
    g.generator = {{1, g.monomials[best]}};
    return;
  }
  // No single monomial generates: take a Bezout combination.
  long long val = 0;
  std::vector<long long> coef(g.monomials.size(), 0);
  for (std::size_t j = 0; j < g.monomials.size(); ++j) {
    long long r = g.residues[j];
    if (r == 0) continue;
    // extended gcd of (val, r)
    long long a0 = val, b0 = r, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b0 != 0) {
      long long q = a0 / b0;
      std::tie(a0, b0) = std::make_pair(b0, a0 - q * b0);
      std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    for (auto& c : coef) c = (c * s0) % k;
    coef[j] = (coef[j] + t0) % k;
    val = a0;
  }
  long long inv = mod_inverse(val, k);
  g.generator.clear();
  for (std::size_t j = 0; j < coef.size(); ++j) {
    long long c = ((coef[j] * inv) % k + k) % k;
    if (c != 0) g.generator.emplace_back(c, g.monomials[j]);
  }
}

CoeffGroup trivial_cases(const StarE& s, std::vector<Monomial>& mons, bool& done) {
  CoeffGroup g;
  done = true;
  if (mons.empty()) return g;
  if (mons.size() == 1 && mons[0].is_unit_free()) {
    g.kind = CoeffGroup::Kind::FreeZ;
    g.order = 0;
    g.monomials = mons;
    g.residues = {1};
    g.generator = {{1, mons[0]}};
    return g;
  }
  (void)s;
  done = false;
  return g;
}

bool prime_power(int n, int& p, int& k) {
  if (n < 2) return false;
  p = 2;
  while (n % p != 0) ++p;
  k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1;
}

}  // namespace

bool lex_less(const Monomial& x, const Monomial& y) { return letters(x) < letters(y); }

long long monomial_order_bound(int n, const Monomial& m) {
  if (m.a.empty()) return 0;
  long long l = 1;
  for (auto [d, e] : m.a) l = std::lcm(l, static_cast<long long>(d));
  return n / l;
}

bool in_star_e(const VirtualRep& alpha) {
  VirtualRep h = hz_normalize(alpha);
  if (h.sigma() != 0) return false;
  for (auto [d, m] : h.lambdas())
    if (m > 0) return false;
  return true;
}

bool is_u_degree(const VirtualRep& alpha) {
  if (alpha.dim() != 0) return false;
  for (int d : divisors(alpha.order())) {
    int f = fixed_dim(alpha, d);
    if (f < 0 || f % 2 != 0) return false;
  }
  return true;
}

namespace {

// x[j] * c = x[rhs]: one or two terms, coefficients already reduced.
struct Rel {
  int a = -1, b = -1;
  long long ca = 0, cb = 0;
};

int val_p(long long c, int p, int cap) {
  if (c == 0) return cap;
  int v = 0;
  while (v < cap && c % p == 0) c /= p, ++v;
  return v;
}

// Cyclic group presented by `rels` on M generators, localized at p. Every two
// term relation has a unit coefficient at p, so eliminating along units never
// creates longer rows; whatever survives goes through the dense Smith form.
// Returns the order p^e and each generator's residue modulo p^e.
std::pair<long long, std::vector<long long>> local_quotient(int M, const std::vector<Rel>& rels,
                                                            const std::vector<int>& torsion, int p, int k) {
  const long long P = ipow(p, k);
  auto red = [&](long long c) { return ((c % P) + P) % P; };
  std::vector<int> parent(M, -1);      // x_j = mult[j] * x_parent[j]
  std::vector<long long> mult(M, 1);
  std::vector<int> tv(torsion);        // p^tv[j] x_j = 0 for live j
  auto find = [&](auto&& self, int j) -> std::pair<int, long long> {
    if (parent[j] < 0) return {j, 1};
    auto [r, c] = self(self, parent[j]);
    parent[j] = r;
    mult[j] = red(mult[j] * c);
    return {r, mult[j]};
  };
  auto kill = [&](int j, long long c) { tv[j] = std::min(tv[j], val_p(red(c), p, k)); };

  std::vector<Rel> pending;
  auto absorb = [&](const Rel& rel) {
    auto [A, ma] = find(find, rel.a);
    long long alpha = red(rel.ca * ma);
    if (rel.b < 0) return kill(A, alpha), true;
    auto [B, mb] = find(find, rel.b);
    long long beta = red(rel.cb * mb);
    if (A == B) return kill(A, alpha + beta), true;
    if (alpha == 0) return kill(B, beta), true;
    if (beta == 0) return kill(A, alpha), true;
    if (val_p(alpha, p, k) > 0 && val_p(beta, p, k) > 0) {
      pending.push_back({A, B, alpha, beta});
      return false;
    }
    if (val_p(alpha, p, k) > 0) std::swap(A, B), std::swap(alpha, beta);
    // alpha x_A + beta x_B = 0 with alpha a unit
    long long c = red(-beta * mod_inverse(alpha, P));
    parent[A] = B;
    mult[A] = c;
    tv[B] = std::min(tv[B], std::min(k, tv[A] + val_p(c, p, k)));
    return true;
  };
  for (const Rel& r : rels) absorb(r);
  for (bool progress = true; progress && !pending.empty();) {
    progress = false;
    std::vector<Rel> todo;
    todo.swap(pending);
    for (const Rel& r : todo)
      if (absorb(r)) progress = true;
  }

  std::vector<int> live;
  std::vector<int> col(M, -1);
  for (int j = 0; j < M; ++j)
    if (parent[j] < 0 && tv[j] > 0) col[j] = static_cast<int>(live.size()), live.push_back(j);
  const int C = static_cast<int>(live.size());
  std::vector<long long> residues(M, 0);
  if (C == 0) return {1, residues};

  IntMatrix dense;
  for (int c = 0; c < C; ++c) {
    std::vector<long long> row(C, 0);
    row[c] = ipow(p, tv[live[c]]);
    dense.push_back(std::move(row));
  }
  for (const Rel& r : pending) {
    auto [A, ma] = find(find, r.a);
    auto [B, mb] = find(find, r.b);
    std::vector<long long> row(C, 0);
    if (col[A] >= 0) row[col[A]] = red(row[col[A]] + r.ca * ma);
    if (col[B] >= 0) row[col[B]] = red(row[col[B]] + r.cb * mb);
    dense.push_back(std::move(row));
  }
  SmithForm sf = smith_form(dense, C);
  int c = -1;
  long long order = 1;
  for (int i = 0; i < C; ++i) {
    long long q = ipow(p, val_p(sf.invariants[i], p, k));
    if (q == 1) continue;
    if (c >= 0) throw std::logic_error("non-cyclic local group");
    c = i, order = q;
  }
  if (c < 0) return {1, residues};
  for (int j = 0; j < M; ++j) {
    auto [r, m] = find(find, j);
    if (col[r] >= 0) residues[j] = ((m % order) * (((sf.V[col[r]][c] % order) + order) % order)) % order;
  }
  return {order, residues};
}

}  // namespace

CoeffGroup pi_star_e_smith(const VirtualRep& alpha) {
  StarE s = star_e_form(alpha);
  auto mons = enumerate_monomials(s);
  bool done;
  CoeffGroup g = trivial_cases(s, mons, done);
  if (done) return g;

  const int M = static_cast<int>(mons.size());
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int j = 0; j < M; ++j) index[letters(mons[j])] = j;

  // Torsion n / lcm(a-divisors) for each monomial, and the cross relations
  // (d/g) a_s u_d R = (s/g) a_d u_s R for d < s.
  std::vector<long long> order_of(M);
  std::vector<Rel> rels;
  for (int j = 0; j < M; ++j) {
    const Monomial& m = mons[j];
    long long l = 1;
    for (auto [d, e] : m.a) l = std::lcm(l, static_cast<long long>(d));
    order_of[j] = s.n / l;
    for (auto [sd, xs] : m.a)
      for (auto [d, yd] : m.u) {
        if (d >= sd) continue;
        Monomial other = m;
        if (--other.a[sd] == 0) other.a.erase(sd);
        if (--other.u[d] == 0) other.u.erase(d);
        other.a[d]++;
        other.u[sd]++;
        long long gg = std::gcd(d, sd);
        rels.push_back({j, index.at(letters(other)), d / gg, -(sd / gg)});
      }
  }

  long long order = 1;
  std::vector<long long> residues(M, 0);
  int n = s.n;
  for (int p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) n /= p, ++k;
    std::vector<int> tors(M);
    for (int j = 0; j < M; ++j) tors[j] = val_p(order_of[j], p, k);
    auto [q, res] = local_quotient(M, rels, tors, p, k);
    if (q == 1) continue;
    // CRT: keep residues modulo order * q
    long long e1 = q * mod_inverse(q % order, order) % (order * q);
    long long e2 = order * mod_inverse(order % q, q) % (order * q);
    if (order == 1) e1 = 0, e2 = 1;
    for (int j = 0; j < M; ++j)
      residues[j] = static_cast<long long>((static_cast<__int128>(residues[j]) * e1 + static_cast<__int128>(res[j]) * e2) %
                                           (order * q));
    order *= q;
  }
  if (order == 1) return CoeffGroup{};

  g.kind = CoeffGroup::Kind::Cyclic;
  g.order = order;
  g.monomials = mons;
  g.residues = residues;
  finish_cyclic(g);
  return g;
}

CoeffGroup pi_star_e(const VirtualRep& alpha) {
  int p, k;
  if (!prime_power(alpha.order(), p, k)) return pi_star_e_smith(alpha);

  StarE s = star_e_form(alpha);
  auto mons = enumerate_monomials(s);
  bool done;
  CoeffGroup g = trivial_cases(s, mons, done);
  if (done) return g;

  auto weight = [&](const Monomial& m) {
    long long w = 0;
    for (auto [d, e] : m.a) w += static_cast<long long>(e) * pvaluation(d, p);
    return w;
  };
  // Lowest-weight monomial: a-factors on the smallest divisors.
  int total_a = 0;
  for (auto [d, b] : s.b) total_a += b;
  total_a -= s.ell / 2;
  long long w0 = 0;
  int top = 0;
  for (auto [d, b] : s.b) {
    int take = std::min(b, total_a);
    if (take > 0) {
      w0 += static_cast<long long>(take) * pvaluation(d, p);
      top = pvaluation(d, p);
    }
    total_a -= take;
  }
  g.kind = CoeffGroup::Kind::Cyclic;
  g.order = ipow(p, k - top);
  g.monomials = mons;
  for (const auto& m : mons) {
    long long shift = weight(m) - w0;
    g.residues.push_back(shift >= k - top ? 0 : ipow(p, static_cast<int>(shift)));
  }
  finish_cyclic(g);
  return g;
}

CoeffGroup coeff_group(const VirtualRep& alpha) {
  if (vanishing_reason(alpha)) return CoeffGroup{};
  if (in_star_e(alpha)) return pi_star_e(alpha);
  if (is_u_degree(alpha)) {
    CoeffGroup g;
    g.kind = CoeffGroup::Kind::FreeZ;
    g.order = 0;
    return g;
  }
  throw SectorError("no closed form for degree " + alpha.str());
}

long long CoeffGroup::residue(const Monomial& m) const {
  for (std::size_t j = 0; j < monomials.size(); ++j)
    if (monomials[j] == m) return residues[j];
  throw DomainError("monomial " + m.str() + " does not live in this degree");
}

std::string CoeffGroup::generator_str() const {
  if (kind == Kind::Zero) return "";
  if (kind == Kind::FreeZ && generator.empty()) return "u-class";
  std::ostringstream os;
  for (std::size_t i = 0; i < generator.size(); ++i) {
    if (i) os << " + ";
    if (generator[i].first != 1) os << generator[i].first << "*";
    os << generator[i].second.str();
  }
  return os.str();
}

std::string CoeffGroup::str() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::FreeZ: return "Z, generator " + generator_str();
    case Kind::Cyclic: return "Z/" + std::to_string(order) + ", generator " + generator_str();
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::string to_string(MackeyName m, int p) {
  std::string zp = "Z/" + std::to_string(p);
  switch (m) {
    case MackeyName::Zero: return "0";
    case MackeyName::Const: return zp;
    case MackeyName::Dual: return zp + "*";
    case MackeyName::Point: return "<" + zp + ">";
    case MackeyName::Lambda: return "<Lambda>";
  }
  return "?";
}

MackeyName mackey_modp_table(int p, int dim, int fixed) {
  if (p == 2) {
    if (dim == 0) {
      if (fixed >= 0) return MackeyName::Const;
      return fixed == -1 ? MackeyName::Lambda : MackeyName::Dual;
    }
    if (dim < 0 && fixed >= 0) return MackeyName::Point;
    if (dim > 0 && fixed < -1) return MackeyName::Point;
    return MackeyName::Zero;
  }
  if (dim == 0) return fixed >= 0 ? MackeyName::Const : MackeyName::Dual;
  if (dim < 0 && fixed >= 0 && dim % 2 == 0) return MackeyName::Point;
  if (dim > 0 && fixed < -1 && dim % 2 != 0) return MackeyName::Point;
  return MackeyName::Zero;
}

MackeyName mackey_modp_table(const VirtualRep& alpha) {
  int p = alpha.order();
  if (!is_prime(p)) throw DomainError("mod p table needs a group of prime order, got " + std::to_string(p));
  return mackey_modp_table(p, alpha.dim(), fixed_dim(alpha, p));
}

MackeyName mackey_modp(int p, int dim, int fixed) {
  if (dim == 0) {
    if (fixed >= 0) return MackeyName::Const;
    return (p == 2 && fixed == -1) ? MackeyName::Lambda : MackeyName::Dual;
  }
  if (dim < 0 && fixed >= 0) return MackeyName::Point;
  if (dim > 0 && fixed < -1) return MackeyName::Point;
  return MackeyName::Zero;
}

MackeyName mackey_modp(const VirtualRep& alpha) {
  int p = alpha.order();
  if (!is_prime(p)) throw DomainError("mod p table needs a group of prime order, got " + std::to_string(p));
  return mackey_modp(p, alpha.dim(), fixed_dim(alpha, p));
}

void MackeySum::add(MackeyName m, int k) {
  if (m == MackeyName::Zero || k == 0) return;
  count[m] += k;
}

int MackeySum::operator[](MackeyName m) const {
  auto it = count.find(m);
  return it == count.end() ? 0 : it->second;
}

std::string MackeySum::str() const {
  if (count.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [m, k] : count) {
    if (!first) os << " + ";
    first = false;
    os << to_string(m, p);
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<URewrite> u_a_relation_check(int n, int k, int d) {
  if (k < 1 || d < 1 || n % k != 0) throw DomainError("k must be a divisor of n and d >= 1");
  std::vector<URewrite> out;
  auto order_of = [&](long long coef, int e) -> long long {
    if (mod(e, n) == 0) return 1;  // a_{lambda^0} = 0
    CoeffGroup g = pi_star_e(-VirtualRep::lambda(n, e));
    Monomial a;
    a.a[std::gcd(e, n)] = 1;
    long long r = (coef % g.order) * g.residue(a) % g.order;
    return g.order / std::gcd(r, g.order);
  };
  std::string u = "u_{L" + std::to_string(k) + "-L" + std::to_string(d * k) + "}";
  {
    URewrite r;
    r.lhs = u + " a_L" + std::to_string(d * k);
    r.rhs = std::to_string(d) + " a_L" + std::to_string(k);
    r.lhs_order = order_of(1, d * k);
    r.rhs_order = order_of(d, k);
    r.consistent = r.lhs_order % r.rhs_order == 0 && ((n % (d * k) != 0) || r.lhs_order == r.rhs_order);
    out.push_back(r);
  }
  {
    URewrite r;
    r.lhs = u + " u_L" + std::to_string(d * k);
    r.rhs = "u_L" + std::to_string(k);
    auto free = [&](int e) {
      if (mod(e, n) == 0) return true;  // u_{lambda^0} = 1
      return pi_star_e(VirtualRep::trivial(n, 2) - VirtualRep::lambda(n, e)).kind == CoeffGroup::Kind::FreeZ;
    };
    r.lhs_order = free(d * k) ? 0 : -1;
    r.rhs_order = free(k) ? 0 : -1;
    r.consistent = r.lhs_order == 0 && r.rhs_order == 0;
    out.push_back(r);
  }
  return out;
}

}  // namespace eqcoh
