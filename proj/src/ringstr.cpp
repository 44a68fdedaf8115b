#include "eqcoh/ringstr.hpp"

#include <algorithm>
#include <sstream>

#include "eqcoh/coeff.hpp"
#include "eqcoh/decomp.hpp"
#include "eqcoh/error.hpp"
#include "eqcoh/reps.hpp"

namespace eqcoh {

using RingPtr = std::shared_ptr<const RingSpec>;

std::string to_string(CoeffMode m) { return m == CoeffMode::Z ? "Z" : "modp"; }

RingPtr make_ring(int p, int m, CoeffMode mode, bool quaternionic) {
  if (!is_prime(p)) throw DomainError("ring computations need a prime p, got " + std::to_string(p));
  if (m < 1) throw DomainError("ring computations need m >= 1");
  auto r = std::make_shared<RingSpec>();
  r->p = p;
  r->m = m;
  r->modp = mode == CoeffMode::ModP;
  r->quaternionic = quaternionic;
  if (r->nvars() > kMaxVars) throw DomainError("m too large for the polynomial engine");
  return r;
}

Poly normalize_class(const RingPtr& ring, ClassKind kind, long long j) {
  const long long n = ring->pm();
  j = ((j % n) + n) % n;
  if (j == 0) return kind == ClassKind::A ? Poly(ring) : Poly::constant(ring, 1);
  int k = pvaluation(j, ring->p);
  long long s = j / ipow(ring->p, k);
  if (kind == ClassKind::U) return Poly::var(ring, ring->u(k));
  return static_cast<long long>(s % n) * Poly::var(ring, ring->a(k));
}

namespace {

Poly A(const RingPtr& r, long long j) { return normalize_class(r, ClassKind::A, j); }
Poly U(const RingPtr& r, long long j) { return normalize_class(r, ClassKind::U, j); }
Poly X(const RingPtr& r, int e = 1) { return Poly::var(r, r->x(), e); }
Poly one(const RingPtr& r) { return Poly::constant(r, 1); }

// a + u x for lambda^s
Poly z_factor(const RingPtr& r, long long s) { return A(r, s) + U(r, s) * X(r); }

void check_d(const RingPtr& r, int d) {
  if (d < 0 || d > r->pm()) throw DomainError("d must satisfy 0 <= d <= p^m");
}

// Theta_{i,d} a_{lambda^i}, realized as a_{lambda^{i-d}}.
Poly theta_a(const RingPtr& r, int i, int d) {
  if (r->modp) return A(r, i);
  return A(r, static_cast<long long>(i) - d);
}

Poly P(const Poly& z, const Poly& w, int p) { return (z - w).pow(p - 1) - w.pow(p - 1); }

}  // namespace

Poly q0_closed(const RingPtr& r, int d) {
  check_d(r, d);
  if (d == 0) return one(r);
  if (r->modp || d == r->pm()) {
    Poly prod = one(r), prod_a = one(r);
    for (int i = 1; i <= d; ++i) {
      prod = prod * z_factor(r, i);
      prod_a = prod_a * A(r, i);
    }
    return prod - prod_a;
  }
  // suffix[i] = prod_{s=i}^{d} z_s
  std::vector<Poly> suffix(d + 2, one(r));
  for (int s = d; s >= 1; --s) suffix[s] = z_factor(r, s) * suffix[s + 1];
  Poly out(r), prefix = one(r);
  for (int i = 0; i < d; ++i) {
    if (i > 0) prefix = prefix * theta_a(r, i, d);
    out += prefix * U(r, i + 1) * X(r) * suffix[i + 2];
  }
  return out;
}

Poly q0_via_tau(const RingPtr& r, int d) {
  check_d(r, d);
  if (d == 0) return one(r);
  using Kind = DeltaOmegaTerm::Kind;
  std::vector<int> I;
  for (int i = 1; i < d; ++i) I.push_back(i);
  std::vector<DeltaOmegaTerm> terms{{Kind::Delta, I, 0, one(r)}};
  const int k = d;  // number of trivial summands added; Omega at ell = k is zero

  auto merge = [&](std::vector<DeltaOmegaTerm>& list, DeltaOmegaTerm t) {
    if (t.coeff.is_zero()) return;
    if (t.kind == Kind::Omega && t.ell >= k) return;
    for (auto& e : list)
      if (e.kind == t.kind && e.ell == t.ell && e.I == t.I) {
        e.coeff += t.coeff;
        return;
      }
    list.push_back(std::move(t));
  };

  for (int i = 1; i < d; ++i) {
    std::vector<DeltaOmegaTerm> next;
    for (auto& t : terms) {
      std::vector<int> J;
      std::copy_if(t.I.begin(), t.I.end(), std::back_inserter(J), [i](int v) { return v != i; });
      if (t.kind == Kind::Delta) {
        merge(next, {Kind::Delta, J, 0, t.coeff * theta_a(r, i, d)});
        merge(next, {Kind::Omega, J, 0, t.coeff * U(r, i)});
      } else {
        merge(next, {Kind::Omega, J, t.ell, t.coeff * A(r, i)});
        merge(next, {Kind::Omega, J, t.ell + 1, t.coeff * U(r, i)});
      }
    }
    terms = std::move(next);
  }

  Poly out(r);
  for (auto& t : terms) {
    if (t.kind == Kind::Delta)
      out += t.coeff * U(r, d) * X(r);
    else
      out += t.coeff * (A(r, d) * X(r, t.ell + 1) + U(r, d) * X(r, t.ell + 2));
  }
  return out;
}

Poly q0_apply(const Poly& f) {
  const RingPtr r = f.ring_ptr();
  Poly out = f;
  for (int j = 0; j <= r->m; ++j) {
    Poly image = q0_closed(r, static_cast<int>(ipow(r->p, j)));
    if (r->quaternionic) image = image.square_classes();
    out = out.substitute(r->gen(j), image);
  }
  return out;
}

SeriesTerms series_terms(int p, int m, int r, bool symbolic) {
  if (r < 0 || r > m) throw DomainError("series index must satisfy 0 <= r <= m");
  RingPtr R = make_ring(p, m, CoeffMode::ModP);
  SeriesTerms s;
  s.r = r;
  std::vector<Poly> B;
  {
    Poly b = one(R);
    int upto = 0;
    for (int j = 0; j <= r; ++j) {
      for (long long i = upto + 1; i <= ipow(p, j) - 1; ++i) b = b * z_factor(R, i);
      upto = static_cast<int>(ipow(p, j) - 1);
      B.push_back(b);
    }
  }
  s.B = B[r];
  s.images_match_closed = true;
  for (int j = 0; j <= r; ++j) {
    const int d = static_cast<int>(ipow(p, j));
    Poly prod_a = one(R);
    for (int i = 1; i <= d; ++i) prod_a = prod_a * A(R, i);
    Poly t = q0_closed(R, d) + prod_a;
    if (!(t == B[j] * z_factor(R, d))) s.images_match_closed = false;
    s.T_images.push_back(std::move(t));
  }
  Poly running = one(R);
  for (int j = 0; j < r; ++j) {
    Poly a = j == 0 ? A(R, 1) : A(R, ipow(p, j)) * running;
    s.A_images.push_back(P(s.T_images[j], a, p));
    running = running * s.A_images.back();
  }
  s.factorization_holds = running == s.B;

  if (symbolic) {
    s.symbolic_maps_to_images = true;
    Poly run = one(R);
    for (int j = 0; j <= r; ++j) {
      const int d = static_cast<int>(ipow(p, j));
      Poly prod_a = one(R);
      for (int i = 1; i <= d; ++i) prod_a = prod_a * A(R, i);
      s.T_symbolic.push_back(Poly::var(R, R->gen(j)) + prod_a);
      if (!(q0_apply(s.T_symbolic.back()) == s.T_images[j])) s.symbolic_maps_to_images = false;
      if (j == r) break;
      Poly a = j == 0 ? A(R, 1) : A(R, d) * run;
      s.A_symbolic.push_back(P(s.T_symbolic[j], a, p));
      run = run * s.A_symbolic.back();
      if (!(q0_apply(s.A_symbolic.back()) == s.A_images[j])) s.symbolic_maps_to_images = false;
    }
  }
  return s;
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Rho: return "rho";
    case RelationKind::Mu: return "mu";
    case RelationKind::Lewis: return "lewis";
    case RelationKind::Lemma: return "lemma";
  }
  return "?";
}

RelationKind relation_from_string(const std::string& s) {
  if (s == "rho") return RelationKind::Rho;
  if (s == "mu") return RelationKind::Mu;
  if (s == "lewis") return RelationKind::Lewis;
  if (s == "lemma") return RelationKind::Lemma;
  throw DomainError("unknown relation '" + s + "' (expected rho, mu, lewis or lemma)");
}

namespace {

// T_j and the calligraphic A_j in the generators.
struct GeneratorSeries {
  std::vector<Poly> T, A;
};

GeneratorSeries generator_series(const RingPtr& R, int upto) {
  const int p = R->p;
  GeneratorSeries g;
  Poly run = one(R);
  for (int j = 0; j <= upto; ++j) {
    const int d = static_cast<int>(ipow(p, j));
    Poly prod_a = one(R);
    for (int i = 1; i <= d; ++i) prod_a = prod_a * A(R, i);
    g.T.push_back(Poly::var(R, R->gen(j)) + prod_a);
    Poly w = j == 0 ? A(R, d) : A(R, d) * run;
    g.A.push_back(P(g.T.back(), w, p));
    run = run * g.A.back();
  }
  return g;
}

}  // namespace

RelationCheck verify_relation(RelationKind kind, int p, int m, int r) {
  RelationCheck c;
  c.kind = kind;
  c.p = p;
  c.m = m;
  c.r = r;
  if (r < 1 || r > m) throw DomainError("relation index must satisfy 1 <= r <= m");
  switch (kind) {
    case RelationKind::Rho:
    case RelationKind::Mu: {
      const bool sq = kind == RelationKind::Mu;
      RingPtr R = make_ring(p, m, CoeffMode::ModP, sq);
      GeneratorSeries g = generator_series(R, r - 1);
      Poly prodA = one(R);
      for (int i = 0; i + 2 <= r; ++i) prodA = prodA * g.A[i];
      Poly a = A(R, ipow(p, r - 1)).pow(p - 1);
      Poly rel = Poly::var(R, R->v(r)) * Poly::var(R, R->gen(r)) - g.T[r - 1].pow(p) +
                 a * g.T[r - 1] * prodA.pow(p - 1);
      // mu_r is rho_r pushed through a_k -> a_k^2, u_k -> u_k^2, v_r -> v_r^2.
      if (sq) rel = rel.square_classes();
      Poly image = q0_apply(rel);
      c.relation = rel.str();
      c.residual = image.str();
      c.holds = image.is_zero();
      if (sq)
        c.note = "quaternionic q0 taken as the substitution a_k -> a_k^2, u_k -> u_k^2 on normalized classes";
      break;
    }
    case RelationKind::Lewis: {
      if (m != 1) throw DomainError("the lewis relation is stated for m = 1");
      RingPtr R = make_ring(p, 1, CoeffMode::Z);
      Poly g0 = Poly::var(R, R->gen(0)), g1 = Poly::var(R, R->gen(1));
      Poly prod = one(R);
      for (int i = 1; i < p; ++i) prod = prod * (static_cast<long long>(i) * A(R, 1) + g0);
      Poly rel = U(R, 1) * g1 - g0 * prod;
      Poly image = q0_apply(rel);
      c.relation = rel.str();
      c.residual = image.str();
      c.holds = image.is_zero();
      c.note = "integral coefficients, a-monomials read modulo p";
      break;
    }
    case RelationKind::Lemma: {
      RingPtr R = make_ring(p, m, CoeffMode::ModP);
      Poly a = A(R, ipow(p, r - 1)), u = U(R, ipow(p, r - 1));
      Poly lhs = one(R);
      for (int i = 1; i < p; ++i) lhs = lhs * (static_cast<long long>(i) * a + X(R) * u);
      Poly rhs = (X(R) * u).pow(p - 1) - a.pow(p - 1);
      c.relation = lhs.str() + " = " + rhs.str();
      Poly diff = lhs - rhs;
      c.residual = diff.str();
      c.holds = diff.is_zero();
      break;
    }
  }
  return c;
}

namespace {

Monomial to_monomial(const RingSpec& r, const Mono& m) {
  Monomial out;
  for (int k = 0; k < r.m; ++k) {
    int d = static_cast<int>(ipow(r.p, k));
    if (m[r.a(k)]) out.a[d] = m[r.a(k)];
    if (m[r.u(k)]) out.u[d] = m[r.u(k)];
  }
  for (int t = 1; t <= r.m; ++t)
    if (m[r.v(t)]) throw DomainError("unreduced v-class in a coefficient");
  return out;
}

// Residue of a polynomial coefficient in a cyclic (or free) coefficient group.
long long residue_of(const CoeffGroup& g, const Poly& coeff) {
  if (g.kind == CoeffGroup::Kind::Zero) return 0;
  long long total = 0;
  for (auto& [m, c] : coeff.terms()) {
    if (m[coeff.ring().x()]) throw DomainError("x left in a coefficient");
    long long res = g.residue(to_monomial(coeff.ring(), m));
    total += c * res;
    if (g.kind == CoeffGroup::Kind::Cyclic) total = mod(total, static_cast<int>(g.order));
  }
  return total;
}

// Image of the basis class at phi_i: product of the p-power images over the
// base-p digits of i. Homogeneous, unlike the Theta sum for general i.
Poly q0_basis(const RingPtr& r, int i) {
  Poly out = one(r);
  for (int l = 0; i > 0; ++l, i /= r->p)
    if (i % r->p) out = out * q0_closed(r, static_cast<int>(ipow(r->p, l))).pow(i % r->p);
  return out;
}

}  // namespace

InjectivityProfile injectivity_profile(int p, int m, int j) {
  if (j < 1 || j > m) throw DomainError("injectivity degree needs 1 <= j <= m");
  RingPtr R = make_ring(p, m, CoeffMode::Z);
  const int n = static_cast<int>(ipow(p, m));
  const int top = static_cast<int>(ipow(p, j));
  InjectivityProfile prof;
  prof.p = p;
  prof.m = m;
  prof.j = j;

  VirtualRep zeta(n);
  for (int s = 1; s < top; ++s) zeta += VirtualRep::lambda(n, s);
  zeta += VirtualRep::lambda(n, top / p);

  std::vector<int> vals;
  for (int s = 1; s < top; ++s) vals.push_back(pvaluation(s, p));
  vals.push_back(j - 1);
  std::sort(vals.begin(), vals.end());

  for (int i = top; i >= 0; --i) prof.index.push_back(i);
  const int N = static_cast<int>(prof.index.size());

  // Targets: H^{zeta - 2i}(pt) = pi_{2i - zeta}.
  std::vector<CoeffGroup> targets;
  prof.targets_match = true;
  for (int i : prof.index) {
    CoeffGroup g = coeff_group(VirtualRep::trivial(n, 2 * i) - zeta);
    if (i == top) {
      prof.t.push_back(-1);
      prof.target_orders.push_back(0);
      if (g.kind != CoeffGroup::Kind::FreeZ) prof.targets_match = false;
    } else {
      int t = m - vals[top - i - 1];
      prof.t.push_back(t);
      prof.target_orders.push_back(ipow(p, t));
      long long got = g.kind == CoeffGroup::Kind::Cyclic ? g.order : (g.kind == CoeffGroup::Kind::Zero ? 1 : 0);
      if (got != ipow(p, t)) prof.targets_match = false;
    }
    targets.push_back(std::move(g));
  }

  // Sources: H^{zeta - phi_i}(pt) with its generator times alpha_{phi_i}.
  prof.sources_match = true;
  std::vector<Poly> images;
  for (int i : prof.index) {
    CoeffGroup g = coeff_group(phi(i, n) - zeta);
    Poly cls(R);
    if (i == top) {
      prof.source_orders.push_back(0);
      if (g.kind != CoeffGroup::Kind::FreeZ) prof.sources_match = false;
      cls = Poly::var(R, R->v(j));
    } else {
      long long want = ipow(p, m - j + 1);
      prof.source_orders.push_back(want);
      if (g.kind != CoeffGroup::Kind::Cyclic || g.order != want) prof.sources_match = false;
      cls = one(R);
      for (int s = i + 1; s < top; ++s) cls = cls * A(R, s);
      cls = cls * A(R, top / p);
    }
    images.push_back(cls * q0_basis(R, i));
  }

  prof.matrix.assign(N, std::vector<long long>(N, 0));
  for (int col = 0; col < N; ++col) {
    auto parts = images[col].by_x_power();
    for (int row = 0; row < N; ++row) {
      auto it = parts.find(prof.index[row]);
      if (it == parts.end()) continue;
      prof.matrix[row][col] = residue_of(targets[row], it->second);
    }
  }

  prof.lower_triangular = true;
  for (int row = 0; row < N; ++row)
    for (int col = row + 1; col < N; ++col)
      if (prof.matrix[row][col] != 0) prof.lower_triangular = false;

  prof.diagonal_matches = true;
  for (int k = 0; k < N; ++k) {
    long long entry = prof.matrix[k][k];
    if (k == 0) {
      prof.diagonal_expected.push_back(1);
      if (entry != 1 && entry != -1) prof.diagonal_matches = false;
      continue;
    }
    int e = prof.t[k] - m + j - 1;
    prof.diagonal_expected.push_back(ipow(p, e));
    if (entry == 0 || pvaluation(entry, p) != e) prof.diagonal_matches = false;
  }
  prof.injective = prof.lower_triangular && prof.diagonal_matches && prof.sources_match && prof.targets_match;
  return prof;
}

std::string BasisMonomial::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto [d, e] : factors) {
    if (!s.empty()) s += "*";
    s += "alpha" + std::to_string(d);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

BasisMonomial basis_monomial(int k, int i, int p, int m) {
  if (!is_prime(p) || m < 1) throw DomainError("basis monomials need a prime p and m >= 1");
  const int n = static_cast<int>(ipow(p, m));
  if (k < 0 || i < 0 || i >= n) throw DomainError("basis monomial needs k >= 0 and 0 <= i < p^m");
  BasisMonomial b;
  if (k > 0) b.factors.emplace_back(n, k);
  std::vector<int> digits;
  for (int t = i; t > 0; t /= p) digits.push_back(t % p);
  for (int l = static_cast<int>(digits.size()) - 1; l >= 0; --l)
    if (digits[l] > 0) b.factors.emplace_back(static_cast<int>(ipow(p, l)), digits[l]);
  b.res_degree = k * n + i;
  return b;
}

ConjRing conj_ring(int n_cap) {
  if (n_cap < 0) throw DomainError("conj_ring needs n >= 0");
  ConjRing c;
  Decomposition dec = decompose_conj(n_cap);
  c.matches_decomposition = static_cast<int>(dec.summands.size()) == n_cap + 1;
  for (int k = 0; k <= n_cap; ++k) {
    VirtualRep deg = VirtualRep::trivial(2, k) + VirtualRep::sign(2, k);
    c.degrees.push_back(deg.str());
    c.res_degrees.push_back(k);
    if (c.matches_decomposition && !(dec.summands[k] == deg)) c.matches_decomposition = false;
  }
  return c;
}

}  // namespace eqcoh
